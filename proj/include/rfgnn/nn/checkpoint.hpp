#pragma once

#include <json.hpp>

#include "rfgnn/core/adamw.hpp"
#include "rfgnn/nn/config.hpp"

namespace rfgnn {

nlohmann::json backbone_config_to_json(const BackboneConfig& cfg);
BackboneConfig backbone_config_from_json(const nlohmann::json& j);

/// {"<name>": {"rows": r, "cols": c, "data": [row-major values]}, ...}.
/// Values serialize in shortest round-trip form, so save/load is lossless.
nlohmann::json params_to_json(const std::vector<ParamTensor*>& params);

/// Fills the listed tensors from `j`, matching by name. Every tensor must be
/// present with the exact shape; unknown names are an error.
void params_from_json(const nlohmann::json& j,
                      const std::vector<ParamTensor*>& params);

} // namespace rfgnn
