#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rfgnn/ensemble/train_config.hpp"
#include "rfgnn/graph/synthetic.hpp"

namespace rfgnn {

/// Everything a CLI run needs. Exactly one of dataset_dir / synthetic must
/// be set. Each seed becomes the master seed of one independent run.
struct RunConfig {
    std::string dataset_dir;
    std::optional<SyntheticParams> synthetic;
    Variant variant = Variant::full;
    TrainConfig train;
    std::vector<std::uint64_t> seeds{1};
    std::string out_dir;
    int threads = 1;
    bool force = false;

    void validate() const;
};

/// Paper presets: per-dataset alpha/beta/gamma (and S=10).
void apply_preset(TrainConfig& cfg, const std::string& name);

/// Config-file form; mirrors RunConfig. Unknown keys are rejected.
RunConfig run_config_from_json(const nlohmann::json& j);

/// Echoed into every report.
nlohmann::json run_config_to_json(const RunConfig& cfg);

nlohmann::json synthetic_params_to_json(const SyntheticParams& p);
SyntheticParams synthetic_params_from_json(const nlohmann::json& j);

} // namespace rfgnn
