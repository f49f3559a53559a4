#include "rfgnn/nn/config.hpp"

#include <vector>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

std::string to_string(BackboneKind kind) {
    switch (kind) {
    case BackboneKind::gcn:
        return "gcn";
    case BackboneKind::sgc:
        return "sgc";
    case BackboneKind::rgcn:
        return "rgcn";
    }
    return "?";
}

BackboneKind backbone_kind_from_string(const std::string& name) {
    if (name == "gcn") return BackboneKind::gcn;
    if (name == "sgc") return BackboneKind::sgc;
    if (name == "rgcn") return BackboneKind::rgcn;
    throw ParameterError(concat("unknown backbone '", name, "' (gcn|sgc|rgcn)"));
}

void BackboneConfig::validate() const {
    RFG_CHECK(layers >= 1, ParameterError, "backbone layers must be >= 1, got ", layers);
    RFG_CHECK(hidden >= 1 && out_dim >= 1, ParameterError,
              "backbone widths must be >= 1, got hidden=", hidden,
              " out_dim=", out_dim);
    RFG_CHECK(dropout >= 0.0 && dropout < 1.0, ParameterError,
              "dropout must be in [0,1), got ", dropout);
    RFG_CHECK(sgc_power >= 1, ParameterError, "sgc power must be >= 1, got ",
              sgc_power);
}

std::vector<std::int32_t> BackboneConfig::dims(std::int32_t in_dim) const {
    std::vector<std::int32_t> out;
    out.push_back(in_dim);
    for (std::int32_t l = 1; l < layers; ++l) out.push_back(hidden);
    out.push_back(out_dim);
    return out;
}

} // namespace rfgnn
