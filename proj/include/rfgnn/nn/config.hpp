#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfgnn {

enum class BackboneKind { gcn, sgc, rgcn };

std::string to_string(BackboneKind kind);
BackboneKind backbone_kind_from_string(const std::string& name);

struct BackboneConfig {
    BackboneKind kind = BackboneKind::gcn;
    std::int32_t layers = 2;
    std::int32_t hidden = 128;
    std::int32_t out_dim = 128;
    double dropout = 0.5;
    std::int32_t sgc_power = 2;

    void validate() const;

    /// Width chain in -> hidden ... -> out_dim (layers+1 entries).
    std::vector<std::int32_t> dims(std::int32_t in_dim) const;

    bool operator==(const BackboneConfig&) const = default;
};

} // namespace rfgnn
