#pragma once

#include <cstdint>
#include <string>

#include "rfgnn/nn/config.hpp"

namespace rfgnn {

/// Ablation variants: plain bagging (E), bagging over randomized subgraphs
/// (ES), and the full model with the feature-complement aligning FCN.
enum class Variant { ensemble_only, ensemble_subgraph, full };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

struct TrainConfig {
    double alpha = 0.8;  // node keep rate
    double beta = 0.8;   // feature keep rate
    double gamma = 0.9;  // edge keep rate
    std::int32_t s = 10; // branch count
    std::int32_t epochs = 200;
    double lr = 0.01;
    double weight_decay = 5e-4;
    double dropout = 0.5;
    BackboneConfig backbone;
    std::uint64_t master_seed = 1;

    void validate() const;

    bool operator==(const TrainConfig&) const = default;
};

} // namespace rfgnn
