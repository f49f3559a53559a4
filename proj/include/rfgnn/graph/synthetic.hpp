#pragma once

#include <cstdint>

#include "rfgnn/graph/graph.hpp"

namespace rfgnn {

/// Contextual stochastic block model used as the desk-scale benchmark.
///
/// Nodes get balanced class assignments; an intra-class pair is connected
/// with probability p_in, an inter-class pair with p_out. Features come in
/// three groups: informative dims (class mean drawn from
/// N(0, class_separation^2) plus unit Gaussian), redundant dims (a noisy
/// copy of an informative dim) and pure-noise dims. Masks follow the 1:1:8
/// train/val/test partition.
struct SyntheticParams {
    std::int32_t nodes = 600;
    std::int32_t classes = 2;
    double p_in = 0.02;
    double p_out = 0.002;
    std::int32_t informative_dims = 16;
    std::int32_t redundant_dims = 32;
    std::int32_t noise_dims = 80;
    double class_separation = 1.0;
    std::int32_t relations = 1;
    std::uint64_t seed = 1;
};

MultiRelationGraph generate_synthetic(const SyntheticParams& params);

} // namespace rfgnn
