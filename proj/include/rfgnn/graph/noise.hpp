#pragma once

#include <cstdint>

#include "rfgnn/graph/graph.hpp"

namespace rfgnn {

/// Copy of `g` with unit Gaussian noise added to exactly
/// floor(fraction * N * M) uniformly chosen feature entries. Labels, edges
/// and masks are untouched; the input graph is not modified.
MultiRelationGraph inject_feature_noise(const MultiRelationGraph& g,
                                        double fraction, std::uint64_t seed);

} // namespace rfgnn
