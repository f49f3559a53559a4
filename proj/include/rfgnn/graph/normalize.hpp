#pragma once

#include <span>

#include "rfgnn/core/sparse.hpp"
#include "rfgnn/graph/graph.hpp"

namespace rfgnn {

/// Symmetrically normalized adjacency with self-loops,
/// D^{-1/2} (A + I) D^{-1/2}, where A is the symmetrized binary adjacency of
/// the given edges. Every node keeps a self-loop, so no row is zero.
SparseAdjacency normalize_adjacency(std::span<const Edge> edges, std::int32_t n);

} // namespace rfgnn
