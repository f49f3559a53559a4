#pragma once

#include <span>

#include "rfgnn/graph/graph.hpp"

namespace rfgnn {

struct SubgraphResult {
    MultiRelationGraph graph;
    std::vector<std::int32_t> old_to_new; // length N, -1 when dropped
    std::vector<std::int32_t> new_to_old; // kept nodes, ascending old ids
};

/// Node-induced subgraph: keeps exactly the edges with both endpoints in
/// `nodes` (per relation); features, labels and masks are restricted and
/// re-indexed. Nodes must be distinct and in range; re-indexing follows
/// ascending old id.
SubgraphResult induced_subgraph(const MultiRelationGraph& g,
                                std::span<const std::int32_t> nodes);

} // namespace rfgnn
