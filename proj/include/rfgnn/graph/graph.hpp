#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfgnn/core/dense.hpp"

namespace rfgnn {

struct Edge {
    std::int32_t src = 0;
    std::int32_t dst = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Attributed graph with K typed edge sets and disjoint train/val/test
/// masks. Immutable after construction by convention: trainers share it
/// read-only.
struct MultiRelationGraph {
    std::int32_t num_nodes = 0;
    std::int32_t num_features = 0;
    std::int32_t num_relations = 0;
    std::int32_t num_classes = 0;
    DenseMatrix features;                       // N x M
    std::vector<std::vector<Edge>> edges;       // one vector per relation
    std::vector<std::int32_t> labels;           // length N, -1 = unlabeled
    std::vector<std::int32_t> train_mask;       // sorted node ids
    std::vector<std::int32_t> val_mask;
    std::vector<std::int32_t> test_mask;
    std::vector<std::string> class_names;       // optional, size C when present

    /// Throws on any broken invariant (endpoint range, mask overlap,
    /// unlabeled masked node, non-finite feature).
    void validate() const;

    bool operator==(const MultiRelationGraph&) const = default;
};

} // namespace rfgnn
