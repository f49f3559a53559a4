#include "rfgnn/graph/graph.hpp"

#include <algorithm>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

namespace {

void check_mask(const std::vector<std::int32_t>& mask, const char* name,
                const MultiRelationGraph& g) {
    for (const auto node : mask) {
        RFG_CHECK(node >= 0 && node < g.num_nodes, DimensionError,
                  name, " mask node ", node, " out of range [0,", g.num_nodes, ")");
        RFG_CHECK(g.labels[static_cast<std::size_t>(node)] >= 0, ParameterError,
                  name, " mask node ", node, " has no label");
    }
}

} // namespace

void MultiRelationGraph::validate() const {
    RFG_CHECK(num_relations >= 1, ParameterError, "graph needs at least one relation");
    RFG_CHECK(edges.size() == static_cast<std::size_t>(num_relations), DimensionError,
              "edge sets: ", edges.size(), ", expected K=", num_relations);
    RFG_CHECK(features.rows() == static_cast<std::size_t>(num_nodes) &&
                  features.cols() == static_cast<std::size_t>(num_features),
              DimensionError, "feature matrix is ", shape_str(features),
              ", expected (", num_nodes, "x", num_features, ")");
    RFG_CHECK(labels.size() == static_cast<std::size_t>(num_nodes), DimensionError,
              "labels length ", labels.size(), ", expected ", num_nodes);
    RFG_CHECK(features.all_finite(), ParameterError, "features contain NaN/Inf");

    for (std::int32_t k = 0; k < num_relations; ++k) {
        for (const auto& e : edges[static_cast<std::size_t>(k)]) {
            RFG_CHECK(e.src >= 0 && e.src < num_nodes && e.dst >= 0 && e.dst < num_nodes,
                      DimensionError, "relation ", k, " edge (", e.src, ",", e.dst,
                      ") out of range [0,", num_nodes, ")");
        }
    }
    for (const auto label : labels) {
        RFG_CHECK(label >= -1 && label < num_classes, ParameterError,
                  "label ", label, " outside [-1,", num_classes, ")");
    }

    check_mask(train_mask, "train", *this);
    check_mask(val_mask, "val", *this);
    check_mask(test_mask, "test", *this);
    std::vector<std::int32_t> seen(static_cast<std::size_t>(num_nodes), 0);
    for (const auto* mask : {&train_mask, &val_mask, &test_mask}) {
        for (const auto node : *mask) {
            RFG_CHECK(seen[static_cast<std::size_t>(node)]++ == 0, ParameterError,
                      "node ", node, " appears in more than one mask");
        }
    }
}

} // namespace rfgnn
