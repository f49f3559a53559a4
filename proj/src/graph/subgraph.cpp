#include "rfgnn/graph/subgraph.hpp"

#include <algorithm>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/ops.hpp"

namespace rfgnn {

SubgraphResult induced_subgraph(const MultiRelationGraph& g,
                                std::span<const std::int32_t> nodes) {
    RFG_CHECK(!nodes.empty(), ParameterError, "induced_subgraph: empty node set");

    SubgraphResult res;
    res.new_to_old.assign(nodes.begin(), nodes.end());
    std::sort(res.new_to_old.begin(), res.new_to_old.end());
    res.old_to_new.assign(static_cast<std::size_t>(g.num_nodes), -1);
    for (std::size_t i = 0; i < res.new_to_old.size(); ++i) {
        const auto old_id = res.new_to_old[i];
        RFG_CHECK(old_id >= 0 && old_id < g.num_nodes, DimensionError,
                  "node ", old_id, " out of range [0,", g.num_nodes, ")");
        RFG_CHECK(res.old_to_new[static_cast<std::size_t>(old_id)] == -1,
                  ParameterError, "node ", old_id, " listed twice");
        res.old_to_new[static_cast<std::size_t>(old_id)] =
            static_cast<std::int32_t>(i);
    }

    MultiRelationGraph& sub = res.graph;
    sub.num_nodes = static_cast<std::int32_t>(res.new_to_old.size());
    sub.num_features = g.num_features;
    sub.num_relations = g.num_relations;
    sub.num_classes = g.num_classes;
    sub.class_names = g.class_names;
    sub.features = select_rows(g.features, res.new_to_old);

    sub.labels.resize(res.new_to_old.size());
    for (std::size_t i = 0; i < res.new_to_old.size(); ++i) {
        sub.labels[i] = g.labels[static_cast<std::size_t>(res.new_to_old[i])];
    }

    sub.edges.resize(static_cast<std::size_t>(g.num_relations));
    for (std::int32_t k = 0; k < g.num_relations; ++k) {
        for (const auto& e : g.edges[static_cast<std::size_t>(k)]) {
            const auto s = res.old_to_new[static_cast<std::size_t>(e.src)];
            const auto d = res.old_to_new[static_cast<std::size_t>(e.dst)];
            if (s >= 0 && d >= 0) {
                sub.edges[static_cast<std::size_t>(k)].push_back({s, d});
            }
        }
    }

    auto restrict_mask = [&](const std::vector<std::int32_t>& mask) {
        std::vector<std::int32_t> out;
        for (const auto node : mask) {
            const auto idx = res.old_to_new[static_cast<std::size_t>(node)];
            if (idx >= 0) out.push_back(idx);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    sub.train_mask = restrict_mask(g.train_mask);
    sub.val_mask = restrict_mask(g.val_mask);
    sub.test_mask = restrict_mask(g.test_mask);
    return res;
}

} // namespace rfgnn
