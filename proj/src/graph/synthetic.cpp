#include "rfgnn/graph/synthetic.hpp"

#include <algorithm>
#include <numeric>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/rng.hpp"

namespace rfgnn {

namespace {

// Sub-stream tags off the master seed.
enum : std::uint64_t {
    kClassStream = 1,
    kEdgeStream = 2,
    kFeatureStream = 3,
    kMaskStream = 4,
};

} // namespace

MultiRelationGraph generate_synthetic(const SyntheticParams& p) {
    RFG_CHECK(p.p_in >= 0.0 && p.p_in <= 1.0 && p.p_out >= 0.0 && p.p_out <= 1.0,
              ParameterError, "edge probabilities must be in [0,1], got p_in=",
              p.p_in, " p_out=", p.p_out);
    RFG_CHECK(p.classes >= 2, ParameterError, "need at least two classes");
    RFG_CHECK(p.nodes >= p.classes, ParameterError,
              "need at least one node per class");
    RFG_CHECK(p.informative_dims >= 1, ParameterError,
              "need at least one informative dimension");
    RFG_CHECK(p.redundant_dims >= 0 && p.noise_dims >= 0, ParameterError,
              "negative feature group size");
    RFG_CHECK(p.relations >= 1, ParameterError, "need at least one relation");

    SplitRng root(p.seed);
    MultiRelationGraph g;
    g.num_nodes = p.nodes;
    g.num_classes = p.classes;
    g.num_relations = p.relations;
    g.num_features = p.informative_dims + p.redundant_dims + p.noise_dims;

    // Balanced classes, then shuffled so class id is independent of node id.
    g.labels.resize(static_cast<std::size_t>(p.nodes));
    for (std::int32_t i = 0; i < p.nodes; ++i) {
        g.labels[static_cast<std::size_t>(i)] = i % p.classes;
    }
    {
        SplitRng rng = root.split(kClassStream);
        for (std::int32_t i = p.nodes - 1; i > 0; --i) {
            const auto j = static_cast<std::int32_t>(
                rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(g.labels[static_cast<std::size_t>(i)],
                      g.labels[static_cast<std::size_t>(j)]);
        }
    }

    g.edges.resize(static_cast<std::size_t>(p.relations));
    for (std::int32_t k = 0; k < p.relations; ++k) {
        SplitRng rng = root.split(kEdgeStream).split(static_cast<std::uint64_t>(k));
        auto& rel = g.edges[static_cast<std::size_t>(k)];
        for (std::int32_t i = 0; i < p.nodes; ++i) {
            for (std::int32_t j = i + 1; j < p.nodes; ++j) {
                const bool same = g.labels[static_cast<std::size_t>(i)] ==
                                  g.labels[static_cast<std::size_t>(j)];
                if (rng.next_double() < (same ? p.p_in : p.p_out)) {
                    rel.push_back({i, j});
                }
            }
        }
    }

    {
        SplitRng rng = root.split(kFeatureStream);
        // Per-class means for informative dims.
        DenseMatrix means(static_cast<std::size_t>(p.classes),
                          static_cast<std::size_t>(p.informative_dims));
        for (std::size_t i = 0; i < means.size(); ++i) {
            means.data()[i] = p.class_separation * rng.next_normal();
        }
        g.features = DenseMatrix(static_cast<std::size_t>(p.nodes),
                                 static_cast<std::size_t>(g.num_features));
        for (std::int32_t i = 0; i < p.nodes; ++i) {
            const auto cls = static_cast<std::size_t>(g.labels[static_cast<std::size_t>(i)]);
            double* row = g.features.row(static_cast<std::size_t>(i));
            for (std::int32_t d = 0; d < p.informative_dims; ++d) {
                row[d] = means(cls, static_cast<std::size_t>(d)) + rng.next_normal();
            }
            for (std::int32_t d = 0; d < p.redundant_dims; ++d) {
                // Noisy copy of a round-robin source dim.
                const auto src = static_cast<std::size_t>(d % p.informative_dims);
                row[p.informative_dims + d] = row[src] + 0.5 * rng.next_normal();
            }
            for (std::int32_t d = 0; d < p.noise_dims; ++d) {
                row[p.informative_dims + p.redundant_dims + d] = rng.next_normal();
            }
        }
    }

    {
        // 1:1:8 split over a shuffled node order.
        SplitRng rng = root.split(kMaskStream);
        std::vector<std::int32_t> order(static_cast<std::size_t>(p.nodes));
        std::iota(order.begin(), order.end(), 0);
        for (std::int32_t i = p.nodes - 1; i > 0; --i) {
            const auto j = static_cast<std::int32_t>(
                rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(j)]);
        }
        const auto tenth = static_cast<std::size_t>(p.nodes / 10);
        g.train_mask.assign(order.begin(), order.begin() + tenth);
        g.val_mask.assign(order.begin() + tenth, order.begin() + 2 * tenth);
        g.test_mask.assign(order.begin() + 2 * tenth, order.end());
        std::sort(g.train_mask.begin(), g.train_mask.end());
        std::sort(g.val_mask.begin(), g.val_mask.end());
        std::sort(g.test_mask.begin(), g.test_mask.end());
    }

    g.class_names.resize(static_cast<std::size_t>(p.classes));
    g.class_names[0] = "human";
    if (p.classes == 2) {
        g.class_names[1] = "bot";
    } else {
        for (std::int32_t c = 1; c < p.classes; ++c) {
            g.class_names[static_cast<std::size_t>(c)] = concat("class", c);
        }
    }

    g.validate();
    return g;
}

} // namespace rfgnn
