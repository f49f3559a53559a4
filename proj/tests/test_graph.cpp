#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/ops.hpp"
#include "rfgnn/graph/dataset_io.hpp"
#include "rfgnn/graph/noise.hpp"
#include "rfgnn/graph/normalize.hpp"
#include "rfgnn/graph/subgraph.hpp"
#include "rfgnn/graph/synthetic.hpp"
#include "test_util.hpp"

using namespace rfgnn;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("rfgnn_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// The repo-relative fixture; tests run from the build tree.
fs::path tiny12_dir() {
    fs::path p = fs::path(RFGNN_SOURCE_DIR) / "data" / "tiny12";
    REQUIRE(fs::is_directory(p));
    return p;
}

} // namespace

TEST_CASE("load_dataset reads the shipped 12-node fixture") {
    const auto g = load_dataset(tiny12_dir());
    CHECK(g.num_nodes == 12);
    CHECK(g.num_relations == 2);
    CHECK(g.num_features == 4);
    CHECK(g.num_classes == 2);
    // The file carries 13 relation-0 lines with one duplicate; dedup keeps 12,
    // including the self-loop (0,0).
    CHECK(g.edges[0].size() == 12);
    CHECK(std::find(g.edges[0].begin(), g.edges[0].end(), Edge{0, 0}) !=
          g.edges[0].end());
    CHECK(g.edges[1].size() == 7);
    CHECK(g.train_mask == std::vector<std::int32_t>{0, 1, 6, 7});
}

TEST_CASE("load_dataset: count mismatch and endpoint errors name the spot") {
    auto dir = scratch_dir("bad_counts");
    const auto good = load_dataset(tiny12_dir());
    save_dataset(dir, good);

    // One extra labeled node.
    {
        std::ofstream out(dir / "labels.csv", std::ios::app);
        out << "12,1\n";
    }
    CHECK_THROWS_WITH_AS(load_dataset(dir), doctest::Contains("13 rows"), LoadError);
    save_dataset(dir, good);

    {
        std::ofstream out(dir / "edges.csv", std::ios::app);
        out << "5,99,0\n";
    }
    try {
        load_dataset(dir);
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("edges.csv:21") != std::string::npos);
        CHECK(std::string(e.what()).find("99") != std::string::npos);
    }
    save_dataset(dir, good);

    {
        std::ofstream out(dir / "features.csv");
        out << "1,2,3,oops\n";
        for (int i = 1; i < 12; ++i) out << "0,0,0,0\n";
    }
    CHECK_THROWS_WITH_AS(load_dataset(dir), doctest::Contains("features.csv:1"),
                         LoadError);

    CHECK_THROWS_AS(load_dataset(dir / "does_not_exist"), LoadError);
}

TEST_CASE("save/load round trip is lossless") {
    SyntheticParams params;
    params.nodes = 40;
    params.relations = 2;
    params.seed = 99;
    const auto g = generate_synthetic(params);
    auto dir = scratch_dir("roundtrip");
    save_dataset(dir, g);
    const auto back = load_dataset(dir);
    CHECK(back == g);
}

TEST_CASE("normalize_adjacency: single node, two-node pair, random oracle") {
    const auto single = normalize_adjacency({}, 1);
    CHECK(single.nnz() == 1);
    CHECK(single.vals[0] == 1.0);

    const std::vector<Edge> pair{{0, 1}};
    const auto two = normalize_adjacency(pair, 2);
    const auto dense = two.densify();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(dense(i, j) == doctest::Approx(0.5).epsilon(1e-15));
        }
    }

    SplitRng rng(17);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Edge> edges;
        for (std::int32_t i = 0; i < 20; ++i) {
            for (std::int32_t j = 0; j < 20; ++j) {
                if (i != j && rng.next_double() < 0.1) edges.push_back({i, j});
            }
        }
        const auto adj = normalize_adjacency(edges, 20);
        adj.validate();

        // Dense oracle: D^{-1/2} (A+I) D^{-1/2} on the symmetrized adjacency.
        DenseMatrix a(20, 20);
        for (const auto& e : edges) {
            a(static_cast<std::size_t>(e.src), static_cast<std::size_t>(e.dst)) = 1.0;
            a(static_cast<std::size_t>(e.dst), static_cast<std::size_t>(e.src)) = 1.0;
        }
        for (std::size_t i = 0; i < 20; ++i) a(i, i) = 1.0;
        std::vector<double> deg(20, 0.0);
        for (std::size_t i = 0; i < 20; ++i) {
            for (std::size_t j = 0; j < 20; ++j) deg[i] += a(i, j);
        }
        DenseMatrix expected(20, 20);
        for (std::size_t i = 0; i < 20; ++i) {
            for (std::size_t j = 0; j < 20; ++j) {
                expected(i, j) = a(i, j) / std::sqrt(deg[i]) / std::sqrt(deg[j]);
            }
        }
        const auto got = adj.densify();
        CHECK(test::max_abs_diff(got, expected) < 1e-12);

        // Symmetric; every row sum positive (self-loop) and at most sqrt of
        // the row's degree (the sum is 1 exactly on regular graphs).
        CHECK(test::max_abs_diff(got, transpose(got)) < 1e-12);
        for (std::size_t i = 0; i < 20; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < 20; ++j) sum += got(i, j);
            CHECK(sum > 0.0);
            CHECK(sum <= std::sqrt(deg[i]) + 1e-12);
        }
    }
}

TEST_CASE("induced_subgraph: identity, path endpoints, brute-force oracle") {
    SyntheticParams params;
    params.nodes = 30;
    params.p_in = 0.2;
    params.p_out = 0.1;
    params.seed = 3;
    const auto g = generate_synthetic(params);

    std::vector<std::int32_t> all(static_cast<std::size_t>(g.num_nodes));
    for (std::int32_t i = 0; i < g.num_nodes; ++i) all[static_cast<std::size_t>(i)] = i;
    const auto full = induced_subgraph(g, all);
    CHECK(full.graph == g);
    for (std::int32_t i = 0; i < g.num_nodes; ++i) {
        CHECK(full.old_to_new[static_cast<std::size_t>(i)] == i);
    }

    MultiRelationGraph path;
    path.num_nodes = 3;
    path.num_features = 1;
    path.num_relations = 1;
    path.num_classes = 2;
    path.features = DenseMatrix(3, 1);
    path.labels = {0, 1, 0};
    path.edges = {{{0, 1}, {1, 2}}};
    const std::vector<std::int32_t> ends{0, 2};
    const auto sub = induced_subgraph(path, ends);
    CHECK(sub.graph.num_nodes == 2);
    CHECK(sub.graph.edges[0].empty());

    SplitRng rng(8);
    const auto nodes = sample_without_replacement(rng, g.num_nodes, 17);
    const auto res = induced_subgraph(g, nodes);
    std::size_t expected_edges = 0;
    for (const auto& e : g.edges[0]) {
        const bool s_in = std::binary_search(nodes.begin(), nodes.end(), e.src);
        const bool d_in = std::binary_search(nodes.begin(), nodes.end(), e.dst);
        if (s_in && d_in) ++expected_edges;
    }
    CHECK(res.graph.edges[0].size() == expected_edges);

    // Idempotent on its own node set.
    std::vector<std::int32_t> sub_all(static_cast<std::size_t>(res.graph.num_nodes));
    for (std::int32_t i = 0; i < res.graph.num_nodes; ++i) {
        sub_all[static_cast<std::size_t>(i)] = i;
    }
    CHECK(induced_subgraph(res.graph, sub_all).graph == res.graph);

    CHECK_THROWS_AS(induced_subgraph(g, {}), ParameterError);
}

TEST_CASE("generate_synthetic: cliques, rates, determinism, masks") {
    SyntheticParams cliques;
    cliques.nodes = 4;
    cliques.classes = 2;
    cliques.p_in = 1.0;
    cliques.p_out = 0.0;
    cliques.informative_dims = 2;
    cliques.redundant_dims = 0;
    cliques.noise_dims = 0;
    const auto cg = generate_synthetic(cliques);
    CHECK(cg.edges[0].size() == 2); // two 2-cliques -> one edge each
    for (const auto& e : cg.edges[0]) {
        CHECK(cg.labels[static_cast<std::size_t>(e.src)] ==
              cg.labels[static_cast<std::size_t>(e.dst)]);
    }

    SyntheticParams params; // benchmark defaults: 600 nodes, p 0.02/0.002
    params.seed = 11;
    const auto g = generate_synthetic(params);
    std::size_t intra = 0, inter = 0, intra_pairs = 0, inter_pairs = 0;
    for (std::int32_t i = 0; i < g.num_nodes; ++i) {
        for (std::int32_t j = i + 1; j < g.num_nodes; ++j) {
            const bool same = g.labels[static_cast<std::size_t>(i)] ==
                              g.labels[static_cast<std::size_t>(j)];
            (same ? intra_pairs : inter_pairs)++;
        }
    }
    for (const auto& e : g.edges[0]) {
        const bool same = g.labels[static_cast<std::size_t>(e.src)] ==
                          g.labels[static_cast<std::size_t>(e.dst)];
        (same ? intra : inter)++;
    }
    const double intra_rate = static_cast<double>(intra) / static_cast<double>(intra_pairs);
    const double inter_rate = static_cast<double>(inter) / static_cast<double>(inter_pairs);
    CHECK(intra_rate > 0.02 * 0.7);
    CHECK(intra_rate < 0.02 * 1.3);
    CHECK(inter_rate > 0.002 * 0.7);
    CHECK(inter_rate < 0.002 * 1.3);

    CHECK(g.train_mask.size() == 60);
    CHECK(g.val_mask.size() == 60);
    CHECK(g.test_mask.size() == 480);

    CHECK(generate_synthetic(params) == g);
    params.seed = 12;
    CHECK(generate_synthetic(params) != g);

    SyntheticParams bad;
    bad.p_in = 1.5;
    CHECK_THROWS_AS(generate_synthetic(bad), ParameterError);
}

TEST_CASE("inject_feature_noise changes exactly the requested entry count") {
    SyntheticParams params;
    params.nodes = 100;
    params.informative_dims = 4;
    params.redundant_dims = 3;
    params.noise_dims = 3; // M = 10
    params.seed = 5;
    const auto g = generate_synthetic(params);

    const auto same = inject_feature_noise(g, 0.0, 1);
    CHECK(same == g);

    auto count_changed = [&](const MultiRelationGraph& noisy) {
        std::size_t changed = 0;
        for (std::size_t i = 0; i < g.features.size(); ++i) {
            if (noisy.features.data()[i] != g.features.data()[i]) ++changed;
        }
        return changed;
    };

    const auto third = inject_feature_noise(g, 0.3, 2);
    CHECK(count_changed(third) == 300);
    CHECK(third.labels == g.labels);
    CHECK(third.edges == g.edges);
    CHECK(third.train_mask == g.train_mask);

    const auto all = inject_feature_noise(g, 1.0, 3);
    CHECK(count_changed(all) == g.features.size());

    CHECK(inject_feature_noise(g, 0.3, 2) == third);
    CHECK_THROWS_AS(inject_feature_noise(g, 1.5, 1), ParameterError);
}
