#include <doctest.h>

#include <filesystem>

#include "rfgnn/ensemble/checkpoint.hpp"
#include "rfgnn/ensemble/ensemble.hpp"
#include "rfgnn/graph/synthetic.hpp"
#include "test_util.hpp"

using namespace rfgnn;
using test::bits_equal;

namespace {

// Small, fast configuration used across the suite.
TrainConfig tiny_config(BackboneKind kind = BackboneKind::gcn) {
    TrainConfig cfg;
    cfg.backbone.kind = kind;
    cfg.backbone.layers = 2;
    cfg.backbone.hidden = 8;
    cfg.backbone.out_dim = 8;
    cfg.s = 3;
    cfg.epochs = 15;
    cfg.dropout = 0.3;
    cfg.alpha = 0.8;
    cfg.beta = 0.75;
    cfg.gamma = 0.9;
    cfg.master_seed = 7;
    return cfg;
}

MultiRelationGraph small_benchmark(std::int32_t relations = 1,
                                   std::uint64_t seed = 40) {
    SyntheticParams p;
    p.nodes = 40;
    p.p_in = 0.25;
    p.p_out = 0.04;
    p.informative_dims = 4;
    p.redundant_dims = 2;
    p.noise_dims = 2;
    p.class_separation = 1.5;
    p.relations = relations;
    p.seed = seed;
    return generate_synthetic(p);
}

// Two groups of two nodes with opposite features; trivially separable.
MultiRelationGraph separable_four() {
    MultiRelationGraph g;
    g.num_nodes = 4;
    g.num_features = 2;
    g.num_relations = 1;
    g.num_classes = 2;
    g.features = DenseMatrix::from({{2, 2}, {2, 2}, {-2, -2}, {-2, -2}});
    g.labels = {0, 0, 1, 1};
    g.edges = {{{0, 1}, {2, 3}}};
    g.train_mask = {0, 2};
    g.test_mask = {1, 3};
    return g;
}

} // namespace

TEST_CASE("build_branch_spec: identity at keep-everything, exact counts") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    cfg.alpha = cfg.beta = cfg.gamma = 1.0;
    const auto spec = build_branch_spec(g, cfg, Variant::full, 0);
    CHECK(spec ==
          identity_branch_spec(g, derive_seed(cfg.master_seed, 0), 0));
    CHECK(spec.remaining_features.empty());

    cfg.alpha = 0.5;
    cfg.beta = 0.75;
    const auto half = build_branch_spec(g, cfg, Variant::full, 1);
    CHECK(half.sampled_nodes.size() == 20); // round(0.5 * 40)
    CHECK(half.selected_features.size() == 6); // round(0.75 * 8)
    CHECK(half.remaining_features.size() == 2);
    half.validate(g);

    // Sorted union of the feature split is exactly 0..M-1.
    std::vector<std::int32_t> all(half.selected_features);
    all.insert(all.end(), half.remaining_features.begin(),
               half.remaining_features.end());
    std::sort(all.begin(), all.end());
    for (std::int32_t i = 0; i < g.num_features; ++i) {
        CHECK(all[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("build_branch_spec: degenerate rounding raises") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    cfg.alpha = 0.01; // round(0.01 * 40) == 0
    CHECK_THROWS_WITH_AS(build_branch_spec(g, cfg, Variant::full, 0),
                         doctest::Contains("degenerate branch"), ParameterError);
}

TEST_CASE("build_branch_spec: edge keep rate concentrates around gamma") {
    SyntheticParams p;
    p.nodes = 200;
    p.p_in = 0.7;
    p.p_out = 0.3;
    p.informative_dims = 4;
    p.redundant_dims = 0;
    p.noise_dims = 0;
    p.seed = 5;
    const auto g = generate_synthetic(p); // ~1e4 edges
    auto cfg = tiny_config();
    cfg.alpha = 1.0;
    cfg.gamma = 0.9;
    cfg.s = 40;

    double kept = 0.0;
    const double total =
        static_cast<double>(g.edges[0].size()) * static_cast<double>(cfg.s);
    for (std::int32_t i = 0; i < cfg.s; ++i) {
        const auto spec = build_branch_spec(g, cfg, Variant::full, i);
        kept += static_cast<double>(spec.kept_edges[0].size());
    }
    const double rate = kept / total;
    CHECK(rate >= 0.88);
    CHECK(rate <= 0.92);
}

TEST_CASE("train_branch: seeded loss curve decreases over first 10 epochs") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    cfg.epochs = 10;
    cfg.dropout = 0.0; // regression fixture; dropout noise would wiggle it
    const auto spec = build_branch_spec(g, cfg, Variant::full, 0);
    std::vector<double> losses;
    train_branch(g, spec, cfg, true, &losses);
    REQUIRE(losses.size() == 10);
    for (std::size_t e = 1; e < losses.size(); ++e) {
        CAPTURE(e);
        CHECK(losses[e] < losses[e - 1]);
    }
    // Frozen endpoints of the recorded curve.
    CHECK(losses.front() == doctest::Approx(0.68461687166253338).epsilon(1e-9));
    CHECK(losses.back() == doctest::Approx(0.36947324835911438).epsilon(1e-9));
}

TEST_CASE("train_branch/branch_predict solve the separable fixture") {
    const auto g = separable_four();
    TrainConfig cfg = tiny_config();
    cfg.alpha = cfg.beta = cfg.gamma = 1.0;
    cfg.epochs = 120;
    cfg.dropout = 0.0;
    cfg.backbone.hidden = 4;
    cfg.backbone.out_dim = 4;

    const auto spec = identity_branch_spec(g, derive_seed(cfg.master_seed, 0), 0);
    auto model = train_branch(g, spec, cfg, false);
    const auto probs = branch_predict(g, spec, model);

    for (std::size_t i = 0; i < probs.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t c = 0; c < probs.cols(); ++c) sum += probs(i, c);
        CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
    // Training accuracy 1.0 and the held-out nodes follow their groups.
    for (const auto node : {0, 1, 2, 3}) {
        const auto i = static_cast<std::size_t>(node);
        const std::int32_t pred = probs(i, 1) > probs(i, 0) ? 1 : 0;
        CHECK(pred == g.labels[i]);
    }

    // Inference is bitwise deterministic.
    CHECK(bits_equal(probs, branch_predict(g, spec, model)));
}

TEST_CASE("train_branch: no surviving training node raises") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    BranchSpec spec = identity_branch_spec(g, 1, 0);
    // Keep only test nodes.
    spec.sampled_nodes = g.test_mask;
    spec.kept_edges.assign(static_cast<std::size_t>(g.num_relations), {});
    CHECK_THROWS_WITH_AS(train_branch(g, spec, cfg, true),
                         doctest::Contains("empty supervision set"),
                         ParameterError);
}

TEST_CASE("reduction: full variant with S=1 and keep-everything equals the "
          "standalone backbone bitwise") {
    for (const auto kind : {BackboneKind::gcn, BackboneKind::sgc,
                            BackboneKind::rgcn}) {
        const auto g = small_benchmark(kind == BackboneKind::rgcn ? 2 : 1);
        auto cfg = tiny_config(kind);
        cfg.alpha = cfg.beta = cfg.gamma = 1.0;
        cfg.s = 1;
        cfg.epochs = 12;

        auto ensemble = train_ensemble(g, cfg, Variant::full, 1);
        const auto ens_pred = ensemble_predict(g, ensemble);

        auto standalone = train_standalone(g, cfg);
        auto spec = identity_branch_spec(g, 0, 0);
        const auto solo_pred = branch_predict(g, spec, standalone);

        CAPTURE(to_string(kind));
        CHECK(bits_equal(ens_pred.scores, solo_pred));
    }
}

TEST_CASE("variant E specs differ only by seed") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    auto ensemble_specs = std::vector<BranchSpec>{};
    for (std::int32_t i = 0; i < cfg.s; ++i) {
        ensemble_specs.push_back(build_branch_spec(g, cfg, Variant::ensemble_only, i));
    }
    for (std::int32_t i = 1; i < cfg.s; ++i) {
        auto a = ensemble_specs[static_cast<std::size_t>(i)];
        auto b = ensemble_specs[0];
        CHECK(a.seed != b.seed);
        a.seed = b.seed;
        a.index = b.index;
        CHECK(a == b);
    }
}

TEST_CASE("serial and parallel ensemble training are bitwise identical") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    cfg.s = 4;
    cfg.epochs = 8;

    auto serial = train_ensemble(g, cfg, Variant::full, 1);
    auto parallel = train_ensemble(g, cfg, Variant::full, 4);
    REQUIRE(serial.models.size() == parallel.models.size());
    for (std::size_t i = 0; i < serial.models.size(); ++i) {
        CHECK(serial.specs[i] == parallel.specs[i]);
        auto a = serial.models[i].param_list();
        auto b = parallel.models[i].param_list();
        REQUIRE(a.size() == b.size());
        for (std::size_t t = 0; t < a.size(); ++t) {
            CHECK(bits_equal(a[t]->value, b[t]->value));
        }
    }
    const auto pa = ensemble_predict(g, serial);
    const auto pb = ensemble_predict(g, parallel);
    CHECK(bits_equal(pa.scores, pb.scores));
    CHECK(pa.classes == pb.classes);
}

TEST_CASE("ensemble_predict: score rows sum to S; S=1 matches the branch") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    cfg.s = 3;
    auto ensemble = train_ensemble(g, cfg, Variant::full, 2);
    auto pred = ensemble_predict(g, ensemble);
    for (std::size_t i = 0; i < pred.scores.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t c = 0; c < pred.scores.cols(); ++c) sum += pred.scores(i, c);
        CHECK(std::fabs(sum - 3.0) <= 1e-9);
    }

    // Scores equal the brute-force sum of the saved branch outputs.
    const auto preds = branch_predictions(g, ensemble);
    DenseMatrix manual(pred.scores.rows(), pred.scores.cols());
    for (const auto& p : preds) add_scaled(manual, 1.0, p);
    CHECK(bits_equal(manual, pred.scores));

    cfg.s = 1;
    auto single = train_ensemble(g, cfg, Variant::full, 1);
    auto sp = ensemble_predict(g, single);
    const auto bp = branch_predictions(g, single);
    for (std::size_t i = 0; i < sp.scores.rows(); ++i) {
        const std::int32_t direct = bp[0](i, 1) > bp[0](i, 0) ? 1 : 0;
        CHECK(sp.classes[i] == direct);
    }
}

TEST_CASE("ensemble_predict breaks exact ties toward the lower class") {
    // Two branches with mirrored confident outputs: scores tie exactly.
    const auto g = separable_four();
    auto cfg = tiny_config();
    cfg.alpha = cfg.beta = cfg.gamma = 1.0;
    cfg.s = 2;
    cfg.epochs = 1;
    auto ensemble = train_ensemble(g, cfg, Variant::ensemble_only, 1);

    for (std::size_t b = 0; b < 2; ++b) {
        auto& model = ensemble.models[b];
        std::visit([](auto& p) {
            for (auto* t : p.param_list()) t->value.fill(0.0);
        }, model.backbone.params);
        model.head.weight.value.fill(0.0);
        const double c = b == 0 ? 2.0 : -2.0;
        model.head.bias.value = DenseMatrix::from({{c, -c}});
    }
    const auto pred = ensemble_predict(g, ensemble);
    for (std::size_t i = 0; i < pred.scores.rows(); ++i) {
        CHECK(pred.scores(i, 0) == pred.scores(i, 1)); // exact tie
        CHECK(pred.classes[i] == 0);
    }
}

TEST_CASE("branch_similarity: unit diagonal, symmetry, [0,1] entries") {
    const auto g = small_benchmark();
    auto cfg = tiny_config();
    auto ensemble = train_ensemble(g, cfg, Variant::full, 2);
    const auto sim = branch_similarity(g, ensemble);
    REQUIRE(sim.rows() == 3);
    REQUIRE(sim.cols() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::fabs(sim(i, i) - 1.0) <= 1e-12);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(sim(i, j) == sim(j, i));
            CHECK(sim(i, j) >= 0.0);
            CHECK(sim(i, j) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("ensemble checkpoints round-trip losslessly") {
    const auto g = small_benchmark(2);
    auto cfg = tiny_config(BackboneKind::rgcn);
    cfg.s = 2;
    cfg.epochs = 6;
    auto ensemble = train_ensemble(g, cfg, Variant::full, 1);

    const auto dir =
        std::filesystem::temp_directory_path() / "rfgnn_test_ckpt";
    std::filesystem::remove_all(dir);
    save_ensemble(dir, ensemble);
    auto loaded = load_ensemble(dir);

    CHECK(loaded.variant == ensemble.variant);
    CHECK(loaded.config == ensemble.config);
    REQUIRE(loaded.specs.size() == ensemble.specs.size());
    for (std::size_t i = 0; i < loaded.specs.size(); ++i) {
        CHECK(loaded.specs[i] == ensemble.specs[i]);
    }
    const auto a = ensemble_predict(g, ensemble);
    const auto b = ensemble_predict(g, loaded);
    CHECK(bits_equal(a.scores, b.scores));
}
