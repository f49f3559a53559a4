#include "rfgnn/ensemble/ensemble.hpp"

#include <cmath>

#include "rfgnn/core/parallel.hpp"
#include "rfgnn/core/rng.hpp"

namespace rfgnn {

EnsembleModel train_ensemble(const MultiRelationGraph& g, const TrainConfig& cfg,
                             Variant variant, int threads) {
    cfg.validate();
    EnsembleModel ensemble;
    ensemble.config = cfg;
    ensemble.variant = variant;
    ensemble.num_classes = g.num_classes;
    ensemble.specs.reserve(static_cast<std::size_t>(cfg.s));
    for (std::int32_t i = 0; i < cfg.s; ++i) {
        ensemble.specs.push_back(build_branch_spec(g, cfg, variant, i));
    }

    const bool aligning = variant == Variant::full;
    ensemble.models.resize(static_cast<std::size_t>(cfg.s));
    try {
        parallel_for(static_cast<std::size_t>(cfg.s), threads, [&](std::size_t i) {
            ensemble.models[i] = train_branch(g, ensemble.specs[i], cfg, aligning);
        });
    } catch (const Error& e) {
        throw Error(concat("ensemble training failed: ", e.what()));
    }
    return ensemble;
}

std::vector<DenseMatrix> branch_predictions(const MultiRelationGraph& g,
                                            EnsembleModel& ensemble) {
    RFG_CHECK(!ensemble.models.empty(), ParameterError, "empty ensemble");
    const auto adjs = backbone_adjacencies(g.edges, g.num_nodes,
                                           ensemble.config.backbone.kind);
    std::vector<DenseMatrix> preds;
    preds.reserve(ensemble.models.size());
    for (std::size_t i = 0; i < ensemble.models.size(); ++i) {
        preds.push_back(
            branch_predict_with(adjs, g, ensemble.specs[i], ensemble.models[i]));
    }
    return preds;
}

EnsemblePrediction ensemble_predict(const MultiRelationGraph& g,
                                    EnsembleModel& ensemble) {
    const auto preds = branch_predictions(g, ensemble);
    EnsemblePrediction out;
    out.scores = DenseMatrix(static_cast<std::size_t>(g.num_nodes),
                             static_cast<std::size_t>(ensemble.num_classes));
    for (const auto& p : preds) add_scaled(out.scores, 1.0, p);

    out.classes.resize(static_cast<std::size_t>(g.num_nodes));
    for (std::size_t i = 0; i < out.scores.rows(); ++i) {
        const double* row = out.scores.row(i);
        std::size_t best = 0;
        for (std::size_t c = 1; c < out.scores.cols(); ++c) {
            if (row[c] > row[best]) best = c; // strict: ties keep the lower class
        }
        out.classes[i] = static_cast<std::int32_t>(best);
    }
    return out;
}

DenseMatrix branch_similarity(const MultiRelationGraph& g,
                              EnsembleModel& ensemble) {
    const auto preds = branch_predictions(g, ensemble);
    const std::size_t s = preds.size();
    const std::size_t n = static_cast<std::size_t>(g.num_nodes);
    const std::size_t c = static_cast<std::size_t>(ensemble.num_classes);

    std::vector<DenseMatrix> norms(s, DenseMatrix(n, 1));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            double sq = 0.0;
            for (std::size_t k = 0; k < c; ++k) sq += preds[i](r, k) * preds[i](r, k);
            norms[i](r, 0) = std::sqrt(sq);
        }
    }

    DenseMatrix sim(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            double mean = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                double dot = 0.0;
                for (std::size_t k = 0; k < c; ++k) {
                    dot += preds[i](r, k) * preds[j](r, k);
                }
                mean += dot / (norms[i](r, 0) * norms[j](r, 0));
            }
            sim(i, j) = mean / static_cast<double>(n);
        }
    }
    return sim;
}

BranchModel train_standalone(const MultiRelationGraph& g, const TrainConfig& cfg,
                             std::vector<double>* loss_history) {
    const auto spec = identity_branch_spec(g, derive_seed(cfg.master_seed, 0), 0);
    return train_branch(g, spec, cfg, /*aligning=*/false, loss_history);
}

DenseMatrix standalone_predict(const MultiRelationGraph& g,
                               const TrainConfig& cfg, BranchModel& model) {
    (void)cfg;
    const auto spec = identity_branch_spec(g, 0, 0);
    return branch_predict(g, spec, model);
}

} // namespace rfgnn
