#pragma once

#include "rfgnn/ensemble/branch.hpp"

namespace rfgnn {

struct EnsembleModel {
    TrainConfig config;
    Variant variant = Variant::full;
    std::int32_t num_classes = 0;
    std::vector<BranchSpec> specs;
    std::vector<BranchModel> models;
};

struct EnsemblePrediction {
    DenseMatrix scores;                // N x C, row sums = S
    std::vector<std::int32_t> classes; // argmax, ties -> lower class index
};

/// Trains S branches (in parallel when threads > 1). Each branch owns its
/// RNG streams, so the result is a pure function of (graph, config, variant)
/// regardless of scheduling.
EnsembleModel train_ensemble(const MultiRelationGraph& g, const TrainConfig& cfg,
                             Variant variant, int threads = 1);

/// Full-graph predictions of every branch, adjacencies shared.
std::vector<DenseMatrix> branch_predictions(const MultiRelationGraph& g,
                                            EnsembleModel& ensemble);

/// Soft vote: scores = sum of per-branch probability rows.
EnsemblePrediction ensemble_predict(const MultiRelationGraph& g,
                                    EnsembleModel& ensemble);

/// S x S mean (over nodes) cosine similarity between branch outputs.
DenseMatrix branch_similarity(const MultiRelationGraph& g,
                              EnsembleModel& ensemble);

/// One backbone trained on the full graph with no ensemble machinery and no
/// aligning; draws from the same (master_seed, branch 0) streams as ensemble
/// branch 0. The ablation baseline.
BranchModel train_standalone(const MultiRelationGraph& g, const TrainConfig& cfg,
                             std::vector<double>* loss_history = nullptr);

/// Full-graph probabilities of a standalone model.
DenseMatrix standalone_predict(const MultiRelationGraph& g,
                               const TrainConfig& cfg, BranchModel& model);

} // namespace rfgnn
