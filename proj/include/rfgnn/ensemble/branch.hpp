#pragma once

#include <optional>

#include "rfgnn/ensemble/branch_spec.hpp"
#include "rfgnn/nn/backbone.hpp"
#include "rfgnn/nn/fcn.hpp"
#include "rfgnn/nn/head.hpp"

namespace rfgnn {

/// Trained parameters of one branch. `fcn` is present only when the branch
/// was trained with the aligning mechanism and had leftover features.
struct BranchModel {
    BackboneModel backbone;
    std::optional<FcnParams> fcn;
    HeadParams head;
    std::int32_t num_classes = 0;

    std::vector<ParamTensor*> param_list();
};

/// Trains one branch on its subgraph: induced nodes + kept edges, feature
/// split per spec, joint AdamW step over backbone, FCN and head each epoch.
/// The loss is averaged over training-mask nodes that survived sampling.
BranchModel train_branch(const MultiRelationGraph& g, const BranchSpec& spec,
                         const TrainConfig& cfg, bool aligning,
                         std::vector<double>* loss_history = nullptr);

/// Full-graph inference: all N nodes, complete (normalized) edge sets, no
/// dropout. Rows are class probabilities.
DenseMatrix branch_predict(const MultiRelationGraph& g, const BranchSpec& spec,
                           BranchModel& model);

/// Same, with the full-graph adjacencies prebuilt by the caller (shared
/// across branches by ensemble_predict).
DenseMatrix branch_predict_with(const std::vector<SparseAdjacency>& full_adjs,
                                const MultiRelationGraph& g,
                                const BranchSpec& spec, BranchModel& model);

/// Full-graph aligned embedding Z (the head's input), N x d.
DenseMatrix branch_embed(const std::vector<SparseAdjacency>& full_adjs,
                         const MultiRelationGraph& g, const BranchSpec& spec,
                         BranchModel& model);

/// Adjacencies a backbone of this kind consumes on the given edge sets:
/// the normalized union of all relations for homogeneous backbones, one
/// normalized matrix per relation for RGCN.
std::vector<SparseAdjacency> backbone_adjacencies(
    const std::vector<std::vector<Edge>>& edges, std::int32_t n,
    BackboneKind kind);

} // namespace rfgnn
