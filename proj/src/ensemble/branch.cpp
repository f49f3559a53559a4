#include "rfgnn/ensemble/branch.hpp"

#include "rfgnn/graph/normalize.hpp"
#include "rfgnn/graph/subgraph.hpp"

namespace rfgnn {

std::vector<ParamTensor*> BranchModel::param_list() {
    std::vector<ParamTensor*> out = backbone.param_list();
    if (fcn) {
        for (auto* p : fcn->param_list()) out.push_back(p);
    }
    for (auto* p : head.param_list()) out.push_back(p);
    return out;
}

std::vector<SparseAdjacency> backbone_adjacencies(
    const std::vector<std::vector<Edge>>& edges, std::int32_t n,
    BackboneKind kind) {
    std::vector<SparseAdjacency> adjs;
    if (kind == BackboneKind::rgcn) {
        adjs.reserve(edges.size());
        for (const auto& rel : edges) adjs.push_back(normalize_adjacency(rel, n));
    } else {
        std::vector<Edge> merged;
        for (const auto& rel : edges) {
            merged.insert(merged.end(), rel.begin(), rel.end());
        }
        adjs.push_back(normalize_adjacency(merged, n));
    }
    return adjs;
}

namespace {

// Forward of one pass; shared between training and prediction so both paths
// stay structurally identical.
struct BranchPass {
    DenseMatrix embedding;
    DenseMatrix aux;      // FCN output when aligning
    DenseMatrix aligned;  // embedding (.. * aux)
};

BranchPass run_forward(BranchModel& model, const BackboneInput& input,
                       const DenseMatrix* x_fcn, bool training,
                       SplitRng* dropout_rng, BackboneCache* bb_cache,
                       FcnCache* fcn_cache) {
    BranchPass pass;
    pass.embedding =
        backbone_forward(model.backbone, input, training, dropout_rng, bb_cache);
    if (model.fcn) {
        RFG_CHECK(x_fcn != nullptr, ParameterError,
                  "branch has an aligning FCN but no remaining-feature matrix");
        pass.aux = fcn_forward(*x_fcn, *model.fcn, training, dropout_rng, fcn_cache);
        pass.aligned = hadamard(pass.embedding, pass.aux);
    } else {
        pass.aligned = pass.embedding;
    }
    return pass;
}

} // namespace

BranchModel train_branch(const MultiRelationGraph& g, const BranchSpec& spec,
                         const TrainConfig& cfg, bool aligning,
                         std::vector<double>* loss_history) {
    cfg.validate();
    spec.validate(g);

    const auto sub = induced_subgraph(g, spec.sampled_nodes);
    const auto n_sub = sub.graph.num_nodes;

    // Kept edges, re-indexed to subgraph ids; normalization adds self-loops
    // after the drop, so no training row is ever empty.
    std::vector<std::vector<Edge>> kept(static_cast<std::size_t>(g.num_relations));
    for (std::size_t k = 0; k < spec.kept_edges.size(); ++k) {
        kept[k].reserve(spec.kept_edges[k].size());
        for (const auto& e : spec.kept_edges[k]) {
            kept[k].push_back({sub.old_to_new[static_cast<std::size_t>(e.src)],
                               sub.old_to_new[static_cast<std::size_t>(e.dst)]});
        }
    }
    const auto adjs = backbone_adjacencies(kept, n_sub, cfg.backbone.kind);

    const DenseMatrix x_gnn = select_columns(sub.graph.features, spec.selected_features);
    const bool use_fcn = aligning && !spec.remaining_features.empty();
    DenseMatrix x_fcn;
    if (use_fcn) {
        x_fcn = select_columns(sub.graph.features, spec.remaining_features);
    }

    const auto& train_local = sub.graph.train_mask;
    RFG_CHECK(!train_local.empty(), ParameterError,
              "empty supervision set: no training node survived node sampling in "
              "branch ", spec.index, "; increase alpha");

    BackboneConfig bb_cfg = cfg.backbone;
    bb_cfg.dropout = cfg.dropout;

    const SplitRng branch_rng(spec.seed);
    auto init_rng = branch_rng.split(static_cast<std::uint64_t>(BranchStream::init));
    auto dropout_rng =
        branch_rng.split(static_cast<std::uint64_t>(BranchStream::dropout));

    BranchModel model;
    model.num_classes = g.num_classes;
    model.backbone = BackboneModel::init(
        bb_cfg, static_cast<std::int32_t>(spec.selected_features.size()),
        g.num_relations, init_rng);
    if (use_fcn) {
        model.fcn = FcnParams::init(
            static_cast<std::int32_t>(spec.remaining_features.size()),
            bb_cfg.hidden, bb_cfg.out_dim, cfg.dropout, init_rng);
    }
    model.head = HeadParams::init(bb_cfg.out_dim, g.num_classes, init_rng);

    DenseMatrix sgc_propagated;
    BackboneInput input;
    input.adjs = &adjs;
    input.features = &x_gnn;
    if (cfg.backbone.kind == BackboneKind::sgc) {
        sgc_propagated = sgc_precompute(adjs[0], x_gnn, bb_cfg.sgc_power);
        input.sgc_propagated = &sgc_propagated;
    }

    AdamWConfig opt_cfg;
    opt_cfg.lr = cfg.lr;
    opt_cfg.weight_decay = cfg.weight_decay;
    AdamW optimizer(model.param_list(), opt_cfg);

    BackboneCache bb_cache;
    FcnCache fcn_cache;
    HeadCache head_cache;
    for (std::int32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        auto pass = run_forward(model, input, use_fcn ? &x_fcn : nullptr, true,
                                &dropout_rng, &bb_cache, &fcn_cache);
        const auto logits = head_logits(pass.aligned, model.head, &head_cache);
        auto ce = cross_entropy(logits, sub.graph.labels, train_local);
        const auto d_aligned = head_backward(ce.grad_logits, model.head, head_cache);
        if (use_fcn) {
            backbone_backward(hadamard(d_aligned, pass.aux), model.backbone, bb_cache);
            fcn_backward(hadamard(d_aligned, pass.embedding), *model.fcn, fcn_cache);
        } else {
            backbone_backward(d_aligned, model.backbone, bb_cache);
        }
        optimizer.step();
        if (loss_history) loss_history->push_back(ce.loss);
    }
    return model;
}

namespace {

BranchPass run_inference(const std::vector<SparseAdjacency>& full_adjs,
                         const MultiRelationGraph& g, const BranchSpec& spec,
                         BranchModel& model) {
    RFG_CHECK(spec.selected_features.size() ==
                  static_cast<std::size_t>(std::visit(
                      [](const auto& p) { return p.in_dim; }, model.backbone.params)),
              DimensionError, "branch ", spec.index, ": spec selects ",
              spec.selected_features.size(),
              " features but the model was trained with in_dim ",
              std::visit([](const auto& p) { return p.in_dim; },
                         model.backbone.params));

    const DenseMatrix x_gnn = select_columns(g.features, spec.selected_features);
    DenseMatrix x_fcn;
    if (model.fcn) {
        RFG_CHECK(spec.remaining_features.size() ==
                      static_cast<std::size_t>(model.fcn->in_dim),
                  DimensionError, "branch ", spec.index, ": spec leaves ",
                  spec.remaining_features.size(),
                  " features but the aligning FCN expects ", model.fcn->in_dim);
        x_fcn = select_columns(g.features, spec.remaining_features);
    }

    DenseMatrix sgc_propagated;
    BackboneInput input;
    input.adjs = &full_adjs;
    input.features = &x_gnn;
    if (model.backbone.kind() == BackboneKind::sgc) {
        sgc_propagated =
            sgc_precompute(full_adjs[0], x_gnn, model.backbone.config().sgc_power);
        input.sgc_propagated = &sgc_propagated;
    }

    return run_forward(model, input, model.fcn ? &x_fcn : nullptr, false,
                       nullptr, nullptr, nullptr);
}

} // namespace

DenseMatrix branch_predict_with(const std::vector<SparseAdjacency>& full_adjs,
                                const MultiRelationGraph& g,
                                const BranchSpec& spec, BranchModel& model) {
    return head_forward(run_inference(full_adjs, g, spec, model).aligned,
                        model.head);
}

DenseMatrix branch_embed(const std::vector<SparseAdjacency>& full_adjs,
                         const MultiRelationGraph& g, const BranchSpec& spec,
                         BranchModel& model) {
    return std::move(run_inference(full_adjs, g, spec, model).aligned);
}

DenseMatrix branch_predict(const MultiRelationGraph& g, const BranchSpec& spec,
                           BranchModel& model) {
    const auto adjs =
        backbone_adjacencies(g.edges, g.num_nodes, model.backbone.kind());
    return branch_predict_with(adjs, g, spec, model);
}

} // namespace rfgnn
