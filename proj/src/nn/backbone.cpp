#include "rfgnn/nn/backbone.hpp"

namespace rfgnn {

BackboneModel BackboneModel::init(const BackboneConfig& cfg, std::int32_t in_dim,
                                  std::int32_t relations, SplitRng& rng) {
    BackboneModel m;
    switch (cfg.kind) {
    case BackboneKind::gcn:
        m.params = GcnParams::init(cfg, in_dim, rng);
        break;
    case BackboneKind::sgc:
        m.params = SgcParams::init(cfg, in_dim, rng);
        break;
    case BackboneKind::rgcn:
        m.params = RgcnParams::init(cfg, in_dim, relations, rng);
        break;
    }
    return m;
}

BackboneKind BackboneModel::kind() const { return config().kind; }

const BackboneConfig& BackboneModel::config() const {
    return std::visit([](const auto& p) -> const BackboneConfig& { return p.cfg; },
                      params);
}

std::vector<ParamTensor*> BackboneModel::param_list() {
    return std::visit([](auto& p) { return p.param_list(); }, params);
}

DenseMatrix backbone_forward(BackboneModel& model, const BackboneInput& input,
                             bool training, SplitRng* dropout_rng,
                             BackboneCache* cache) {
    switch (model.kind()) {
    case BackboneKind::gcn: {
        RFG_CHECK(input.adjs && input.adjs->size() == 1 && input.features,
                  ParameterError, "gcn forward needs one adjacency and features");
        auto& p = std::get<GcnParams>(model.params);
        GcnCache* c = nullptr;
        if (cache) {
            cache->cache = GcnCache{};
            c = &std::get<GcnCache>(cache->cache);
        }
        return gcn_forward((*input.adjs)[0], *input.features, p, training,
                           dropout_rng, c);
    }
    case BackboneKind::sgc: {
        RFG_CHECK(input.sgc_propagated, ParameterError,
                  "sgc forward needs the precomputed propagation");
        auto& p = std::get<SgcParams>(model.params);
        SgcCache* c = nullptr;
        if (cache) {
            cache->cache = SgcCache{};
            c = &std::get<SgcCache>(cache->cache);
        }
        return sgc_forward(*input.sgc_propagated, p, training, dropout_rng, c);
    }
    case BackboneKind::rgcn: {
        RFG_CHECK(input.adjs && input.features, ParameterError,
                  "rgcn forward needs adjacencies and features");
        auto& p = std::get<RgcnParams>(model.params);
        RgcnCache* c = nullptr;
        if (cache) {
            cache->cache = RgcnCache{};
            c = &std::get<RgcnCache>(cache->cache);
        }
        return rgcn_forward(*input.adjs, *input.features, p, training,
                            dropout_rng, c);
    }
    }
    throw Error("unreachable backbone kind");
}

void backbone_backward(const DenseMatrix& grad_out, BackboneModel& model,
                       const BackboneCache& cache) {
    switch (model.kind()) {
    case BackboneKind::gcn:
        gcn_backward(grad_out, std::get<GcnParams>(model.params),
                     std::get<GcnCache>(cache.cache));
        return;
    case BackboneKind::sgc:
        sgc_backward(grad_out, std::get<SgcParams>(model.params),
                     std::get<SgcCache>(cache.cache));
        return;
    case BackboneKind::rgcn:
        rgcn_backward(grad_out, std::get<RgcnParams>(model.params),
                      std::get<RgcnCache>(cache.cache));
        return;
    }
    throw Error("unreachable backbone kind");
}

} // namespace rfgnn
