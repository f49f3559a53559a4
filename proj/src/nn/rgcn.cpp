#include "rfgnn/nn/rgcn.hpp"

namespace rfgnn {

RgcnParams RgcnParams::init(const BackboneConfig& cfg, std::int32_t in_dim,
                            std::int32_t relations, SplitRng& rng) {
    cfg.validate();
    RFG_CHECK(relations >= 1, ParameterError, "rgcn needs at least one relation");
    RgcnParams p;
    p.cfg = cfg;
    p.in_dim = in_dim;
    p.relations = relations;
    const auto dims = cfg.dims(in_dim);
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        RgcnLayerParams layer;
        for (std::int32_t k = 0; k < relations; ++k) {
            layer.rel.emplace_back(concat("rgcn.l", l, ".rel", k),
                                   static_cast<std::size_t>(dims[l]),
                                   static_cast<std::size_t>(dims[l + 1]));
            glorot_uniform(layer.rel.back(), rng);
        }
        layer.self_weight = ParamTensor(concat("rgcn.l", l, ".self"),
                                        static_cast<std::size_t>(dims[l]),
                                        static_cast<std::size_t>(dims[l + 1]));
        glorot_uniform(layer.self_weight, rng);
        p.layers.push_back(std::move(layer));
    }
    return p;
}

std::vector<ParamTensor*> RgcnParams::param_list() {
    std::vector<ParamTensor*> out;
    for (auto& layer : layers) {
        for (auto& w : layer.rel) out.push_back(&w);
        out.push_back(&layer.self_weight);
    }
    return out;
}

DenseMatrix rgcn_forward(const std::vector<SparseAdjacency>& adjs,
                         const DenseMatrix& x, RgcnParams& params, bool training,
                         SplitRng* dropout_rng, RgcnCache* cache) {
    RFG_CHECK(adjs.size() == static_cast<std::size_t>(params.relations),
              DimensionError, "rgcn_forward: ", adjs.size(),
              " adjacencies for params with K=", params.relations);
    RFG_CHECK(x.cols() == static_cast<std::size_t>(params.in_dim), DimensionError,
              "rgcn_forward: features ", shape_str(x), ", expected in_dim ",
              params.in_dim);
    for (const auto& a : adjs) {
        RFG_CHECK(static_cast<std::size_t>(a.n) == x.rows(), DimensionError,
                  "rgcn_forward: adjacency has ", a.n, " nodes, features ",
                  shape_str(x));
    }
    const bool use_dropout = training && params.cfg.dropout > 0.0;
    RFG_CHECK(!use_dropout || dropout_rng != nullptr, ParameterError,
              "rgcn_forward: training with dropout needs an rng");
    if (cache) {
        *cache = RgcnCache{};
        cache->adjs = &adjs;
        for (auto& layer : params.layers) {
            for (auto& w : layer.rel) record_stamp(cache->stamps, w);
            record_stamp(cache->stamps, layer.self_weight);
        }
    }

    DenseMatrix h = x;
    const std::size_t layer_count = params.layers.size();
    for (std::size_t l = 0; l < layer_count; ++l) {
        auto& layer = params.layers[l];
        DenseMatrix mask;
        if (use_dropout) {
            mask = dropout_mask(h.rows(), h.cols(), params.cfg.dropout, *dropout_rng);
            hadamard_inplace(h, mask);
        }
        // Relations accumulate in index order, the self term last, so the
        // per-element operation sequence is fixed.
        DenseMatrix z(h.rows(), layer.self_weight.value.cols());
        std::vector<DenseMatrix> propagated;
        for (std::size_t k = 0; k < adjs.size(); ++k) {
            DenseMatrix t = spmm(adjs[k], h);
            matmul_acc(t, layer.rel[k].value, z);
            if (cache) propagated.push_back(std::move(t));
        }
        matmul_acc(h, layer.self_weight.value, z);
        if (cache) {
            cache->dropped_inputs.push_back(std::move(h));
            cache->propagated.push_back(std::move(propagated));
            cache->dropout_masks.push_back(std::move(mask));
        }
        if (l + 1 < layer_count) {
            auto r = relu_forward(z);
            h = std::move(r.value);
            if (cache) cache->relu_masks.push_back(std::move(r.mask));
        } else {
            h = std::move(z);
        }
    }
    return h;
}

void rgcn_backward(const DenseMatrix& grad_out, RgcnParams& params,
                   const RgcnCache& cache, DenseMatrix* grad_x) {
    verify_stamps(cache.stamps, "rgcn_backward");
    RFG_CHECK(cache.adjs != nullptr &&
                  cache.dropped_inputs.size() == params.layers.size(),
              Error, "rgcn_backward: cache does not match a forward pass");

    const auto& adjs = *cache.adjs;
    DenseMatrix dz = grad_out;
    for (std::size_t l = params.layers.size(); l-- > 0;) {
        auto& layer = params.layers[l];
        const auto& dropped = cache.dropped_inputs[l];

        DenseMatrix dh(dropped.rows(), dropped.cols());
        for (std::size_t k = 0; k < adjs.size(); ++k) {
            matmul_tn_acc(cache.propagated[l][k], dz, layer.rel[k].grad);
            DenseMatrix dt = matmul(dz, transpose(layer.rel[k].value));
            add_scaled(dh, 1.0, spmm(adjs[k], dt)); // adjacencies are symmetric
        }
        matmul_tn_acc(dropped, dz, layer.self_weight.grad);
        matmul_acc(dz, transpose(layer.self_weight.value), dh);

        if (cache.dropout_masks[l].size() > 0) {
            hadamard_inplace(dh, cache.dropout_masks[l]);
        }
        if (l > 0) {
            dz = relu_backward(cache.relu_masks[l - 1], dh);
        } else if (grad_x) {
            *grad_x = std::move(dh);
        }
    }
}

} // namespace rfgnn
