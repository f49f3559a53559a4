#include "rfgnn/nn/gcn.hpp"

namespace rfgnn {

GcnParams GcnParams::init(const BackboneConfig& cfg, std::int32_t in_dim,
                          SplitRng& rng) {
    cfg.validate();
    GcnParams p;
    p.cfg = cfg;
    p.in_dim = in_dim;
    const auto dims = cfg.dims(in_dim);
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        p.weights.emplace_back(concat("gcn.w", l),
                               static_cast<std::size_t>(dims[l]),
                               static_cast<std::size_t>(dims[l + 1]));
        glorot_uniform(p.weights.back(), rng);
    }
    return p;
}

std::vector<ParamTensor*> GcnParams::param_list() {
    std::vector<ParamTensor*> out;
    for (auto& w : weights) out.push_back(&w);
    return out;
}

DenseMatrix gcn_forward(const SparseAdjacency& adj, const DenseMatrix& x,
                        GcnParams& params, bool training, SplitRng* dropout_rng,
                        GcnCache* cache) {
    RFG_CHECK(static_cast<std::size_t>(adj.n) == x.rows(), DimensionError,
              "gcn_forward: adjacency has ", adj.n, " nodes, features ",
              shape_str(x));
    RFG_CHECK(x.cols() == static_cast<std::size_t>(params.in_dim), DimensionError,
              "gcn_forward: features ", shape_str(x), ", expected in_dim ",
              params.in_dim);
    const bool use_dropout = training && params.cfg.dropout > 0.0;
    RFG_CHECK(!use_dropout || dropout_rng != nullptr, ParameterError,
              "gcn_forward: training with dropout needs an rng");
    if (cache) {
        *cache = GcnCache{};
        cache->adj = &adj;
        for (const auto& w : params.weights) record_stamp(cache->stamps, w);
    }

    DenseMatrix h = x;
    const std::size_t layers = params.weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        DenseMatrix mask;
        if (use_dropout) {
            mask = dropout_mask(h.rows(), h.cols(), params.cfg.dropout, *dropout_rng);
            hadamard_inplace(h, mask);
        }
        DenseMatrix t = spmm(adj, h);
        DenseMatrix z = matmul(t, params.weights[l].value);
        if (cache) {
            cache->propagated.push_back(std::move(t));
            cache->dropout_masks.push_back(std::move(mask));
        }
        if (l + 1 < layers) {
            auto r = relu_forward(z);
            h = std::move(r.value);
            if (cache) cache->relu_masks.push_back(std::move(r.mask));
        } else {
            h = std::move(z);
        }
    }
    return h;
}

void gcn_backward(const DenseMatrix& grad_out, GcnParams& params,
                  const GcnCache& cache, DenseMatrix* grad_x) {
    verify_stamps(cache.stamps, "gcn_backward");
    RFG_CHECK(cache.adj != nullptr &&
                  cache.propagated.size() == params.weights.size(),
              Error, "gcn_backward: cache does not match a forward pass");

    DenseMatrix dz = grad_out;
    for (std::size_t l = params.weights.size(); l-- > 0;) {
        matmul_tn_acc(cache.propagated[l], dz, params.weights[l].grad);
        DenseMatrix dt = matmul(dz, transpose(params.weights[l].value));
        DenseMatrix dh = spmm(*cache.adj, dt); // A_hat is symmetric
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
