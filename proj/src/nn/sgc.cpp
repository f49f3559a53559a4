#include "rfgnn/nn/sgc.hpp"

namespace rfgnn {

DenseMatrix sgc_precompute(const SparseAdjacency& adj, const DenseMatrix& x,
                           std::int32_t k) {
    RFG_CHECK(k >= 1, ParameterError, "sgc_precompute: power must be >= 1, got ", k);
    DenseMatrix out = spmm(adj, x);
    for (std::int32_t i = 1; i < k; ++i) out = spmm(adj, out);
    return out;
}

SgcParams SgcParams::init(const BackboneConfig& cfg, std::int32_t in_dim,
                          SplitRng& rng) {
    cfg.validate();
    SgcParams p;
    p.cfg = cfg;
    p.in_dim = in_dim;
    p.weight = ParamTensor("sgc.w", static_cast<std::size_t>(in_dim),
                           static_cast<std::size_t>(cfg.out_dim));
    glorot_uniform(p.weight, rng);
    return p;
}

std::vector<ParamTensor*> SgcParams::param_list() { return {&weight}; }

DenseMatrix sgc_forward(const DenseMatrix& propagated, SgcParams& params,
                        bool training, SplitRng* dropout_rng, SgcCache* cache) {
    RFG_CHECK(propagated.cols() == static_cast<std::size_t>(params.in_dim),
              DimensionError, "sgc_forward: input ", shape_str(propagated),
              ", expected in_dim ", params.in_dim);
    const bool use_dropout = training && params.cfg.dropout > 0.0;
    RFG_CHECK(!use_dropout || dropout_rng != nullptr, ParameterError,
              "sgc_forward: training with dropout needs an rng");

    DenseMatrix h = propagated;
    if (use_dropout) {
        const auto mask =
            dropout_mask(h.rows(), h.cols(), params.cfg.dropout, *dropout_rng);
        hadamard_inplace(h, mask);
    }
    DenseMatrix out = matmul(h, params.weight.value);
    if (cache) {
        *cache = SgcCache{};
        cache->dropped_input = std::move(h);
        record_stamp(cache->stamps, params.weight);
    }
    return out;
}

void sgc_backward(const DenseMatrix& grad_out, SgcParams& params,
                  const SgcCache& cache) {
    verify_stamps(cache.stamps, "sgc_backward");
    matmul_tn_acc(cache.dropped_input, grad_out, params.weight.grad);
}

} // namespace rfgnn
