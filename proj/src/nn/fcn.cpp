#include "rfgnn/nn/fcn.hpp"

namespace rfgnn {

FcnParams FcnParams::init(std::int32_t in_dim, std::int32_t hidden,
                          std::int32_t out_dim, double dropout, SplitRng& rng) {
    RFG_CHECK(in_dim >= 1 && hidden >= 1 && out_dim >= 1, ParameterError,
              "fcn dims must be positive: in=", in_dim, " hidden=", hidden,
              " out=", out_dim);
    RFG_CHECK(dropout >= 0.0 && dropout < 1.0, ParameterError,
              "fcn dropout must be in [0,1), got ", dropout);
    FcnParams p;
    p.in_dim = in_dim;
    p.hidden = hidden;
    p.out_dim = out_dim;
    p.dropout = dropout;
    p.w1 = ParamTensor("fcn.w1", static_cast<std::size_t>(in_dim),
                       static_cast<std::size_t>(hidden));
    p.b1 = ParamTensor("fcn.b1", 1, static_cast<std::size_t>(hidden));
    p.w2 = ParamTensor("fcn.w2", static_cast<std::size_t>(hidden),
                       static_cast<std::size_t>(out_dim));
    p.b2 = ParamTensor("fcn.b2", 1, static_cast<std::size_t>(out_dim));
    glorot_uniform(p.w1, rng);
    glorot_uniform(p.w2, rng);
    return p;
}

std::vector<ParamTensor*> FcnParams::param_list() { return {&w1, &b1, &w2, &b2}; }

DenseMatrix fcn_forward(const DenseMatrix& x, FcnParams& params, bool training,
                        SplitRng* dropout_rng, FcnCache* cache) {
    RFG_CHECK(x.cols() == static_cast<std::size_t>(params.in_dim), DimensionError,
              "fcn_forward: input ", shape_str(x), ", expected in_dim ",
              params.in_dim);
    const bool use_dropout = training && params.dropout > 0.0;
    RFG_CHECK(!use_dropout || dropout_rng != nullptr, ParameterError,
              "fcn_forward: training with dropout needs an rng");

    DenseMatrix dx = x;
    if (use_dropout) {
        const auto mask = dropout_mask(dx.rows(), dx.cols(), params.dropout,
                                       *dropout_rng);
        hadamard_inplace(dx, mask);
    }
    DenseMatrix a1 = matmul(dx, params.w1.value);
    add_row_bias(a1, params.b1.value);
    auto r = relu_forward(a1);

    DenseMatrix dh = std::move(r.value);
    DenseMatrix mask_h;
    if (use_dropout) {
        mask_h = dropout_mask(dh.rows(), dh.cols(), params.dropout, *dropout_rng);
        hadamard_inplace(dh, mask_h);
    }
    DenseMatrix out = matmul(dh, params.w2.value);
    add_row_bias(out, params.b2.value);

    if (cache) {
        *cache = FcnCache{};
        cache->dropped_x = std::move(dx);
        cache->relu_mask = std::move(r.mask);
        cache->dropped_h = std::move(dh);
        cache->mask_h = std::move(mask_h);
        for (auto* p : params.param_list()) record_stamp(cache->stamps, *p);
    }
    return out;
}

void fcn_backward(const DenseMatrix& grad_out, FcnParams& params,
                  const FcnCache& cache) {
    verify_stamps(cache.stamps, "fcn_backward");
    matmul_tn_acc(cache.dropped_h, grad_out, params.w2.grad);
    add_scaled(params.b2.grad, 1.0, column_sums(grad_out));

    DenseMatrix dh = matmul(grad_out, transpose(params.w2.value));
    if (cache.mask_h.size() > 0) hadamard_inplace(dh, cache.mask_h);
    DenseMatrix da1 = relu_backward(cache.relu_mask, dh);

    matmul_tn_acc(cache.dropped_x, da1, params.w1.grad);
    add_scaled(params.b1.grad, 1.0, column_sums(da1));
}

} // namespace rfgnn
