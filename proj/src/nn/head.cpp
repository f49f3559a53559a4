#include "rfgnn/nn/head.hpp"

namespace rfgnn {

HeadParams HeadParams::init(std::int32_t embed_dim, std::int32_t classes,
                            SplitRng& rng) {
    RFG_CHECK(embed_dim >= 1 && classes >= 2, ParameterError,
              "head needs embed_dim >= 1 and classes >= 2, got ", embed_dim,
              " and ", classes);
    HeadParams p;
    p.weight = ParamTensor("head.w", static_cast<std::size_t>(embed_dim),
                           static_cast<std::size_t>(classes));
    p.bias = ParamTensor("head.b", 1, static_cast<std::size_t>(classes));
    glorot_uniform(p.weight, rng);
    return p;
}

std::vector<ParamTensor*> HeadParams::param_list() { return {&weight, &bias}; }

DenseMatrix head_logits(const DenseMatrix& z, HeadParams& params, HeadCache* cache) {
    RFG_CHECK(z.cols() == params.weight.value.rows(), DimensionError,
              "head: embedding ", shape_str(z), " does not match weight ",
              shape_str(params.weight.value));
    DenseMatrix logits = matmul(z, params.weight.value);
    add_row_bias(logits, params.bias.value);
    if (cache) {
        *cache = HeadCache{};
        cache->input = z;
        for (auto* p : params.param_list()) record_stamp(cache->stamps, *p);
    }
    return logits;
}

DenseMatrix head_forward(const DenseMatrix& z, HeadParams& params) {
    return softmax_rows(head_logits(z, params, nullptr));
}

DenseMatrix head_backward(const DenseMatrix& grad_logits, HeadParams& params,
                          const HeadCache& cache) {
    verify_stamps(cache.stamps, "head_backward");
    matmul_tn_acc(cache.input, grad_logits, params.weight.grad);
    add_scaled(params.bias.grad, 1.0, column_sums(grad_logits));
    return matmul(grad_logits, transpose(params.weight.value));
}

} // namespace rfgnn
