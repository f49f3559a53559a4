#pragma once

#include "rfgnn/core/ops.hpp"
#include "rfgnn/nn/common.hpp"

namespace rfgnn {

/// Shared prediction head: class probabilities softmax(Z W + b).
struct HeadParams {
    ParamTensor weight; // d x C
    ParamTensor bias;   // 1 x C

    static HeadParams init(std::int32_t embed_dim, std::int32_t classes,
                           SplitRng& rng);
    std::vector<ParamTensor*> param_list();
};

struct HeadCache {
    DenseMatrix input;
    std::vector<ParamStamp> stamps;
};

/// Pre-softmax logits; pair with cross_entropy during training.
DenseMatrix head_logits(const DenseMatrix& z, HeadParams& params, HeadCache* cache);

/// softmax(Z W + b); rows sum to 1.
DenseMatrix head_forward(const DenseMatrix& z, HeadParams& params);

/// Accumulates parameter grads and returns grad wrt Z.
DenseMatrix head_backward(const DenseMatrix& grad_logits, HeadParams& params,
                          const HeadCache& cache);

} // namespace rfgnn
