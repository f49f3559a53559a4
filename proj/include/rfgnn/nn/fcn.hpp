#pragma once

#include "rfgnn/core/ops.hpp"
#include "rfgnn/nn/common.hpp"

namespace rfgnn {

/// Two-layer perceptron over the features the branch's GNN did not select:
/// linear -> relu -> linear, with dropout on each layer input in training.
struct FcnParams {
    std::int32_t in_dim = 0;
    std::int32_t hidden = 0;
    std::int32_t out_dim = 0;
    double dropout = 0.0;
    ParamTensor w1, b1, w2, b2;

    static FcnParams init(std::int32_t in_dim, std::int32_t hidden,
                          std::int32_t out_dim, double dropout, SplitRng& rng);
    std::vector<ParamTensor*> param_list();
};

struct FcnCache {
    DenseMatrix dropped_x;
    DenseMatrix relu_mask;
    DenseMatrix dropped_h;
    DenseMatrix mask_h; // dropout mask on the hidden layer input
    std::vector<ParamStamp> stamps;
};

DenseMatrix fcn_forward(const DenseMatrix& x, FcnParams& params, bool training,
                        SplitRng* dropout_rng, FcnCache* cache);

void fcn_backward(const DenseMatrix& grad_out, FcnParams& params,
                  const FcnCache& cache);

} // namespace rfgnn
