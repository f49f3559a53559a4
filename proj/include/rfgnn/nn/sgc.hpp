#pragma once

#include "rfgnn/core/ops.hpp"
#include "rfgnn/nn/common.hpp"
#include "rfgnn/nn/config.hpp"

namespace rfgnn {

/// A_hat^k X by k successive spmm calls. Computed once per branch; the SGC
/// backbone itself is then a single linear map over the result.
DenseMatrix sgc_precompute(const SparseAdjacency& adj, const DenseMatrix& x,
                           std::int32_t k);

struct SgcParams {
    BackboneConfig cfg;
    std::int32_t in_dim = 0;
    ParamTensor weight; // in_dim x out_dim

    static SgcParams init(const BackboneConfig& cfg, std::int32_t in_dim,
                          SplitRng& rng);
    std::vector<ParamTensor*> param_list();
};

struct SgcCache {
    DenseMatrix dropped_input;
    std::vector<ParamStamp> stamps;
};

/// `propagated` is the sgc_precompute result for this branch's features.
DenseMatrix sgc_forward(const DenseMatrix& propagated, SgcParams& params,
                        bool training, SplitRng* dropout_rng, SgcCache* cache);

void sgc_backward(const DenseMatrix& grad_out, SgcParams& params,
                  const SgcCache& cache);

} // namespace rfgnn
