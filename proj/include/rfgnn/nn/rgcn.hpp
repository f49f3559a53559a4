#pragma once

#include "rfgnn/core/ops.hpp"
#include "rfgnn/nn/common.hpp"
#include "rfgnn/nn/config.hpp"

namespace rfgnn {

/// Relational layers: H_{l+1} = relu(sum_k A_hat_k H_l W_k + H_l W_self),
/// one weight per relation plus a self weight, bias-free like the GCN.
struct RgcnLayerParams {
    std::vector<ParamTensor> rel;
    ParamTensor self_weight;
};

struct RgcnParams {
    BackboneConfig cfg;
    std::int32_t in_dim = 0;
    std::int32_t relations = 1;
    std::vector<RgcnLayerParams> layers;

    static RgcnParams init(const BackboneConfig& cfg, std::int32_t in_dim,
                           std::int32_t relations, SplitRng& rng);
    std::vector<ParamTensor*> param_list();
};

struct RgcnCache {
    const std::vector<SparseAdjacency>* adjs = nullptr;
    std::vector<DenseMatrix> dropped_inputs;              // per layer
    std::vector<std::vector<DenseMatrix>> propagated;     // [layer][relation]
    std::vector<DenseMatrix> dropout_masks;
    std::vector<DenseMatrix> relu_masks;
    std::vector<ParamStamp> stamps;
};

DenseMatrix rgcn_forward(const std::vector<SparseAdjacency>& adjs,
                         const DenseMatrix& x, RgcnParams& params, bool training,
                         SplitRng* dropout_rng, RgcnCache* cache);

void rgcn_backward(const DenseMatrix& grad_out, RgcnParams& params,
                   const RgcnCache& cache, DenseMatrix* grad_x = nullptr);

} // namespace rfgnn
