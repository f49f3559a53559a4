#pragma once

#include "rfgnn/core/ops.hpp"
#include "rfgnn/nn/common.hpp"
#include "rfgnn/nn/config.hpp"

namespace rfgnn {

/// Stacked graph-convolution layers, H_{l+1} = relu(A_hat H_l W_l) with no
/// rectifier after the last layer; layers are bias-free (the prediction head
/// carries the only bias).
struct GcnParams {
    BackboneConfig cfg;
    std::int32_t in_dim = 0;
    std::vector<ParamTensor> weights;

    static GcnParams init(const BackboneConfig& cfg, std::int32_t in_dim,
                          SplitRng& rng);
    std::vector<ParamTensor*> param_list();
};

struct GcnCache {
    const SparseAdjacency* adj = nullptr;
    std::vector<DenseMatrix> propagated;    // per layer: A_hat * dropped input
    std::vector<DenseMatrix> dropout_masks; // per layer; empty matrix when off
    std::vector<DenseMatrix> relu_masks;    // layers-1 entries
    std::vector<ParamStamp> stamps;
};

/// `dropout_rng` may be null when not training or dropout is 0.
DenseMatrix gcn_forward(const SparseAdjacency& adj, const DenseMatrix& x,
                        GcnParams& params, bool training, SplitRng* dropout_rng,
                        GcnCache* cache);

/// Accumulates parameter gradients; optionally reports grad wrt the input.
/// Uses the symmetry of the normalized adjacency (A_hat^T == A_hat).
void gcn_backward(const DenseMatrix& grad_out, GcnParams& params,
                  const GcnCache& cache, DenseMatrix* grad_x = nullptr);

} // namespace rfgnn
