#pragma once

#include <variant>

#include "rfgnn/nn/gcn.hpp"
#include "rfgnn/nn/rgcn.hpp"
#include "rfgnn/nn/sgc.hpp"

namespace rfgnn {

/// One trainable base-classifier network of whichever kind the config asks
/// for. GCN and SGC consume a single (merged) adjacency; RGCN one per
/// relation; SGC reads its precomputed propagation instead of the adjacency.
struct BackboneModel {
    std::variant<GcnParams, SgcParams, RgcnParams> params;

    static BackboneModel init(const BackboneConfig& cfg, std::int32_t in_dim,
                              std::int32_t relations, SplitRng& rng);

    BackboneKind kind() const;
    const BackboneConfig& config() const;
    std::vector<ParamTensor*> param_list();
};

struct BackboneInput {
    const std::vector<SparseAdjacency>* adjs = nullptr; // size 1 unless rgcn
    const DenseMatrix* features = nullptr;              // gcn / rgcn input
    const DenseMatrix* sgc_propagated = nullptr;        // sgc input
};

struct BackboneCache {
    std::variant<GcnCache, SgcCache, RgcnCache> cache;
};

DenseMatrix backbone_forward(BackboneModel& model, const BackboneInput& input,
                             bool training, SplitRng* dropout_rng,
                             BackboneCache* cache);

void backbone_backward(const DenseMatrix& grad_out, BackboneModel& model,
                       const BackboneCache& cache);

} // namespace rfgnn
