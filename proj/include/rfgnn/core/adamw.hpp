#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfgnn/core/dense.hpp"

namespace rfgnn {

/// Learnable tensor with its gradient accumulator. `version` increments on
/// every optimizer update; forward caches record it so a stale backward is
/// rejected instead of silently producing wrong gradients.
struct ParamTensor {
    std::string name;
    DenseMatrix value;
    DenseMatrix grad;
    std::uint64_t version = 0;

    ParamTensor() = default;
    ParamTensor(std::string name_, std::size_t rows, std::size_t cols)
        : name(std::move(name_)), value(rows, cols), grad(rows, cols) {}

    void zero_grad() { grad.fill(0.0); }
};

struct AdamWState {
    DenseMatrix m;
    DenseMatrix v;
    std::int64_t t = 0;
};

struct AdamWConfig {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 5e-4;
};

/// One decoupled-weight-decay Adam step on `param.value` from `param.grad`.
/// Throws if the gradient contains a non-finite entry, naming the parameter.
void adamw_step(ParamTensor& param, AdamWState& state, const AdamWConfig& cfg);

/// Optimizer over a fixed parameter list; holds one AdamWState per tensor.
class AdamW {
public:
    AdamW(std::vector<ParamTensor*> params, AdamWConfig cfg);

    /// Steps every registered tensor, then zeroes their gradients.
    void step();

    const AdamWConfig& config() const { return cfg_; }

private:
    std::vector<ParamTensor*> params_;
    std::vector<AdamWState> states_;
    AdamWConfig cfg_;
};

} // namespace rfgnn
