#include "rfgnn/core/adamw.hpp"

#include <cmath>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/kernels.hpp"

namespace rfgnn {

void adamw_step(ParamTensor& param, AdamWState& state, const AdamWConfig& cfg) {
    if (state.t == 0 && state.m.size() == 0) {
        state.m = DenseMatrix(param.value.rows(), param.value.cols());
        state.v = DenseMatrix(param.value.rows(), param.value.cols());
    }
    RFG_CHECK(state.m.same_shape(param.value) && state.v.same_shape(param.value),
              DimensionError, "optimizer state shape does not match parameter '",
              param.name, "'");
    RFG_CHECK(param.grad.all_finite(), ParameterError,
              "non-finite gradient for parameter '", param.name, "'");
    state.t += 1;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.t));
    kernels::active().adamw(param.value.data(), state.m.data(), state.v.data(),
                            param.grad.data(), param.value.size(), cfg.lr,
                            cfg.beta1, cfg.beta2, cfg.eps, cfg.weight_decay,
                            bc1, bc2);
    param.version += 1;
}

AdamW::AdamW(std::vector<ParamTensor*> params, AdamWConfig cfg)
    : params_(std::move(params)), states_(params_.size()), cfg_(cfg) {}

void AdamW::step() {
    for (std::size_t i = 0; i < params_.size(); ++i) {
        adamw_step(*params_[i], states_[i], cfg_);
        params_[i]->zero_grad();
    }
}

} // namespace rfgnn
