#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rfgnn/core/adamw.hpp"

namespace rfgnn {

struct GradCheckResult {
    double max_rel_err = 0.0;
    std::string worst_param;
    std::size_t worst_index = 0;
};

/// Central-difference check of analytic gradients.
///
/// `loss_and_grad` must zero the grads, run a deterministic forward/backward
/// (dropout off, fixed inputs) and return the loss with gradients left in
/// each tensor. Relative error per coordinate uses the denominator
/// max(|analytic|, |numeric|, 1e-8).
GradCheckResult finite_diff_check(const std::function<double()>& loss_and_grad,
                                  const std::vector<ParamTensor*>& params,
                                  double epsilon);

} // namespace rfgnn
