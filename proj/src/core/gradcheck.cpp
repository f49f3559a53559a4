#include "rfgnn/core/gradcheck.hpp"

#include <cmath>

namespace rfgnn {

GradCheckResult finite_diff_check(const std::function<double()>& loss_and_grad,
                                  const std::vector<ParamTensor*>& params,
                                  double epsilon) {
    loss_and_grad();
    std::vector<DenseMatrix> analytic;
    analytic.reserve(params.size());
    for (const ParamTensor* p : params) analytic.push_back(p->grad);

    GradCheckResult res;
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        ParamTensor& p = *params[pi];
        for (std::size_t i = 0; i < p.value.size(); ++i) {
            const double orig = p.value.data()[i];
            p.value.data()[i] = orig + epsilon;
            const double f_plus = loss_and_grad();
            p.value.data()[i] = orig - epsilon;
            const double f_minus = loss_and_grad();
            p.value.data()[i] = orig;

            const double numeric = (f_plus - f_minus) / (2.0 * epsilon);
            const double a = analytic[pi].data()[i];
            const double denom = std::max({std::fabs(a), std::fabs(numeric), 1e-8});
            const double rel = std::fabs(a - numeric) / denom;
            if (rel > res.max_rel_err) {
                res.max_rel_err = rel;
                res.worst_param = p.name;
                res.worst_index = i;
            }
        }
    }
    // Leave the model exactly as found: parameters restored above, grads
    // recomputed at the original point.
    loss_and_grad();
    return res;
}

} // namespace rfgnn
