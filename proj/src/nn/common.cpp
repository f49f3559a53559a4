#include "rfgnn/nn/common.hpp"

#include <cmath>

namespace rfgnn {

void glorot_uniform(ParamTensor& p, SplitRng& rng) {
    const double fan_in = static_cast<double>(p.value.rows());
    const double fan_out = static_cast<double>(p.value.cols());
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    for (std::size_t i = 0; i < p.value.size(); ++i) {
        p.value.data()[i] = (2.0 * rng.next_double() - 1.0) * limit;
    }
}

} // namespace rfgnn
