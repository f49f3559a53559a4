#include "rfgnn/graph/noise.hpp"

#include <cmath>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/rng.hpp"

namespace rfgnn {

MultiRelationGraph inject_feature_noise(const MultiRelationGraph& g,
                                        double fraction, std::uint64_t seed) {
    RFG_CHECK(fraction >= 0.0 && fraction <= 1.0, ParameterError,
              "noise fraction must be in [0,1], got ", fraction);
    MultiRelationGraph out = g;
    const std::size_t total = g.features.size();
    const auto count = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(total)));
    if (count == 0) return out;

    SplitRng rng(seed);
    // Partial Fisher-Yates over entry indices; exact count, no repeats.
    std::vector<std::size_t> pool(total);
    for (std::size_t i = 0; i < total; ++i) pool[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.next_below(total - i));
        std::swap(pool[i], pool[j]);
        out.features.data()[pool[i]] += rng.next_normal();
    }
    return out;
}

} // namespace rfgnn
