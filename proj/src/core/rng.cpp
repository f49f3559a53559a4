#include "rfgnn/core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Stafford mix 13 variant used by the reference code).
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace

SplitRng::SplitRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t SplitRng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double SplitRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u must be nonzero for the log.
    double u = 0.0;
    do {
        u = next_double();
    } while (u == 0.0);
    const double v = next_double();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

std::uint64_t SplitRng::next_below(std::uint64_t bound) {
    RFG_CHECK(bound > 0, ParameterError, "next_below: bound must be positive");
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

SplitRng SplitRng::split(std::uint64_t stream) const {
    return SplitRng(derive_seed(seed_, stream));
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    return mix64(mix64(root + kGolden) ^ mix64(stream + 0x2545F4914F6CDD1Dull));
}

std::vector<std::int32_t> sample_without_replacement(SplitRng& rng,
                                                     std::int32_t n,
                                                     std::int32_t count) {
    RFG_CHECK(count >= 0 && count <= n, ParameterError,
              "sample_without_replacement: count ", count, " out of range for n=", n);
    // Partial Fisher-Yates over an index pool.
    std::vector<std::int32_t> pool(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (std::int32_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::int32_t>(
                               rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<std::int32_t> out(pool.begin(), pool.begin() + count);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rfgnn
