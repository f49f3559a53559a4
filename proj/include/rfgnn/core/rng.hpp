#pragma once

#include <cstdint>
#include <vector>

namespace rfgnn {

/// Counter-based splittable generator (splitmix64 core).
///
/// A stream is identified by its seed; `split(stream)` derives a child seed
/// from the *identity* of this stream, never from how many values were drawn,
/// so sibling streams are independent of consumption order. Every draw is a
/// pure function of (seed, counter), which keeps parallel branch training
/// bitwise reproducible.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double next_double();

    /// Standard normal via Box-Muller; second value of each pair is cached.
    double next_normal();

    /// Uniform integer in [0, bound) by rejection; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Child stream derived from this stream's seed and `stream`.
    SplitRng split(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Seed of the child stream (root, stream); same mixing as SplitRng::split.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// `count` distinct values from {0, ..., n-1}, ascending.
std::vector<std::int32_t> sample_without_replacement(SplitRng& rng,
                                                     std::int32_t n,
                                                     std::int32_t count);

} // namespace rfgnn
