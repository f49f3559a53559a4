#pragma once

#include <cstdint>
#include <vector>

#include "rfgnn/core/adamw.hpp"
#include "rfgnn/core/error.hpp"
#include "rfgnn/core/rng.hpp"

namespace rfgnn {

/// Glorot-style uniform init, range +-sqrt(6/(fan_in+fan_out)), row-major
/// draw order.
void glorot_uniform(ParamTensor& p, SplitRng& rng);

/// (parameter, version-at-forward) pairs recorded into forward caches.
struct ParamStamp {
    const ParamTensor* param = nullptr;
    std::uint64_t version = 0;
};

inline void record_stamp(std::vector<ParamStamp>& stamps, const ParamTensor& p) {
    stamps.push_back({&p, p.version});
}

/// Rejects a backward pass whose cache predates a parameter update.
inline void verify_stamps(const std::vector<ParamStamp>& stamps, const char* what) {
    for (const auto& s : stamps) {
        RFG_CHECK(s.param->version == s.version, Error, what,
                  ": stale forward cache, parameter '", s.param->name,
                  "' changed after the forward pass");
    }
}

} // namespace rfgnn
