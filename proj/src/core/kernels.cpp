#include "rfgnn/core/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rfgnn/core/error.hpp"

namespace rfgnn::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Table* table_for(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return &scalar_table;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return cpu_has_avx2() ? &avx2_table : nullptr;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

namespace {

std::atomic<const Table*> g_active{nullptr};

const Table* pick_initial() {
    if (const char* env = std::getenv("RFGNN_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_table;
        if (std::strcmp(env, "avx2") == 0) {
            const Table* t = table_for(Isa::avx2);
            RFG_CHECK(t != nullptr, ParameterError,
                      "RFGNN_KERNELS=avx2 but this CPU does not support AVX2");
            return t;
        }
        RFG_CHECK(std::strcmp(env, "auto") == 0, ParameterError,
                  "RFGNN_KERNELS must be scalar, avx2 or auto, got '", env, "'");
    }
    if (const Table* t = table_for(Isa::avx2)) return t;
    return &scalar_table;
}

} // namespace

const Table& active() {
    const Table* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = pick_initial();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void select(Isa isa) {
    const Table* t = table_for(isa);
    RFG_CHECK(t != nullptr, ParameterError,
              "requested kernel table is not available on this CPU");
    g_active.store(t, std::memory_order_release);
}

} // namespace rfgnn::kernels
