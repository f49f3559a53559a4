#pragma once

#include <cstddef>
#include <cstdint>

namespace rfgnn::kernels {

/// Row-major arithmetic kernels behind all dense/sparse operations.
///
/// Every implementation must produce results bitwise identical to the scalar
/// reference: per output element the floating-point operation sequence is
/// fixed (accumulation ascends over the contraction index, multiply and add
/// stay separate, no FMA). SIMD variants only change how many independent
/// output elements advance per instruction, so which table is active can
/// never change a numeric result.
struct Table {
    const char* name;

    /// y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /// y[i] *= a
    void (*scale)(double* y, double a, std::size_t n);
    /// y[i] *= x[i]
    void (*mul)(const double* x, double* y, std::size_t n);
    /// z[i] = x[i] * y[i]
    void (*mul_out)(const double* x, const double* y, double* z, std::size_t n);
    /// y[i] = x[i] > 0 ? x[i] : 0;  mask[i] = x[i] > 0 ? 1.0 : 0.0
    void (*relu)(const double* x, double* y, double* mask, std::size_t n);
    /// C(n x m) += A(n x k) * B(k x m)
    void (*matmul_nn_acc)(const double* a, const double* b, double* c,
                          std::size_t n, std::size_t k, std::size_t m);
    /// C(k x m) += A^T * B with A stored (n x k), B (n x m)
    void (*matmul_tn_acc)(const double* a, const double* b, double* c,
                          std::size_t n, std::size_t k, std::size_t m);
    /// Y(n x m) = Acsr(n x n) * X(n x m); overwrites Y
    void (*spmm)(const std::int32_t* row_ptr, const std::int32_t* col_idx,
                 const double* vals, const double* x, double* y,
                 std::size_t n, std::size_t m);
    /// Decoupled-weight-decay Adam update on one tensor.
    /// bc1 = 1 - beta1^t, bc2 = 1 - beta2^t for the step being applied.
    void (*adamw)(double* w, double* m, double* v, const double* g, std::size_t n,
                  double lr, double beta1, double beta2, double eps,
                  double weight_decay, double bc1, double bc2);
};

enum class Isa { scalar, avx2 };

/// True when the running CPU reports AVX2.
bool cpu_has_avx2();

/// Table for one ISA; nullptr when not compiled in or not runtime-supported.
const Table* table_for(Isa isa);

/// Active table. First call decides: RFGNN_KERNELS=scalar|avx2 forces a
/// choice (avx2 errors out if unsupported), anything else auto-detects.
const Table& active();

/// Override the active table; test hook for equivalence checks.
void select(Isa isa);

extern const Table scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const Table avx2_table;
#endif

} // namespace rfgnn::kernels
