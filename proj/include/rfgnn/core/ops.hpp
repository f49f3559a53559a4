#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "rfgnn/core/dense.hpp"
#include "rfgnn/core/rng.hpp"
#include "rfgnn/core/sparse.hpp"

namespace rfgnn {

// ---- dense linear algebra -------------------------------------------------

/// a (n x k) * b (k x m) -> (n x m)
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// a^T (k x n) * b (n x m) -> (k x m), with a stored (n x k)
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);

/// c += a * b
void matmul_acc(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);

/// c += a^T * b
void matmul_tn_acc(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);

DenseMatrix transpose(const DenseMatrix& a);

/// y += alpha * x
void add_scaled(DenseMatrix& y, double alpha, const DenseMatrix& x);

/// y *= alpha
void scale_inplace(DenseMatrix& y, double alpha);

/// y *= x elementwise
void hadamard_inplace(DenseMatrix& y, const DenseMatrix& x);

/// x * y elementwise
DenseMatrix hadamard(const DenseMatrix& x, const DenseMatrix& y);

/// Adjacency (n x n) times dense (n x m).
DenseMatrix spmm(const SparseAdjacency& a, const DenseMatrix& x);

/// logits[r] += bias[0] for every row r; bias is (1 x m).
void add_row_bias(DenseMatrix& m, const DenseMatrix& bias);

/// (1 x m) column sums.
DenseMatrix column_sums(const DenseMatrix& m);

/// Copy of the given columns, order preserved.
DenseMatrix select_columns(const DenseMatrix& m, std::span<const std::int32_t> cols);

/// Copy of the given rows, order preserved.
DenseMatrix select_rows(const DenseMatrix& m, std::span<const std::int32_t> rows);

// ---- activations / loss ---------------------------------------------------

struct ReluResult {
    DenseMatrix value;
    DenseMatrix mask; // 1.0 where the input was positive, else 0.0
};

ReluResult relu_forward(const DenseMatrix& x);

/// Upstream gradient gated by the forward mask.
DenseMatrix relu_backward(const DenseMatrix& mask, const DenseMatrix& upstream);

/// Row-wise softmax with per-row max subtraction.
DenseMatrix softmax_rows(const DenseMatrix& x);

struct CrossEntropyResult {
    double loss = 0.0;
    DenseMatrix grad_logits;
};

/// Mean negative log-likelihood over `mask` rows. Gradient rows outside the
/// mask are zero; inside, (softmax - one_hot) / |mask|.
CrossEntropyResult cross_entropy(const DenseMatrix& logits,
                                 std::span<const std::int32_t> labels,
                                 std::span<const std::int32_t> mask);

/// Inverted-dropout mask: entries are 0 with probability `rate`, else
/// 1/(1-rate). Deterministic given the rng state.
DenseMatrix dropout_mask(std::size_t rows, std::size_t cols, double rate,
                         SplitRng& rng);

} // namespace rfgnn
