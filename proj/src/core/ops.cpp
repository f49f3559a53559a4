#include "rfgnn/core/ops.hpp"

#include <algorithm>
#include <cmath>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/kernels.hpp"

namespace rfgnn {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows(), b.cols());
    matmul_acc(a, b, c);
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.cols(), b.cols());
    matmul_tn_acc(a, b, c);
    return c;
}

void matmul_acc(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    RFG_CHECK(a.cols() == b.rows(), DimensionError,
              "matmul: inner dimensions differ: ", shape_str(a), " x ", shape_str(b));
    RFG_CHECK(c.rows() == a.rows() && c.cols() == b.cols(), DimensionError,
              "matmul: accumulator is ", shape_str(c), ", expected (",
              a.rows(), "x", b.cols(), ")");
    kernels::active().matmul_nn_acc(a.data(), b.data(), c.data(),
                                    a.rows(), a.cols(), b.cols());
}

void matmul_tn_acc(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    RFG_CHECK(a.rows() == b.rows(), DimensionError,
              "matmul_tn: row counts differ: ", shape_str(a), " vs ", shape_str(b));
    RFG_CHECK(c.rows() == a.cols() && c.cols() == b.cols(), DimensionError,
              "matmul_tn: accumulator is ", shape_str(c), ", expected (",
              a.cols(), "x", b.cols(), ")");
    kernels::active().matmul_tn_acc(a.data(), b.data(), c.data(),
                                    a.rows(), a.cols(), b.cols());
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

void add_scaled(DenseMatrix& y, double alpha, const DenseMatrix& x) {
    RFG_CHECK(y.same_shape(x), DimensionError,
              "add_scaled: shapes differ: ", shape_str(y), " vs ", shape_str(x));
    kernels::active().axpy(alpha, x.data(), y.data(), y.size());
}

void scale_inplace(DenseMatrix& y, double alpha) {
    kernels::active().scale(y.data(), alpha, y.size());
}

void hadamard_inplace(DenseMatrix& y, const DenseMatrix& x) {
    RFG_CHECK(y.same_shape(x), DimensionError,
              "hadamard: shapes differ: ", shape_str(y), " vs ", shape_str(x));
    kernels::active().mul(x.data(), y.data(), y.size());
}

DenseMatrix hadamard(const DenseMatrix& x, const DenseMatrix& y) {
    RFG_CHECK(x.same_shape(y), DimensionError,
              "hadamard: shapes differ: ", shape_str(x), " vs ", shape_str(y));
    DenseMatrix z(x.rows(), x.cols());
    kernels::active().mul_out(x.data(), y.data(), z.data(), z.size());
    return z;
}

DenseMatrix spmm(const SparseAdjacency& a, const DenseMatrix& x) {
    RFG_CHECK(static_cast<std::size_t>(a.n) == x.rows(), DimensionError,
              "spmm: adjacency has ", a.n, " nodes but features have ",
              x.rows(), " rows");
    DenseMatrix y(static_cast<std::size_t>(a.n), x.cols());
    kernels::active().spmm(a.row_ptr.data(), a.col_idx.data(), a.vals.data(),
                           x.data(), y.data(), static_cast<std::size_t>(a.n),
                           x.cols());
    return y;
}

void add_row_bias(DenseMatrix& m, const DenseMatrix& bias) {
    RFG_CHECK(bias.rows() == 1 && bias.cols() == m.cols(), DimensionError,
              "bias is ", shape_str(bias), ", expected (1x", m.cols(), ")");
    const auto& kt = kernels::active();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        kt.axpy(1.0, bias.data(), m.row(i), m.cols());
    }
}

DenseMatrix column_sums(const DenseMatrix& m) {
    DenseMatrix out(1, m.cols());
    const auto& kt = kernels::active();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        kt.axpy(1.0, m.row(i), out.data(), m.cols());
    }
    return out;
}

DenseMatrix select_columns(const DenseMatrix& m, std::span<const std::int32_t> cols) {
    DenseMatrix out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto c = cols[j];
        RFG_CHECK(c >= 0 && static_cast<std::size_t>(c) < m.cols(), DimensionError,
                  "column ", c, " out of range for ", shape_str(m));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out(i, j) = m(i, static_cast<std::size_t>(c));
        }
    }
    return out;
}

DenseMatrix select_rows(const DenseMatrix& m, std::span<const std::int32_t> rows) {
    DenseMatrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = rows[i];
        RFG_CHECK(r >= 0 && static_cast<std::size_t>(r) < m.rows(), DimensionError,
                  "row ", r, " out of range for ", shape_str(m));
        std::copy(m.row(static_cast<std::size_t>(r)),
                  m.row(static_cast<std::size_t>(r)) + m.cols(), out.row(i));
    }
    return out;
}

ReluResult relu_forward(const DenseMatrix& x) {
    ReluResult res{DenseMatrix(x.rows(), x.cols()), DenseMatrix(x.rows(), x.cols())};
    kernels::active().relu(x.data(), res.value.data(), res.mask.data(), x.size());
    return res;
}

DenseMatrix relu_backward(const DenseMatrix& mask, const DenseMatrix& upstream) {
    return hadamard(mask, upstream);
}

DenseMatrix softmax_rows(const DenseMatrix& x) {
    RFG_CHECK(x.cols() >= 1, DimensionError, "softmax_rows: empty rows");
    DenseMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double* in = x.row(i);
        double* o = out.row(i);
        double mx = in[0];
        for (std::size_t j = 1; j < x.cols(); ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < x.cols(); ++j) {
            o[j] = std::exp(in[j] - mx);
            sum += o[j];
        }
        for (std::size_t j = 0; j < x.cols(); ++j) o[j] /= sum;
    }
    return out;
}

CrossEntropyResult cross_entropy(const DenseMatrix& logits,
                                 std::span<const std::int32_t> labels,
                                 std::span<const std::int32_t> mask) {
    RFG_CHECK(!mask.empty(), ParameterError, "empty supervision set");
    CrossEntropyResult res;
    res.grad_logits = DenseMatrix(logits.rows(), logits.cols());
    const double inv = 1.0 / static_cast<double>(mask.size());
    double loss = 0.0;
    for (const auto node : mask) {
        RFG_CHECK(node >= 0 && static_cast<std::size_t>(node) < logits.rows(),
                  DimensionError, "masked node ", node, " out of range for ",
                  shape_str(logits));
        const auto label = labels[static_cast<std::size_t>(node)];
        RFG_CHECK(label >= 0 && static_cast<std::size_t>(label) < logits.cols(),
                  ParameterError, "node ", node, " has label ", label,
                  " outside [0,", logits.cols(), ")");
        const double* in = logits.row(static_cast<std::size_t>(node));
        double* g = res.grad_logits.row(static_cast<std::size_t>(node));
        // log-sum-exp with max subtraction, then grad = (softmax - onehot)/|mask|
        double mx = in[0];
        for (std::size_t j = 1; j < logits.cols(); ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < logits.cols(); ++j) sum += std::exp(in[j] - mx);
        const double lse = mx + std::log(sum);
        loss += (lse - in[static_cast<std::size_t>(label)]) * inv;
        for (std::size_t j = 0; j < logits.cols(); ++j) {
            g[j] = std::exp(in[j] - mx) / sum * inv;
        }
        g[static_cast<std::size_t>(label)] -= inv;
    }
    res.loss = loss;
    return res;
}

DenseMatrix dropout_mask(std::size_t rows, std::size_t cols, double rate,
                         SplitRng& rng) {
    RFG_CHECK(rate >= 0.0 && rate < 1.0, ParameterError,
              "dropout rate must be in [0,1), got ", rate);
    DenseMatrix mask(rows, cols);
    if (rate == 0.0) {
        mask.fill(1.0);
        return mask;
    }
    const double keep_scale = 1.0 / (1.0 - rate);
    double* d = mask.data();
    for (std::size_t i = 0; i < mask.size(); ++i) {
        d[i] = rng.next_double() < rate ? 0.0 : keep_scale;
    }
    return mask;
}

} // namespace rfgnn
