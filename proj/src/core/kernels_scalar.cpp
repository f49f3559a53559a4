// Scalar reference kernels. These define the numeric contract: every other
// implementation must match them bitwise. Keep the loops dumb — the compiler
// may auto-vectorize them, which is safe because no output element's
// operation sequence depends on it (contraction loops stay serial per
// element and contraction stays in ascending index order).

#include "rfgnn/core/kernels.hpp"

#include <cmath>

namespace rfgnn::kernels {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* y, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

void mul_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= x[i];
}

void mul_out_scalar(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void relu_scalar(const double* x, double* y, double* mask, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const bool on = x[i] > 0.0;
        y[i] = on ? x[i] : 0.0;
        mask[i] = on ? 1.0 : 0.0;
    }
}

void matmul_nn_acc_scalar(const double* a, const double* b, double* c,
                          std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c + i * m;
        const double* arow = a + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aval = arow[p];
            const double* brow = b + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += aval * brow[j];
        }
    }
}

void matmul_tn_acc_scalar(const double* a, const double* b, double* c,
                          std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        const double* brow = b + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            const double aval = arow[p];
            double* crow = c + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += aval * brow[j];
        }
    }
}

void spmm_scalar(const std::int32_t* row_ptr, const std::int32_t* col_idx,
                 const double* vals, const double* x, double* y,
                 std::size_t n, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        double* yrow = y + i * m;
        for (std::size_t j = 0; j < m; ++j) yrow[j] = 0.0;
        for (std::int32_t e = row_ptr[i]; e < row_ptr[i + 1]; ++e) {
            const double v = vals[e];
            const double* xrow = x + static_cast<std::size_t>(col_idx[e]) * m;
            for (std::size_t j = 0; j < m; ++j) yrow[j] += v * xrow[j];
        }
    }
}

void adamw_scalar(double* w, double* m, double* v, const double* g, std::size_t n,
                  double lr, double beta1, double beta2, double eps,
                  double weight_decay, double bc1, double bc2) {
    const double om1 = 1.0 - beta1;
    const double om2 = 1.0 - beta2;
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = g[i];
        m[i] = beta1 * m[i] + om1 * gi;
        v[i] = beta2 * v[i] + om2 * (gi * gi);
        const double mhat = m[i] / bc1;
        const double vhat = v[i] / bc2;
        w[i] = w[i] - lr * (mhat / (std::sqrt(vhat) + eps) + weight_decay * w[i]);
    }
}

} // namespace

const Table scalar_table = {
    "scalar",
    axpy_scalar,
    scale_scalar,
    mul_scalar,
    mul_out_scalar,
    relu_scalar,
    matmul_nn_acc_scalar,
    matmul_tn_acc_scalar,
    spmm_scalar,
    adamw_scalar,
};

} // namespace rfgnn::kernels
