// AVX2 kernels. Bitwise contract with the scalar reference: multiply and add
// stay separate instructions (this TU is built with -mavx2 only, no -mfma,
// and -ffp-contract=off), contraction indices advance in the same order, and
// vpsqrtd/vdivpd are IEEE-exact, so every lane reproduces the scalar result
// bit for bit. Vectorization only widens the set of independent output
// elements processed per instruction.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "rfgnn/core/kernels.hpp"

namespace rfgnn::kernels {

namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256d y0 = _mm256_loadu_pd(y + i);
        __m256d y1 = _mm256_loadu_pd(y + i + 4);
        __m256d y2 = _mm256_loadu_pd(y + i + 8);
        __m256d y3 = _mm256_loadu_pd(y + i + 12);
        y0 = _mm256_add_pd(y0, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
        y1 = _mm256_add_pd(y1, _mm256_mul_pd(av, _mm256_loadu_pd(x + i + 4)));
        y2 = _mm256_add_pd(y2, _mm256_mul_pd(av, _mm256_loadu_pd(x + i + 8)));
        y3 = _mm256_add_pd(y3, _mm256_mul_pd(av, _mm256_loadu_pd(x + i + 12)));
        _mm256_storeu_pd(y + i, y0);
        _mm256_storeu_pd(y + i + 4, y1);
        _mm256_storeu_pd(y + i + 8, y2);
        _mm256_storeu_pd(y + i + 12, y3);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_add_pd(yv, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* y, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i), av));
    }
    for (; i < n; ++i) y[i] *= a;
}

void mul_avx2(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i),
                                              _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) y[i] *= x[i];
}

void mul_out_avx2(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(z + i, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                              _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void relu_avx2(const double* x, double* y, double* mask, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d gt = _mm256_cmp_pd(xv, zero, _CMP_GT_OQ);
        _mm256_storeu_pd(y + i, _mm256_and_pd(xv, gt));
        _mm256_storeu_pd(mask + i, _mm256_and_pd(one, gt));
    }
    for (; i < n; ++i) {
        const bool on = x[i] > 0.0;
        y[i] = on ? x[i] : 0.0;
        mask[i] = on ? 1.0 : 0.0;
    }
}

// Inner j-sweep of the two matmul kernels: crow[j] += a0*b0[j] (+ a1*b1[j]).
inline void row_axpy2(double a0, const double* b0, double a1, const double* b1,
                      double* crow, std::size_t m) {
    const __m256d a0v = _mm256_set1_pd(a0);
    const __m256d a1v = _mm256_set1_pd(a1);
    std::size_t j = 0;
    for (; j + 8 <= m; j += 8) {
        __m256d c0 = _mm256_loadu_pd(crow + j);
        __m256d c1 = _mm256_loadu_pd(crow + j + 4);
        c0 = _mm256_add_pd(c0, _mm256_mul_pd(a0v, _mm256_loadu_pd(b0 + j)));
        c1 = _mm256_add_pd(c1, _mm256_mul_pd(a0v, _mm256_loadu_pd(b0 + j + 4)));
        c0 = _mm256_add_pd(c0, _mm256_mul_pd(a1v, _mm256_loadu_pd(b1 + j)));
        c1 = _mm256_add_pd(c1, _mm256_mul_pd(a1v, _mm256_loadu_pd(b1 + j + 4)));
        _mm256_storeu_pd(crow + j, c0);
        _mm256_storeu_pd(crow + j + 4, c1);
    }
    for (; j + 4 <= m; j += 4) {
        __m256d c0 = _mm256_loadu_pd(crow + j);
        c0 = _mm256_add_pd(c0, _mm256_mul_pd(a0v, _mm256_loadu_pd(b0 + j)));
        c0 = _mm256_add_pd(c0, _mm256_mul_pd(a1v, _mm256_loadu_pd(b1 + j)));
        _mm256_storeu_pd(crow + j, c0);
    }
    for (; j < m; ++j) {
        crow[j] += a0 * b0[j];
        crow[j] += a1 * b1[j];
    }
}

void matmul_nn_acc_avx2(const double* a, const double* b, double* c,
                        std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        std::size_t p = 0;
        for (; p + 2 <= k; p += 2) {
            row_axpy2(arow[p], b + p * m, arow[p + 1], b + (p + 1) * m, crow, m);
        }
        if (p < k) axpy_avx2(arow[p], b + p * m, crow, m);
    }
}

void matmul_tn_acc_avx2(const double* a, const double* b, double* c,
                        std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        const double* brow = b + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            axpy_avx2(arow[p], brow, c + p * m, m);
        }
    }
}

void spmm_avx2(const std::int32_t* row_ptr, const std::int32_t* col_idx,
               const double* vals, const double* x, double* y,
               std::size_t n, std::size_t m) {
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
        double* yrow = y + i * m;
        std::size_t j = 0;
        for (; j + 4 <= m; j += 4) _mm256_storeu_pd(yrow + j, zero);
        for (; j < m; ++j) yrow[j] = 0.0;
        std::int32_t e = row_ptr[i];
        const std::int32_t end = row_ptr[i + 1];
        for (; e + 2 <= end; e += 2) {
            row_axpy2(vals[e], x + static_cast<std::size_t>(col_idx[e]) * m,
                      vals[e + 1], x + static_cast<std::size_t>(col_idx[e + 1]) * m,
                      yrow, m);
        }
        if (e < end) {
            axpy_avx2(vals[e], x + static_cast<std::size_t>(col_idx[e]) * m, yrow, m);
        }
    }
}

void adamw_avx2(double* w, double* m, double* v, const double* g, std::size_t n,
                double lr, double beta1, double beta2, double eps,
                double weight_decay, double bc1, double bc2) {
    const __m256d b1v = _mm256_set1_pd(beta1);
    const __m256d b2v = _mm256_set1_pd(beta2);
    const __m256d om1v = _mm256_set1_pd(1.0 - beta1);
    const __m256d om2v = _mm256_set1_pd(1.0 - beta2);
    const __m256d bc1v = _mm256_set1_pd(bc1);
    const __m256d bc2v = _mm256_set1_pd(bc2);
    const __m256d epsv = _mm256_set1_pd(eps);
    const __m256d lrv = _mm256_set1_pd(lr);
    const __m256d wdv = _mm256_set1_pd(weight_decay);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d gv = _mm256_loadu_pd(g + i);
        __m256d mv = _mm256_loadu_pd(m + i);
        __m256d vv = _mm256_loadu_pd(v + i);
        mv = _mm256_add_pd(_mm256_mul_pd(b1v, mv), _mm256_mul_pd(om1v, gv));
        vv = _mm256_add_pd(_mm256_mul_pd(b2v, vv),
                           _mm256_mul_pd(om2v, _mm256_mul_pd(gv, gv)));
        _mm256_storeu_pd(m + i, mv);
        _mm256_storeu_pd(v + i, vv);
        const __m256d mhat = _mm256_div_pd(mv, bc1v);
        const __m256d vhat = _mm256_div_pd(vv, bc2v);
        const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), epsv);
        __m256d wv = _mm256_loadu_pd(w + i);
        const __m256d step = _mm256_add_pd(_mm256_div_pd(mhat, denom),
                                           _mm256_mul_pd(wdv, wv));
        wv = _mm256_sub_pd(wv, _mm256_mul_pd(lrv, step));
        _mm256_storeu_pd(w + i, wv);
    }
    if (i < n) {
        scalar_table.adamw(w + i, m + i, v + i, g + i, n - i, lr, beta1, beta2,
                           eps, weight_decay, bc1, bc2);
    }
}

} // namespace

const Table avx2_table = {
    "avx2",
    axpy_avx2,
    scale_avx2,
    mul_avx2,
    mul_out_avx2,
    relu_avx2,
    matmul_nn_acc_avx2,
    matmul_tn_acc_avx2,
    spmm_avx2,
    adamw_avx2,
};

} // namespace rfgnn::kernels

#endif // x86_64
