#pragma once

#include <cmath>
#include <cstring>

#include "rfgnn/core/dense.hpp"
#include "rfgnn/core/rng.hpp"

namespace rfgnn::test {

inline bool bits_equal(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    }
    return m;
}

inline DenseMatrix random_matrix(std::size_t rows, std::size_t cols, SplitRng& rng,
                                 double lo = -1.0, double hi = 1.0) {
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.data()[i] = lo + (hi - lo) * rng.next_double();
    }
    return m;
}

} // namespace rfgnn::test
