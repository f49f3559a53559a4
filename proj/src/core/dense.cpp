#include "rfgnn/core/dense.hpp"

#include <algorithm>
#include <cmath>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

DenseMatrix DenseMatrix::from(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix out(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        RFG_CHECK(row.size() == c, DimensionError,
                  "ragged initializer: row ", i, " has ", row.size(),
                  " entries, expected ", c);
        std::copy(row.begin(), row.end(), out.row(i));
        ++i;
    }
    return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

void DenseMatrix::fill(double value) {
    std::fill(data_.begin(), data_.end(), value);
}

bool DenseMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double x) { return std::isfinite(x); });
}

std::string shape_str(const DenseMatrix& m) {
    return concat("(", m.rows(), "x", m.cols(), ")");
}

} // namespace rfgnn
