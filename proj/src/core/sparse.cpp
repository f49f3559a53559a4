#include "rfgnn/core/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

SparseAdjacency SparseAdjacency::identity(std::int32_t n) {
    SparseAdjacency a;
    a.n = n;
    a.row_ptr.resize(static_cast<std::size_t>(n) + 1);
    a.col_idx.resize(static_cast<std::size_t>(n));
    a.vals.assign(static_cast<std::size_t>(n), 1.0);
    for (std::int32_t i = 0; i < n; ++i) {
        a.row_ptr[static_cast<std::size_t>(i)] = i;
        a.col_idx[static_cast<std::size_t>(i)] = i;
    }
    a.row_ptr[static_cast<std::size_t>(n)] = n;
    return a;
}

SparseAdjacency SparseAdjacency::from_triplets(
    std::int32_t n, std::vector<std::tuple<std::int32_t, std::int32_t, double>> triplets) {
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(std::get<0>(a), std::get<1>(a)) <
                         std::pair(std::get<0>(b), std::get<1>(b));
              });
    SparseAdjacency a;
    a.n = n;
    a.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    a.col_idx.reserve(triplets.size());
    a.vals.reserve(triplets.size());
    std::int32_t prev_r = -1, prev_c = -1;
    for (const auto& [r, c, v] : triplets) {
        RFG_CHECK(r >= 0 && r < n && c >= 0 && c < n, DimensionError,
                  "triplet (", r, ",", c, ") out of range for n=", n);
        RFG_CHECK(r != prev_r || c != prev_c, ParameterError,
                  "duplicate triplet at (", r, ",", c, ")");
        a.row_ptr[static_cast<std::size_t>(r) + 1]++;
        a.col_idx.push_back(c);
        a.vals.push_back(v);
        prev_r = r;
        prev_c = c;
    }
    for (std::int32_t i = 0; i < n; ++i) {
        a.row_ptr[static_cast<std::size_t>(i) + 1] +=
            a.row_ptr[static_cast<std::size_t>(i)];
    }
    return a;
}

DenseMatrix SparseAdjacency::densify() const {
    DenseMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
        for (std::int32_t e = row_ptr[static_cast<std::size_t>(i)];
             e < row_ptr[static_cast<std::size_t>(i) + 1]; ++e) {
            out(static_cast<std::size_t>(i),
                static_cast<std::size_t>(col_idx[static_cast<std::size_t>(e)])) =
                vals[static_cast<std::size_t>(e)];
        }
    }
    return out;
}

void SparseAdjacency::validate() const {
    RFG_CHECK(n >= 0, DimensionError, "negative node count");
    RFG_CHECK(row_ptr.size() == static_cast<std::size_t>(n) + 1, DimensionError,
              "row_ptr length ", row_ptr.size(), " != n+1 = ", n + 1);
    RFG_CHECK(col_idx.size() == vals.size(), DimensionError,
              "col_idx/vals length mismatch: ", col_idx.size(), " vs ", vals.size());
    RFG_CHECK(row_ptr.front() == 0 &&
                  row_ptr.back() == static_cast<std::int32_t>(col_idx.size()),
              DimensionError, "row_ptr endpoints inconsistent with nnz");
    for (std::int32_t i = 0; i < n; ++i) {
        const auto lo = row_ptr[static_cast<std::size_t>(i)];
        const auto hi = row_ptr[static_cast<std::size_t>(i) + 1];
        RFG_CHECK(lo <= hi, DimensionError, "row_ptr decreases at row ", i);
        for (std::int32_t e = lo; e < hi; ++e) {
            const auto c = col_idx[static_cast<std::size_t>(e)];
            RFG_CHECK(c >= 0 && c < n, DimensionError,
                      "column ", c, " out of range in row ", i);
            RFG_CHECK(e == lo || col_idx[static_cast<std::size_t>(e) - 1] < c,
                      DimensionError, "columns not strictly increasing in row ", i);
            RFG_CHECK(std::isfinite(vals[static_cast<std::size_t>(e)]),
                      ParameterError, "non-finite value in row ", i);
        }
    }
}

} // namespace rfgnn
