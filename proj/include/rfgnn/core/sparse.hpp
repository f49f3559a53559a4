#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "rfgnn/core/dense.hpp"

namespace rfgnn {

/// CSR matrix in canonical form: within each row the column indices are
/// strictly increasing, row_ptr is non-decreasing with row_ptr[n] == nnz.
struct SparseAdjacency {
    std::int32_t n = 0;
    std::vector<std::int32_t> row_ptr;
    std::vector<std::int32_t> col_idx;
    std::vector<double> vals;

    std::size_t nnz() const { return col_idx.size(); }

    static SparseAdjacency identity(std::int32_t n);

    /// Canonical CSR from (row, col, value) triplets. Triplets may arrive in
    /// any order; duplicates are an error (callers dedupe first).
    static SparseAdjacency from_triplets(
        std::int32_t n, std::vector<std::tuple<std::int32_t, std::int32_t, double>> triplets);

    /// Dense copy; test/oracle helper.
    DenseMatrix densify() const;

    /// Throws if any invariant is broken.
    void validate() const;

    bool operator==(const SparseAdjacency&) const = default;
};

} // namespace rfgnn
