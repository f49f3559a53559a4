#include "rfgnn/graph/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

SparseAdjacency normalize_adjacency(std::span<const Edge> edges, std::int32_t n) {
    RFG_CHECK(n >= 0, ParameterError, "negative node count");
    // Binary A+I, symmetrized and deduplicated.
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    pairs.reserve(edges.size() * 2 + static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        RFG_CHECK(e.src >= 0 && e.src < n && e.dst >= 0 && e.dst < n, DimensionError,
                  "edge (", e.src, ",", e.dst, ") out of range [0,", n, ")");
        pairs.emplace_back(e.src, e.dst);
        pairs.emplace_back(e.dst, e.src);
    }
    for (std::int32_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<double> degree(static_cast<std::size_t>(n), 0.0);
    for (const auto& [src, dst] : pairs) {
        (void)dst;
        degree[static_cast<std::size_t>(src)] += 1.0;
    }
    std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
        inv_sqrt[static_cast<std::size_t>(i)] =
            1.0 / std::sqrt(degree[static_cast<std::size_t>(i)]);
    }

    SparseAdjacency a;
    a.n = n;
    a.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    a.col_idx.reserve(pairs.size());
    a.vals.reserve(pairs.size());
    for (const auto& [src, dst] : pairs) {
        a.row_ptr[static_cast<std::size_t>(src) + 1]++;
        a.col_idx.push_back(dst);
        a.vals.push_back(inv_sqrt[static_cast<std::size_t>(src)] *
                         inv_sqrt[static_cast<std::size_t>(dst)]);
    }
    for (std::int32_t i = 0; i < n; ++i) {
        a.row_ptr[static_cast<std::size_t>(i) + 1] += a.row_ptr[static_cast<std::size_t>(i)];
    }
    return a;
}

} // namespace rfgnn
