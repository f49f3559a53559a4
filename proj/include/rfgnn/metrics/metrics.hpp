#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rfgnn/core/dense.hpp"

namespace rfgnn {

/// Binary confusion counts; class 1 (bot) is the positive class.
struct Confusion {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + tn + fp + fn; }
};

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct CoreMetrics {
    double accuracy = 0.0;
    double precision = 0.0; // positive class
    double recall = 0.0;
    double f1 = 0.0;
    Confusion confusion;
};

/// Counts over the masked nodes only; predictions/labels are collapsed to
/// positive (== 1) vs rest.
Confusion confusion(std::span<const std::int32_t> pred_classes,
                    std::span<const std::int32_t> labels,
                    std::span<const std::int32_t> mask);

/// Accuracy/precision/recall/F1 with the zero-division conventions:
/// precision = 0 when tp+fp = 0, recall = 0 when tp+fn = 0, f1 = 0 when
/// p+r = 0.
CoreMetrics metrics_from_confusion(const Confusion& c);

/// One-vs-rest precision/recall/F1 for class `cls`.
ClassScores one_vs_rest(std::span<const std::int32_t> pred_classes,
                        std::span<const std::int32_t> labels,
                        std::span<const std::int32_t> mask, std::int32_t cls);

/// Plain accuracy over the mask (any class count).
double accuracy(std::span<const std::int32_t> pred_classes,
                std::span<const std::int32_t> labels,
                std::span<const std::int32_t> mask);

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0; // sample std (n-1), 0 when n == 1
};

Aggregate aggregate_runs(std::span<const double> values);

} // namespace rfgnn
