#include "rfgnn/metrics/metrics.hpp"

#include <cmath>

#include "rfgnn/core/error.hpp"

namespace rfgnn {

Confusion confusion(std::span<const std::int32_t> pred_classes,
                    std::span<const std::int32_t> labels,
                    std::span<const std::int32_t> mask) {
    RFG_CHECK(!mask.empty(), ParameterError, "confusion: empty evaluation mask");
    Confusion c;
    for (const auto node : mask) {
        RFG_CHECK(node >= 0 && static_cast<std::size_t>(node) < pred_classes.size(),
                  DimensionError, "confusion: node ", node, " out of range");
        RFG_CHECK(labels[static_cast<std::size_t>(node)] >= 0, ParameterError,
                  "confusion: node ", node, " has no label");
        const bool actual = labels[static_cast<std::size_t>(node)] == 1;
        const bool predicted = pred_classes[static_cast<std::size_t>(node)] == 1;
        if (actual && predicted) {
            ++c.tp;
        } else if (!actual && !predicted) {
            ++c.tn;
        } else if (predicted) {
            ++c.fp;
        } else {
            ++c.fn;
        }
    }
    return c;
}

CoreMetrics metrics_from_confusion(const Confusion& c) {
    RFG_CHECK(c.total() > 0, ParameterError, "metrics: empty confusion matrix");
    CoreMetrics m;
    m.confusion = c;
    m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
    m.precision = (c.tp + c.fp) == 0
                      ? 0.0
                      : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    m.recall = (c.tp + c.fn) == 0
                   ? 0.0
                   : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

ClassScores one_vs_rest(std::span<const std::int32_t> pred_classes,
                        std::span<const std::int32_t> labels,
                        std::span<const std::int32_t> mask, std::int32_t cls) {
    std::int64_t tp = 0, fp = 0, fn = 0;
    for (const auto node : mask) {
        const bool actual = labels[static_cast<std::size_t>(node)] == cls;
        const bool predicted = pred_classes[static_cast<std::size_t>(node)] == cls;
        if (actual && predicted) ++tp;
        if (!actual && predicted) ++fp;
        if (actual && !predicted) ++fn;
    }
    ClassScores s;
    s.precision = (tp + fp) == 0 ? 0.0
                                 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    s.recall = (tp + fn) == 0 ? 0.0
                              : static_cast<double>(tp) / static_cast<double>(tp + fn);
    s.f1 = (s.precision + s.recall) == 0.0
               ? 0.0
               : 2.0 * s.precision * s.recall / (s.precision + s.recall);
    return s;
}

double accuracy(std::span<const std::int32_t> pred_classes,
                std::span<const std::int32_t> labels,
                std::span<const std::int32_t> mask) {
    RFG_CHECK(!mask.empty(), ParameterError, "accuracy: empty evaluation mask");
    std::int64_t hit = 0;
    for (const auto node : mask) {
        if (pred_classes[static_cast<std::size_t>(node)] ==
            labels[static_cast<std::size_t>(node)]) {
            ++hit;
        }
    }
    return static_cast<double>(hit) / static_cast<double>(mask.size());
}

Aggregate aggregate_runs(std::span<const double> values) {
    RFG_CHECK(!values.empty(), ParameterError, "aggregate_runs: no runs");
    Aggregate a;
    for (const double v : values) a.mean += v;
    a.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (const double v : values) sq += (v - a.mean) * (v - a.mean);
        a.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return a;
}

} // namespace rfgnn
