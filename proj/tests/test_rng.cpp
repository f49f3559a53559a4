#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "rfgnn/core/error.hpp"
#include "rfgnn/core/rng.hpp"

using namespace rfgnn;

TEST_CASE("SplitRng streams are deterministic and seed-distinct") {
    SplitRng a(123), b(123), c(124);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool any_diff = false;
    SplitRng a2(123);
    for (int i = 0; i < 100; ++i) any_diff |= a2.next_u64() != c.next_u64();
    CHECK(any_diff);
}

TEST_CASE("split children are independent of parent consumption order") {
    SplitRng parent(9);
    const auto child_before = parent.split(4).next_u64();
    parent.next_u64();
    parent.next_u64();
    CHECK(parent.split(4).next_u64() == child_before);
    CHECK(parent.split(4).next_u64() != parent.split(5).next_u64());
    CHECK(derive_seed(9, 4) == SplitRng(9).split(4).seed());
}

TEST_CASE("next_double in [0,1); next_below bounded and roughly uniform") {
    SplitRng rng(77);
    for (int i = 0; i < 10000; ++i) {
        const double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
    std::array<int, 5> buckets{};
    for (int i = 0; i < 50000; ++i) {
        buckets[rng.next_below(5)]++;
    }
    for (const int b : buckets) {
        CHECK(b > 9000);
        CHECK(b < 11000);
    }
    CHECK_THROWS_AS(rng.next_below(0), ParameterError);
}

TEST_CASE("next_normal has sane first moments") {
    SplitRng rng(5);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_normal();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(var - 1.0) < 0.03);
}

TEST_CASE("sample_without_replacement: distinct, sorted, exact count") {
    SplitRng rng(13);
    const auto s = sample_without_replacement(rng, 100, 37);
    CHECK(s.size() == 37);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::set<std::int32_t>(s.begin(), s.end()).size() == 37)    ;
    CHECK(s.front() >= 0);
    CHECK(s.back() < 100);

    const auto all = sample_without_replacement(rng, 8, 8);
    for (std::int32_t i = 0; i < 8; ++i) CHECK(all[static_cast<std::size_t>(i)] == i);

    CHECK_THROWS_AS(sample_without_replacement(rng, 5, 6), ParameterError);
}
