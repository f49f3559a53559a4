#include <doctest.h>

#include <cmath>
#include <vector>

#include "rfgnn/core/adamw.hpp"
#include "rfgnn/core/error.hpp"
#include "rfgnn/core/gradcheck.hpp"
#include "rfgnn/core/ops.hpp"
#include "test_util.hpp"

using namespace rfgnn;
using test::bits_equal;
using test::random_matrix;

TEST_CASE("relu forward and backward") {
    const auto r = relu_forward(DenseMatrix::from({{-1, 2}}));
    CHECK(bits_equal(r.value, DenseMatrix::from({{0, 2}})));
    CHECK(bits_equal(relu_backward(r.mask, DenseMatrix::from({{5, 5}})),
                     DenseMatrix::from({{0, 5}})));
}

TEST_CASE("relu gradient matches finite differences") {
    SplitRng rng(3);
    const auto x0 = random_matrix(4, 3, rng);
    const auto w = random_matrix(4, 3, rng); // weights so loss depends smoothly on x
    ParamTensor p("x", 4, 3);
    p.value = x0;
    auto loss_and_grad = [&]() {
        p.zero_grad();
        const auto r = relu_forward(p.value);
        double loss = 0.0;
        for (std::size_t i = 0; i < r.value.size(); ++i) {
            loss += w.data()[i] * r.value.data()[i];
        }
        p.grad = relu_backward(r.mask, w);
        return loss;
    };
    const auto res = finite_diff_check(loss_and_grad, {&p}, 1e-6);
    CHECK(res.max_rel_err < 1e-6);
}

TEST_CASE("softmax_rows: symmetry, stability, normalization") {
    const auto sym = softmax_rows(DenseMatrix::from({{0, 0}}));
    CHECK(sym(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sym(0, 1) == doctest::Approx(0.5).epsilon(1e-12));

    const auto hot = softmax_rows(DenseMatrix::from({{1000, 0}}));
    CHECK(hot.all_finite());
    CHECK(hot(0, 0) == doctest::Approx(1.0));
    CHECK(hot(0, 1) == doctest::Approx(0.0));

    SplitRng rng(5);
    const auto p = softmax_rows(random_matrix(10, 4, rng, -30.0, 30.0));
    for (std::size_t i = 0; i < p.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            CHECK(p(i, j) >= 0.0);
            sum += p(i, j);
        }
        CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("softmax_rows invariant under per-row constant shift") {
    SplitRng rng(6);
    auto x = random_matrix(8, 5, rng, -4.0, 4.0);
    const auto base = softmax_rows(x);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double c = rng.next_double() * 10.0 - 5.0;
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) += c;
    }
    CHECK(test::max_abs_diff(softmax_rows(x), base) < 1e-9);
}

TEST_CASE("cross_entropy: forced values and conventions") {
    const std::vector<std::int32_t> labels{1};
    const std::vector<std::int32_t> mask{0};

    auto uniform = cross_entropy(DenseMatrix::from({{0, 0}}), labels, mask);
    CHECK(uniform.loss == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const std::vector<std::int32_t> zero_label{0};
    auto confident = cross_entropy(DenseMatrix::from({{50, -50}}), zero_label, mask);
    CHECK(confident.loss == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(cross_entropy(DenseMatrix::from({{0, 0}}), labels, {}),
                         doctest::Contains("empty supervision set"), ParameterError);
}

TEST_CASE("cross_entropy gradient matches finite differences") {
    SplitRng rng(9);
    ParamTensor logits("logits", 6, 2);
    logits.value = random_matrix(6, 2, rng, -2.0, 2.0);
    const std::vector<std::int32_t> labels{0, 1, 1, 0, 1, 0};
    const std::vector<std::int32_t> mask{0, 2, 3, 5};
    auto loss_and_grad = [&]() {
        auto res = cross_entropy(logits.value, labels, mask);
        logits.grad = res.grad_logits;
        return res.loss;
    };
    const auto res = finite_diff_check(loss_and_grad, {&logits}, 1e-6);
    CHECK(res.max_rel_err < 1e-6);

    // Rows outside the mask receive exactly zero gradient.
    loss_and_grad();
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(logits.grad(1, j) == 0.0);
        CHECK(logits.grad(4, j) == 0.0);
    }
}

TEST_CASE("dropout_mask: edge rates, concentration, determinism") {
    SplitRng rng(42);
    const auto ones = dropout_mask(3, 4, 0.0, rng);
    CHECK(bits_equal(ones, DenseMatrix::from({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}})));

    SplitRng r1(7);
    const auto m = dropout_mask(400, 250, 0.5, r1); // 1e5 entries
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.data()[i] == 0.0) {
            ++zeros;
        } else {
            CHECK(m.data()[i] == 2.0);
        }
    }
    const double frac = static_cast<double>(zeros) / static_cast<double>(m.size());
    CHECK(frac >= 0.49);
    CHECK(frac <= 0.51);

    SplitRng r2(7);
    CHECK(bits_equal(m, dropout_mask(400, 250, 0.5, r2)));

    CHECK_THROWS_AS(dropout_mask(2, 2, 1.0, rng), ParameterError);
    CHECK_THROWS_AS(dropout_mask(2, 2, -0.1, rng), ParameterError);
}

TEST_CASE("adamw_step: identity on zero grads, first-step size, decay-only") {
    AdamWConfig cfg;
    cfg.lr = 0.01;
    cfg.weight_decay = 0.0;

    ParamTensor p("w", 2, 3);
    SplitRng rng(12);
    p.value = random_matrix(2, 3, rng);
    const auto before = p.value;
    AdamWState st;
    adamw_step(p, st, cfg);
    CHECK(bits_equal(p.value, before));
    CHECK(st.t == 1);

    // g = 1 everywhere at t=1: mhat = 1, vhat = 1, step = lr/(1+eps).
    ParamTensor q("w", 2, 3);
    q.value = before;
    q.grad.fill(1.0);
    AdamWState st2;
    adamw_step(q, st2, cfg);
    for (std::size_t i = 0; i < q.value.size(); ++i) {
        const double expected = before.data()[i] - 0.01 / (1.0 + 1e-8);
        CHECK(q.value.data()[i] == doctest::Approx(expected).epsilon(1e-12));
    }

    // Zero gradient with weight decay scales values by (1 - lr*wd).
    AdamWConfig decay = cfg;
    decay.weight_decay = 5e-4;
    ParamTensor r("w", 2, 3);
    r.value = before;
    AdamWState st3;
    adamw_step(r, st3, decay);
    for (std::size_t i = 0; i < r.value.size(); ++i) {
        CHECK(r.value.data()[i] ==
              doctest::Approx(before.data()[i] * (1.0 - 0.01 * 5e-4)).epsilon(1e-14));
    }

    ParamTensor bad("theta", 1, 1);
    bad.grad(0, 0) = std::nan("");
    AdamWState st4;
    CHECK_THROWS_WITH_AS(adamw_step(bad, st4, cfg), doctest::Contains("theta"),
                         ParameterError);
}

TEST_CASE("finite_diff_check is exact for a linear model") {
    SplitRng rng(31);
    ParamTensor w("w", 3, 4);
    w.value = random_matrix(3, 4, rng);
    const auto coeff = random_matrix(3, 4, rng);
    auto loss_and_grad = [&]() {
        double loss = 0.0;
        for (std::size_t i = 0; i < w.value.size(); ++i) {
            loss += coeff.data()[i] * w.value.data()[i];
        }
        w.grad = coeff;
        return loss;
    };
    const auto res = finite_diff_check(loss_and_grad, {&w}, 1e-5);
    CHECK(res.max_rel_err <= 1e-9);
}
