#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "mdirichlet/rng.hpp"
#include "mdirichlet/specfun.hpp"

using namespace mdirichlet;

TEST_CASE("pochhammer values and recurrence") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer_exact(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer_exact(Rational(-3), 5) == 0);

  DeterministicRng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    double x = 4.0 * rng.uniform01() - 2.0;
    int m = static_cast<int>(rng.uniform01() * 8);
    CHECK(std::abs(pochhammer(x, m + 1) - pochhammer(x, m) * (x + m)) <
          1e-12 * (1.0 + std::abs(pochhammer(x, m + 1))));
  }
}

TEST_CASE("harmonic numbers and digamma") {
  CHECK(harmonic_number(0) == 0);
  CHECK(harmonic_number(1) == 1);
  CHECK(harmonic_number(4) == Rational(25, 12));
  CHECK_THROWS_AS(harmonic_number(-1), std::invalid_argument);

  const double euler = 0.57721566490153286060651209008240;
  CHECK(std::abs(digamma(1.0) + euler) < 1e-15);
  CHECK(std::abs(digamma(0.5) + euler + 2.0 * std::log(2.0)) < 1e-14);

  // psi(m+1) = H_m - euler ties the two implementations together.
  for (int m = 1; m <= 12; ++m)
    CHECK(std::abs(digamma(m + 1.0) -
                   (static_cast<double>(harmonic_number(m)) - euler)) < 1e-13);

  // Recurrence psi(x+1) = psi(x) + 1/x on integer and half-integer points.
  for (double x : {1.0, 1.5, 2.0, 3.5, 6.0})
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-13);

  CHECK_THROWS_AS(digamma(0.3), std::invalid_argument);
  CHECK_THROWS_AS(digamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(digamma(-1.5), std::invalid_argument);
}

TEST_CASE("gauss hypergeometric series with certified tails") {
  // Zero upper parameter: single term.
  CHECK(gauss_2f1(3.7, 0.0, 5.0, 0.3) == 1.0);

  // Two-term terminating series.
  for (double t : {0.0, 0.25, 0.8})
    CHECK(std::abs(gauss_2f1(-1.0, 2.5, 4.0, t) - (1.0 - 2.5 * t / 4.0)) < 1e-15);

  // Terminating cubic, coefficients checked by hand:
  // 2F1(-3,2;4;t) = 1 - 3/2 t + 9/10 t^2 - 1/5 t^3.
  double t = 0.37;
  CHECK(std::abs(gauss_2f1(-3.0, 2.0, 4.0, t) -
                 (1.0 - 1.5 * t + 0.9 * t * t - 0.2 * t * t * t)) < 1e-15);

  // Closed-form oracles for infinite series.
  CHECK(std::abs(gauss_2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)) < 1e-12);
  for (double tt : {0.1, 0.5, 0.9})
    CHECK(std::abs(gauss_2f1(1.0, 1.0, 2.0, tt) + std::log1p(-tt) / tt) < 1e-12);
  for (double tt : {0.1, 0.4, 0.7, 0.9})
    CHECK(std::abs(gauss_2f1(0.7, 2.3, 2.3, tt) - std::pow(1.0 - tt, -0.7)) < 2e-12);

  // Looser tolerances are honored (and the bound is real).
  CHECK(std::abs(gauss_2f1(1.0, 1.0, 2.0, 0.9, 1e-6) + std::log1p(-0.9) / 0.9) < 1e-6);

  // Monotone nondecreasing in t for positive parameters.
  double prev = gauss_2f1(1.2, 0.8, 3.0, 0.0);
  for (double tt = 0.1; tt < 0.95; tt += 0.1) {
    double cur = gauss_2f1(1.2, 0.8, 3.0, tt);
    CHECK(cur >= prev);
    prev = cur;
  }

  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, 0.5), std::invalid_argument);
  // Non-terminating with c+1 <= a+b falls outside the certified class.
  CHECK_THROWS_AS(gauss_2f1(3.0, 3.0, 2.0, 0.5), std::domain_error);
}

TEST_CASE("gauss value at one matches the gamma-function oracle") {
  CHECK(gauss_value_at_one(0, 5, 3) == 1.0);
  CHECK(gauss_value_at_one_exact(1, 1, 2) == Rational(3, 2));
  CHECK(gauss_value_at_one_exact(1, 1, 1) == 2);

  for (int n : {1, 2, 3})
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        double oracle = std::exp(std::lgamma(p + q + n) + std::lgamma(n) -
                                 std::lgamma(p + n) - std::lgamma(q + n));
        double val = gauss_value_at_one(p, q, n);
        CHECK(std::abs(val - oracle) < 1e-12 * oracle);
      }
  CHECK_THROWS_AS(gauss_value_at_one(-1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gauss_value_at_one(0, 0, 0), std::invalid_argument);
}

TEST_CASE("log-case expansion: exact coefficient pins") {
  struct Pin {
    int n, p, q;
    Rational a1_0, a0_1, a1_1;
  };
  const std::vector<Pin> pins = {
      {2, 1, 1, Rational(2), Rational(-1), Rational(6)},
      {2, 2, 1, Rational(6), Rational(-2), Rational(24)},
      {3, 1, 1, Rational(-3), Rational(-1, 2), Rational(-12)},
      {2, 2, 2, Rational(18), Rational(-4), Rational(96)},
      {1, 1, 1, Rational(-1), Rational(1), Rational(-2)},
      {3, 2, 3, Rational(-120), Rational(-3), Rational(-900)},
  };
  for (const auto& pin : pins) {
    auto ex = log_case_expansion(pin.n, pin.p, pin.q, 12);
    CHECK(ex.a0[0] == 1);
    CHECK(ex.a1[0] == pin.a1_0);
    CHECK(ex.a0[1] == pin.a0_1);
    CHECK(ex.a1[1] == pin.a1_1);
  }

  // Leading log coefficient against the gamma-function oracle, with the
  // (-1)^n sign.
  for (int n : {1, 2, 3})
    for (int p : {1, 2, 3})
      for (int q : {1, 2, 3}) {
        auto ex = log_case_expansion(n, p, q, 12);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        double oracle = sign * std::exp(std::lgamma(n + p) + std::lgamma(n + q) -
                                        std::lgamma(n + 1.0) - std::lgamma(n) -
                                        std::lgamma(p) - std::lgamma(q));
        CHECK(std::abs(static_cast<double>(ex.a1[0]) - oracle) < 1e-11 * std::abs(oracle));

        // A1 term ratios follow the closed recurrence exactly.
        for (int i = 0; i + 1 <= 8; ++i)
          CHECK(ex.a1[static_cast<std::size_t>(i + 1)] * Rational((i + 1) * (i + n + 1)) ==
                ex.a1[static_cast<std::size_t>(i)] * Rational((n + p + i) * (n + q + i)));
      }

  CHECK_THROWS_AS(log_case_expansion(2, 0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_case_expansion(2, 1, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_case_expansion(0, 1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(log_case_expansion(2, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("log-case expansion reproduces the direct series") {
  const std::vector<std::array<int, 3>> cells = {
      {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2}, {1, 1, 1}, {3, 2, 3}};
  for (auto [n, p, q] : cells) {
    auto ex = log_case_expansion(n, p, q, 60);
    double v1 = gauss_value_at_one(p, q, n);
    // Spec point t = 0.9 at tight tolerance.
    double direct09 = gauss_2f1(p, q, p + q + n, 0.9, 1e-13) / v1;
    CHECK(std::abs(ex.eval(0.1) - direct09) < 1e-9);

    // 20 samples across (0.5, 0.999): agreement within the certified bound.
    for (int i = 0; i < 20; ++i) {
      double t = 0.5 + (0.999 - 0.5) * (i + 0.5) / 20.0;
      double direct = gauss_2f1(p, q, p + q + n, t, 1e-13) / v1;
      CHECK(std::abs(ex.eval(1.0 - t) - direct) <= ex.tail_bound + 1e-10);
    }
  }

  // Continuity at u = 0: the normalized series tends to 1.
  auto ex = log_case_expansion(2, 1, 1, 40);
  CHECK(ex.eval(0.0) == 1.0);
  CHECK(std::abs(ex.eval(1e-9) - 1.0) < 1e-7);
}

TEST_CASE("log-case tail bound shrinks with the truncation degree") {
  for (auto [n, p, q] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 3}}) {
    double t15 = log_case_expansion(n, p, q, 15).tail_bound;
    double t30 = log_case_expansion(n, p, q, 30).tail_bound;
    double t45 = log_case_expansion(n, p, q, 45).tail_bound;
    CHECK(t15 > t30);
    CHECK(t30 > t45);
    CHECK(t45 > 0.0);
  }
}
