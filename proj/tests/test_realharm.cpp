#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "mdirichlet/coeffs.hpp"
#include "mdirichlet/moments.hpp"
#include "mdirichlet/operators.hpp"
#include "mdirichlet/realharm.hpp"

using namespace mdirichlet;

namespace {

/// Independent count of linearly independent degree-p harmonic polynomials
/// on R^n: monomials of degree p minus monomials of degree p-2.
int harmonic_dim_formula(int n, int p) {
  auto binom = [](int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0L;
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  return static_cast<int>(binom(n + p - 1, n - 1) - binom(n + p - 3, n - 1));
}

std::vector<double> random_sphere_point(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  std::vector<double> y(static_cast<std::size_t>(n));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& v : y) {
      v = gauss(rng);
      norm += v * v;
    }
  } while (norm < 1e-12);
  norm = std::sqrt(norm);
  for (auto& v : y) v /= norm;
  return y;
}

Rational word_sum_rational(const RealRationalPoly& g) {
  const int n = g.nvars();
  Rational total(0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      RealRationalPoly xg = real_tangential(g, j, k);
      total += real_sphere_inner(xg, xg);
    }
  return total;
}

}  // namespace

TEST_CASE("basis dimension matches the combinatorial count") {
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= 6; ++p) CHECK(harm_dimension(n, p) == harmonic_dim_formula(n, p));
  CHECK(harm_dimension(1, 0) == 1);
  CHECK(harm_dimension(1, 1) == 1);
  CHECK(harm_dimension(1, 2) == 0);
  CHECK_THROWS_AS(harm_basis(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(harm_basis(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(harm_basis(2, -1), std::invalid_argument);
}

TEST_CASE("basis elements are homogeneous, harmonic, and orthonormal") {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 4; ++p) {
      const HarmonicBasis& basis = harm_basis(n, p);
      REQUIRE(basis.dim == static_cast<int>(basis.elements.size()));
      REQUIRE(basis.dim == static_cast<int>(basis.exact_elements.size()));
      REQUIRE(basis.dim == static_cast<int>(basis.exact_norms2.size()));
      for (int i = 0; i < basis.dim; ++i) {
        const RealRationalPoly& e = basis.exact_elements[i];
        CHECK(real_laplacian(e).is_zero());
        for (const auto& [key, c] : e.terms()) CHECK(key.degree() == p);
        CHECK(real_sphere_inner(e, e) == basis.exact_norms2[i]);
        CHECK(basis.exact_norms2[i] > 0);
        for (int j = 0; j < i; ++j)
          CHECK(real_sphere_inner(e, basis.exact_elements[j]) == 0);
      }
      for (int i = 0; i < basis.dim; ++i)
        for (int j = 0; j <= i; ++j) {
          double want = i == j ? 1.0 : 0.0;
          CHECK(std::abs(real_sphere_inner(basis.elements[i], basis.elements[j]) - want) <=
                1e-10);
        }
    }
}

TEST_CASE("sphere Laplacian acts on each degree by its eigenvalue") {
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= 4; ++p) {
      const HarmonicBasis& basis = harm_basis(n, p);
      for (const RealRationalPoly& e : basis.exact_elements) {
        RealRationalPoly expect = e;
        expect.scale(Rational(-p * (p + n - 2)));
        CHECK((real_delta_sph(e) - expect).is_zero());
      }
    }
}

TEST_CASE("decomposition splits by degree and validates harmonicity") {
  auto x1 = RealRationalPoly::variable(3, 0);

  HarmDecomposition d1 = harm_decompose(x1);
  CHECK(d1.n == 3);
  REQUIRE(d1.components.size() == 1);
  CHECK(d1.components.begin()->first == 1);
  CHECK(d1.components.at(1).exact);
  CHECK(d1.components.at(1).exact_norm2 == Rational(1, 3));

  RealRationalPoly f2(3);
  f2.add_term(MultiIndex({2, 0, 0}), Rational(1));
  f2.add_term(MultiIndex({0, 2, 0}), Rational(-1));
  HarmDecomposition d2 = harm_decompose(f2);
  REQUIRE(d2.components.size() == 1);
  CHECK(d2.components.begin()->first == 2);

  RealRationalPoly mixed = RealRationalPoly::constant(3, Rational(1)) + x1;
  HarmDecomposition dm = harm_decompose(mixed);
  REQUIRE(dm.components.size() == 2);
  CHECK(dm.components.count(0) == 1);
  CHECK(dm.components.count(1) == 1);
  CHECK(dm.components.at(0).exact_norm2 == Rational(1));

  RealRationalPoly bad(3);
  bad.add_term(MultiIndex({2, 0, 0}), Rational(1));
  CHECK_THROWS_AS(harm_decompose(bad), std::invalid_argument);
  CHECK_THROWS_AS(harm_decompose(bad.to_double_poly()), std::invalid_argument);

  HarmDecomposition dd = harm_decompose(mixed.to_double_poly());
  CHECK_FALSE(dd.components.at(1).exact);
  CHECK(dd.components.at(1).norm2 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("weighted norms match direct ball integrals") {
  auto ones = harm_decompose(RealRationalPoly::constant(3, Rational(1)));
  for (double s : {0.0, 1.0, 2.5, -1.2}) {
    SeminormReport r = harm_norm_s(ones, s);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  }

  auto x1 = RealRationalPoly::variable(3, 0);
  SeminormReport rx = harm_norm_s(harm_decompose(x1), 0.0);
  CHECK(rx.value == doctest::Approx(0.2).epsilon(1e-14));
  REQUIRE(rx.cells_used.size() == 1);
  CHECK(rx.cells_used[0] == std::pair<int, int>(1, -1));

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int n = 2; n <= 3; ++n) {
    RealRationalPoly f(n);
    for (int p = 0; p <= 3; ++p) {
      const HarmonicBasis& basis = harm_basis(n, p);
      for (const RealRationalPoly& e : basis.exact_elements) {
        RealRationalPoly term = e;
        term.scale(Rational(pick(rng)));
        f += term;
      }
    }
    HarmDecomposition d = harm_decompose(f);
    for (double s : {0.0, 1.0}) {
      double direct = real_ball_inner(f.to_double_poly(), f.to_double_poly(), s);
      SeminormReport r = harm_norm_s(d, s);
      CHECK(std::abs(r.value - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }

  CHECK_THROWS_AS(harm_norm_s(ones, -3.5), std::domain_error);
  CHECK_THROWS_AS(harm_norm_s(ones, -2.5), std::domain_error);
}

TEST_CASE("zonal polynomial reproduces boundary values") {
  std::mt19937 rng(42);
  for (auto [n, p] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    std::vector<double> y = random_sphere_point(n, rng);
    const HarmonicBasis& basis = harm_basis(n, p);
    RealPoly f(n);
    for (int i = 0; i < basis.dim; ++i) {
      RealPoly e = basis.elements[i];
      e.scale(0.3 + 0.1 * i);
      f += e;
    }
    RealPoly z = zonal_poly(n, p, y);
    CHECK(std::abs(real_sphere_inner(f, z) - f.eval(y)) <= 1e-9);

    std::vector<double> x = random_sphere_point(n, rng);
    CHECK(std::abs(z.eval(x) - zonal_poly(n, p, x).eval(y)) <= 1e-9);
  }

  RealPoly zd = zonal_poly(3, 1, std::vector<double>{1.0, 0.0, 0.0});
  CHECK(zd.eval(std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(zonal_poly(3, 1, std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("coefficient residue at the left edge matches the square weight") {
  for (auto [n, p] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
    double edge = -n / 2.0 - 1.0;
    double limit = harm_sq(n, p);
    double e3 = 1e-3 * harm_coeff(n, p, edge + 1e-3) - limit;
    double e4 = 1e-4 * harm_coeff(n, p, edge + 1e-4) - limit;
    CHECK(std::abs(e4) <= 2e-3 * std::abs(limit));
    if (std::abs(e4) > 1e-12)
      CHECK(std::abs(e3 / e4) == doctest::Approx(10.0).epsilon(0.15));
  }
}

TEST_CASE("rotation word sums reproduce the spectral weights exactly") {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 3; ++p) {
      const HarmonicBasis& basis = harm_basis(n, p);
      for (std::size_t i = 0; i < basis.exact_elements.size(); ++i) {
        Rational expect = Rational(2 * p * (p + n - 2)) * basis.exact_norms2[i];
        CHECK(word_sum_rational(basis.exact_elements[i]) == expect);
      }
    }

  const HarmonicBasis& b3 = harm_basis(3, 3);
  RealRationalPoly g = b3.exact_elements[0];
  RealRationalPoly t = b3.exact_elements[1];
  t.scale(Rational(-1, 3));
  g += t;
  t = b3.exact_elements[2];
  t.scale(Rational(2));
  g += t;
  CHECK(word_sum_rational(g) == Rational(2 * 3 * (3 + 3 - 2)) * real_sphere_inner(g, g));
}

TEST_CASE("degree-wise ratio table stays in a bounded window") {
  PjVerification v = theorem_pj_verify(2, 1, 8);
  CHECK(v.word_identity_residual == 0.0);
  REQUIRE(v.ratios.size() == 8);
  for (int p = 1; p <= 8; ++p)
    CHECK(v.ratios[static_cast<std::size_t>(p - 1)] ==
          doctest::Approx(2.0 * p / (p + 1.0)).epsilon(1e-12));
  CHECK(v.window_lo == doctest::Approx(1.0));
  CHECK(v.window_hi == doctest::Approx(16.0 / 9.0));

  PjVerification v3 = theorem_pj_verify(3, 2, 10);
  CHECK(v3.word_identity_residual == 0.0);
  CHECK(v3.window_lo > 0.0);
  CHECK(v3.window_hi < 1e6);
  CHECK(v3.window_lo <= v3.window_hi);

  CHECK_THROWS_AS(theorem_pj_verify(4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(theorem_pj_verify(2, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(theorem_pj_verify(2, 1, 0), std::invalid_argument);
}

TEST_CASE("basis construction is safe under concurrent readers") {
  std::vector<double> probe{0.2, -0.5, 0.6};
  double first = 0.0;
  {
    const HarmonicBasis& b = harm_basis(3, 4);
    first = b.elements[2].eval(probe);
  }
  std::vector<std::thread> workers;
  std::vector<double> got(8, 0.0);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      const HarmonicBasis& b = harm_basis(3, 4);
      got[static_cast<std::size_t>(t)] = b.elements[2].eval(probe);
    });
  for (auto& w : workers) w.join();
  for (double v : got) CHECK(v == first);
}
