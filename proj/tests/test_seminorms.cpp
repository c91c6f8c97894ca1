#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mdirichlet/coeffs.hpp"
#include "mdirichlet/harmonics.hpp"
#include "mdirichlet/moments.hpp"
#include "mdirichlet/operators.hpp"
#include "mdirichlet/realharm.hpp"
#include "mdirichlet/seminorms.hpp"

using namespace mdirichlet;

namespace {

// z_1^p zbar_2^q, an exact representative of the cell (p,q) for n >= 2.
RationalPoly cell_monomial(int n, int p, int q) {
  RationalPoly f = RationalPoly::constant(n, GaussianRational{Rational(1), Rational(0)});
  for (int i = 0; i < p; ++i) f = f * RationalPoly::variable(n, 0);
  for (int i = 0; i < q; ++i) f = f * RationalPoly::variable(n, 1, true);
  return f;
}

ComplexPoly cell_monomial_d(int n, int p, int q) {
  ComplexPoly f = ComplexPoly::constant(n, Complex(1.0, 0.0));
  for (int i = 0; i < p; ++i) f = f * ComplexPoly::variable(n, 0);
  for (int i = 0; i < q; ++i) f = f * ComplexPoly::variable(n, 1, true);
  return f;
}

// Sum of squared boundary norms over one family of tangential fields,
// ordered pairs j != k, in exact rational arithmetic.
Rational family_word_norm2(const RationalPoly& f, bool conjugated) {
  const int n = f.nvars();
  Rational total(0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      RationalPoly g = tangential(f, j, k, conjugated);
      total += sphere_inner(g, g).re;
    }
  return total;
}

double cell_weight(int n, int p, int q) {
  return 4.0 * p * q + (2.0 * n - 2.0) * (p + q);
}

// Exact second-level word sum predicted by the split cell weights: the
// plain family carries 2p(q+n-1) into (p-1,q+1), the conjugated family
// 2q(p+n-1) into (p+1,q-1).
double predicted_word2(int n, int p, int q, double norm2) {
  double into_up = (p >= 1) ? 2.0 * p * (q + n - 1.0) : 0.0;
  double into_down = (q >= 1) ? 2.0 * q * (p + n - 1.0) : 0.0;
  double total = 0.0;
  if (into_up > 0.0) total += cell_weight(n, p - 1, q + 1) * into_up;
  if (into_down > 0.0) total += cell_weight(n, p + 1, q - 1) * into_down;
  return total * norm2;
}

RealRationalPoly real_rotation(const RealRationalPoly& g, int j, int k) {
  const int n = g.nvars();
  return RealRationalPoly::variable(n, j) * g.derivative(k) -
         RealRationalPoly::variable(n, k) * g.derivative(j);
}

}  // namespace

TEST_CASE("tangential fields move cells with split weights") {
  for (int n : {2, 3}) {
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        if (p + q == 0) continue;
        RationalPoly f = cell_monomial(n, p, q);
        Rational norm2 = sphere_inner(f, f).re;
        REQUIRE(norm2 > 0);

        Rational sum_plain = family_word_norm2(f, false);
        Rational sum_conj = family_word_norm2(f, true);
        CHECK(sum_plain == Rational(2 * p * (q + n - 1)) * norm2);
        CHECK(sum_conj == Rational(2 * q * (p + n - 1)) * norm2);

        if (p >= 1) {
          RationalPoly g = tangential(f, 1, 0, false);
          PWDecomposition d = peter_weyl(g, p + q + 1, p + q + 1);
          for (const auto& [cell, comp] : d.components) {
            if (comp.exact_norm2 == Rational(0)) continue;
            CHECK(cell.first == p - 1);
            CHECK(cell.second == q + 1);
          }
        }
      }
    }
  }
}

TEST_CASE("iterated word sums follow the split weights, not spectral powers") {
  for (int n : {2, 3}) {
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        if (p + q == 0) continue;
        ComplexPoly f = cell_monomial_d(n, p, q);
        double norm2 = static_cast<double>(
            sphere_inner(cell_monomial(n, p, q), cell_monomial(n, p, q)).re);

        double one = tangential_sum(f, 1).value;
        CHECK(one == doctest::Approx(cell_weight(n, p, q) * norm2).epsilon(1e-12));

        double two = tangential_sum(f, 2).value;
        CHECK(two == doctest::Approx(predicted_word2(n, p, q, norm2)).epsilon(1e-12));
      }
    }
  }

  // The length-2 sum on the cell (1,1) at n = 2 is half the square of the
  // one-step weight; the square overstates it because the fields shift the
  // Reeb eigenvalue.
  ComplexPoly e = cell_monomial_d(2, 1, 1);
  double two = tangential_sum(e, 2).value;
  CHECK(two == doctest::Approx(16.0 / 3.0).epsilon(1e-12));
  double spectral_square = cell_weight(2, 1, 1) * cell_weight(2, 1, 1) / 6.0;
  CHECK(two < 0.9 * spectral_square);
}

TEST_CASE("word sums at length one match the cell sum on mixed input") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  ComplexPoly zb2 = ComplexPoly::variable(2, 1, true);
  ComplexPoly z2 = ComplexPoly::variable(2, 1);
  ComplexPoly f = z1 * Complex(2.0, 0.0) - zb2 + z1 * zb2 * Complex(3.0, 0.0) + z1 * z2;

  PWDecomposition d = peter_weyl(f, 4, 4);
  double expected = 0.0;
  for (const auto& [cell, comp] : d.components)
    expected += cell_weight(2, cell.first, cell.second) * comp.norm2;

  SeminormReport r = tangential_sum(f, 1);
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));

  SeminormReport r0 = tangential_sum(f, 0);
  CHECK(r0.value == doctest::Approx(hardy_norm(d).value).epsilon(1e-12));

  ComplexPoly e11 = build_basis(2, 1, 1).elements[0];
  CHECK(tangential_sum(e11, 1).value == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(tangential_sum(z1, 1).value == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(tangential_sum(f, -1), std::invalid_argument);
  CHECK_THROWS_AS(tangential_sum(f, 5), std::invalid_argument);
  CHECK_THROWS_AS(tangential_sum(ComplexPoly::variable(4, 0), 1), std::invalid_argument);
}

TEST_CASE("invariant seminorm ratio on probe cells") {
  // Expected values come from the split-weight law verified above:
  // word2 / cici weight per unit cell norm.
  CHECK(theorem_pf_ratio(cell_monomial_d(2, 1, 1), 2) ==
        doctest::Approx(8.0).epsilon(1e-9));
  CHECK(theorem_pf_ratio(cell_monomial_d(2, 2, 2), 2) ==
        doctest::Approx(40.0 / 3.0).epsilon(1e-9));
  CHECK(theorem_pf_ratio(cell_monomial_d(2, 1, 3), 2) ==
        doctest::Approx(44.0 / 3.0).epsilon(1e-9));

  // The ratio is a cell invariant: another representative of (1,1) and a
  // basis element give the same number.
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  ComplexPoly alt = z1 * ComplexPoly::variable(2, 0, true) -
                    ComplexPoly::variable(2, 1) * ComplexPoly::variable(2, 1, true);
  CHECK(theorem_pf_ratio(alt, 2) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(theorem_pf_ratio(build_basis(2, 1, 1).elements[0], 2) ==
        doctest::Approx(8.0).epsilon(1e-7));

  // Pure cells are projected away before the word sum; the denominator
  // only sees the mixed part.
  ComplexPoly mixed = z1 + cell_monomial_d(2, 1, 1);
  CHECK(theorem_pf_ratio(mixed, 2) == doctest::Approx(8.0).epsilon(1e-9));

  CHECK_THROWS_AS(theorem_pf_ratio(z1, 2), std::domain_error);
  CHECK_THROWS_AS(theorem_pf_ratio(z1, 3), std::invalid_argument);
}

TEST_CASE("weighted norms against the ball moment oracle") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  ComplexPoly one = ComplexPoly::constant(2, Complex(1.0, 0.0));
  for (double s : {-2.9, -1.0, 0.0, 2.0})
    CHECK(norm_s(peter_weyl(one, 1, 1), s).value == doctest::Approx(1.0).epsilon(1e-14));

  SeminormReport r = norm_s(peter_weyl(z1, 2, 2), 0.0);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.error_bound >= 0.0);
  CHECK(r.error_bound < 1e-12);

  // A polynomial with pure cells only is its own invariant-harmonic
  // extension, so its weighted ball integral is the weighted norm. Mixed
  // cells extend with a different radial profile and are covered by the
  // coefficient oracles instead.
  for (int n : {2, 3}) {
    ComplexPoly a = ComplexPoly::variable(n, 0);
    ComplexPoly b = ComplexPoly::variable(n, 1, true);
    ComplexPoly f = a + b * Complex(0.5, 0.0) + b * b * Complex(0.75, 0.0) +
                    ComplexPoly::variable(n, 1) * ComplexPoly::variable(n, 1) *
                        Complex(-1.5, 0.0);
    PWDecomposition d = peter_weyl(f, 4, 4);
    for (double s : {0.0, 1.0}) {
      double oracle = ball_inner(f, f, s).real();
      CHECK(norm_s(d, s).value == doctest::Approx(oracle).epsilon(1e-10));
    }

    ComplexPoly g = f + a * b * Complex(0.75, 0.0);
    PWDecomposition dg = peter_weyl(g, 4, 4);
    std::vector<double> grid = {-1.5, -1.0, -0.3, 0.0, 0.5, 1.0, 2.0};
    if (n == 2) grid.insert(grid.begin(), -2.5);
    double prev = norm_s(dg, grid.front()).value;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      double cur = norm_s(dg, grid[i]).value;
      CHECK(cur <= prev + 1e-9 * (1.0 + prev));
      prev = cur;
    }
  }

  PWDecomposition d2 = peter_weyl(z1, 2, 2);
  CHECK_THROWS_AS(norm_s(d2, -3.0), std::domain_error);
  CHECK_THROWS_AS(norm_s(d2, -3.5), std::domain_error);

  d2.tail_bound = 1e-3;
  SeminormReport tailed = norm_s(d2, 0.0);
  CHECK(tailed.error_bound >= 1e-6);
  CHECK(!tailed.notes.empty());
  CHECK_THROWS_AS(norm_s(d2, -1.5), std::runtime_error);
}

TEST_CASE("boundary norm and monotone radial profiles") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  ComplexPoly zb2 = ComplexPoly::variable(2, 1, true);
  SeminormReport h = hardy_norm(peter_weyl(z1 + zb2, 2, 2));
  CHECK(h.value == doctest::Approx(1.0).epsilon(1e-14));

  ComplexPoly f = z1 + z1 * zb2;
  PWDecomposition d = peter_weyl(f, 3, 3);
  double total = hardy_norm(d).value;
  double prev = 0.0;
  for (double r : {0.3, 0.6, 0.9}) {
    double at_r = 0.0;
    for (const auto& [cell, comp] : d.components) {
      double sr = radial_profile(2, cell.first, cell.second, r);
      at_r += sr * sr * comp.norm2;
    }
    CHECK(at_r >= prev);
    CHECK(at_r <= total + 1e-12);
    prev = at_r;
  }

  PWDecomposition tailed = d;
  tailed.tail_bound = 1e-2;
  CHECK(hardy_norm(tailed).error_bound >= 1e-4);
}

TEST_CASE("invariant and pluriharmonic Dirichlet seminorms") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  ComplexPoly zb2 = ComplexPoly::variable(2, 1, true);
  ComplexPoly one = ComplexPoly::constant(2, Complex(1.0, 0.0));

  SeminormReport ph = dirichlet_cici(peter_weyl(one + z1 + zb2, 2, 2));
  CHECK(ph.value == 0.0);
  CHECK(!ph.notes.empty());

  SeminormReport unit = dirichlet_cici(peter_weyl(build_basis(2, 1, 1).elements[0], 2, 2));
  CHECK(unit.value == doctest::Approx(4.0).epsilon(1e-9));

  ComplexPoly f = z1 * zb2 + z1 * z1 * zb2;
  PWDecomposition d = peter_weyl(f, 4, 4);
  double expected = 0.0;
  for (const auto& [cell, comp] : d.components)
    if (cell.first >= 1 && cell.second >= 1)
      expected += c_cici(2, cell.first, cell.second) * comp.norm2;
  CHECK(expected > 0.0);
  CHECK(dirichlet_cici(d).value == doctest::Approx(expected).epsilon(1e-12));

  SeminormReport circ = dirichlet_circ(peter_weyl(z1, 2, 2));
  CHECK(circ.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(circ.notes.empty());

  SeminormReport circ_mixed = dirichlet_circ(d);
  CHECK(circ_mixed.value == 0.0);
  CHECK(!circ_mixed.notes.empty());

  ComplexPoly g = z1 + zb2 * zb2;
  PWDecomposition dg = peter_weyl(g, 3, 3);
  double circ_expected = c_circ(2, 1) * 0.5 + c_circ(2, 2) * (1.0 / 3.0);
  CHECK(dirichlet_circ(dg).value == doctest::Approx(circ_expected).epsilon(1e-12));
}

TEST_CASE("real harmonic Dirichlet seminorm") {
  RealRationalPoly x1 = RealRationalPoly::variable(2, 0);
  RealRationalPoly x2 = RealRationalPoly::variable(2, 1);
  SeminormReport r = dirichlet_sq(harm_decompose(x1));
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.cells_used.size() == 1);
  CHECK(r.cells_used[0] == std::pair<int, int>(1, -1));

  RealRationalPoly c = RealRationalPoly::constant(2, Rational(3));
  CHECK(dirichlet_sq(harm_decompose(c)).value == 0.0);

  RealRationalPoly prod = x1 * x2;
  double norm2 = static_cast<double>(real_sphere_inner(prod, prod));
  CHECK(dirichlet_sq(harm_decompose(prod)).value ==
        doctest::Approx(harm_sq(2, 2) * norm2).epsilon(1e-12));
}

TEST_CASE("radial seminorm on pluriharmonic input") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  SeminormReport r = radial_seminorm(peter_weyl(z1, 2, 2), 2);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));

  ComplexPoly one = ComplexPoly::constant(2, Complex(1.0, 0.0));
  CHECK(radial_seminorm(peter_weyl(one, 1, 1), 2).value == 0.0);

  PWDecomposition mixed = peter_weyl(cell_monomial_d(2, 1, 1), 2, 2);
  CHECK_THROWS_AS(radial_seminorm(mixed, 2), std::invalid_argument);
  CHECK_THROWS_AS(radial_seminorm(peter_weyl(z1, 2, 2), 1), std::invalid_argument);

  // Comparison table against the pluriharmonic Dirichlet weight, p <= 10.
  double lo = 1e300, hi = 0.0;
  for (int p = 1; p <= 10; ++p) {
    double ratio = std::pow(static_cast<double>(p), 4) * c_p0_closed(2, p, 1.0) /
                   c_circ(2, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo >= 1.0 / 20.0);
  CHECK(hi <= 20.0);
}

TEST_CASE("iterated radial sums against Hardy and weighted norms") {
  ComplexPoly z1 = ComplexPoly::variable(2, 0);
  PWDecomposition d = peter_weyl(z1, 2, 2);
  PhReport r = theorem_ph_sums(d, 0);
  CHECK(r.vq.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.vr.value == doctest::Approx(8.0 / 3.0).epsilon(1e-12));

  PhReport r1 = theorem_ph_sums(d, 1);
  double vr1 = std::pow(2.0, 4) * c_p0_closed(2, 1, 1.0) * 0.5;
  CHECK(r1.vr.value == doctest::Approx(vr1).epsilon(1e-12));

  PWDecomposition mixed = peter_weyl(cell_monomial_d(2, 1, 1), 2, 2);
  CHECK_THROWS_AS(theorem_ph_sums(mixed, 0), std::invalid_argument);
  CHECK_THROWS_AS(theorem_ph_sums(d, -3), std::domain_error);

  double lo_q = 1e300, hi_q = 0.0, lo_r = 1e300, hi_r = 0.0;
  for (int p = 1; p <= 10; ++p) {
    double circ = c_circ(2, p);
    double vq = std::pow(2.0 * p, 2);
    double vr = std::pow(2.0 * p, 3) * c_p0_closed(2, p, 0.0);
    lo_q = std::min(lo_q, vq / circ);
    hi_q = std::max(hi_q, vq / circ);
    lo_r = std::min(lo_r, vr / circ);
    hi_r = std::max(hi_r, vr / circ);
  }
  CHECK(lo_q >= 1.0);
  CHECK(hi_q <= 16.0);
  CHECK(lo_r >= 1.0);
  CHECK(hi_r <= 16.0);
}

TEST_CASE("rotation word sums against the weighted real norm") {
  RealRationalPoly x1 = RealRationalPoly::variable(2, 0);
  SeminormReport r = theorem_pj_sums(harm_decompose(x1), 1);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));

  // Dual route at n = 3, degree 2: applying every rotation field once and
  // measuring in the shifted weighted norm reproduces the one-step sum.
  const HarmonicBasis& basis = harm_basis(3, 2);
  for (int idx : {0, 2}) {
    RealRationalPoly g = basis.exact_elements[idx];
    Rational gnorm = basis.exact_norms2[idx];
    HarmDecomposition dg;
    dg.n = 3;
    {
      HarmonicComponent comp;
      comp.n = 3;
      comp.p = 2;
      comp.exact_part = g;
      comp.exact = true;
      comp.exact_norm2 = gnorm;
      comp.norm2 = static_cast<double>(gnorm);
      comp.part = g.to_double_poly();
      dg.components.emplace(2, std::move(comp));
    }
    double direct = theorem_pj_sums(dg, 1).value;

    double word_route = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (j == k) continue;
        RealRationalPoly xg = real_rotation(g, j, k);
        if (xg.is_zero()) continue;
        word_route += harm_norm_s(harm_decompose(xg), 2.0 - 3.0 / 2.0 - 1.0).value;
      }
    CHECK(word_route == doctest::Approx(direct).epsilon(1e-10));
    CHECK(direct ==
          doctest::Approx(12.0 * harm_coeff(3, 2, -0.5) * static_cast<double>(gnorm))
              .epsilon(1e-12));
  }

  RealRationalPoly c = RealRationalPoly::constant(2, Rational(1));
  CHECK(theorem_pj_sums(harm_decompose(c), 1).value == 0.0);

  RealRationalPoly y1 = RealRationalPoly::variable(4, 0);
  CHECK_THROWS_AS(theorem_pj_sums(harm_decompose(y1), 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem_pj_sums(harm_decompose(x1), 0), std::invalid_argument);

  double lo = 1e300, hi = 0.0;
  for (int p = 1; p <= 10; ++p) {
    double ratio = 2.0 * p * p * harm_coeff(2, p, 0.0) / harm_sq(2, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo >= 1.0 - 1e-12);
  CHECK(hi <= 2.0);
}
