#include "mdirichlet/realharm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "mdirichlet/coeffs.hpp"
#include "mdirichlet/memo.hpp"
#include "mdirichlet/moments.hpp"
#include "mdirichlet/operators.hpp"

namespace mdirichlet {

namespace {

void check_real_cell(int n, int p, const char* who) {
  if (n < 1 || n > kMaxVars || p < 0)
    throw std::invalid_argument(std::string(who) + ": need 1 <= n <= " +
                                std::to_string(kMaxVars) + " and p >= 0");
}

/// All exponent vectors of total degree p on n variables, in a fixed
/// lexicographic order (first variable most significant).
std::vector<MultiIndex> degree_monomials(int n, int p) {
  std::vector<MultiIndex> out;
  MultiIndex current;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      current.set(var, remaining);
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current.set(var, e);
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, p);
  return out;
}

double coeff_l1(const RealPoly& f) {
  double s = 0.0;
  for (const auto& [k, c] : f.terms()) s += std::abs(c);
  return s;
}

/// Nullspace of the Euclidean Laplacian on the degree-p monomial span,
/// by dense rational row reduction. Column order is the monomial order, and
/// each free column yields one canonical nullspace vector, so the basis is
/// deterministic.
std::vector<RealRationalPoly> laplacian_nullspace(int n, int p) {
  std::vector<MultiIndex> cols = degree_monomials(n, p);
  if (p < 2) {
    std::vector<RealRationalPoly> basis;
    for (const MultiIndex& m : cols) {
      RealRationalPoly e(n);
      e.add_term(m, Rational(1));
      basis.push_back(e);
    }
    return basis;
  }

  std::vector<MultiIndex> rows = degree_monomials(n, p - 2);
  std::map<MultiIndex, std::size_t, RealRationalPoly::KeyLess> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  std::vector<std::vector<Rational>> a(rows.size(),
                                       std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    RealRationalPoly mono(n);
    mono.add_term(cols[j], Rational(1));
    RealRationalPoly lap = real_laplacian(mono);
    for (const auto& [key, c] : lap.terms()) a[row_index.at(key)][j] = c;
  }

  // Row echelon form with the first nonzero row as pivot; exact arithmetic
  // needs no pivot-size strategy.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && a[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(a[r], a[pr]);
    Rational inv = a[r][c];
    for (std::size_t j = c; j < cols.size(); ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c];
      for (std::size_t j = c; j < cols.size(); ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols.size(), false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<RealRationalPoly> basis;
  for (std::size_t f = 0; f < cols.size(); ++f) {
    if (is_pivot[f]) continue;
    RealRationalPoly v(n);
    v.add_term(cols[f], Rational(1));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (a[i][f] != 0) v.add_term(cols[pivot_col[i]], -a[i][f]);
    basis.push_back(v);
  }
  return basis;
}

HarmonicBasis construct_harm_basis(int n, int p) {
  HarmonicBasis basis;
  basis.n = n;
  basis.p = p;

  std::vector<RealRationalPoly> null_basis = laplacian_nullspace(n, p);
  for (RealRationalPoly v : null_basis) {
    for (std::size_t j = 0; j < basis.exact_elements.size(); ++j) {
      Rational overlap = real_sphere_inner(v, basis.exact_elements[j]);
      if (overlap == 0) continue;
      RealRationalPoly scaled = basis.exact_elements[j];
      scaled.scale(-overlap / basis.exact_norms2[j]);
      v += scaled;
    }
    Rational norm2 = real_sphere_inner(v, v);
    if (norm2 == 0) continue;
    basis.exact_elements.push_back(v);
    basis.exact_norms2.push_back(norm2);
    RealPoly unit = v.to_double_poly();
    unit.scale(1.0 / std::sqrt(static_cast<double>(norm2)));
    basis.elements.push_back(unit);
  }
  basis.dim = static_cast<int>(basis.elements.size());
  return basis;
}

}  // namespace

const HarmonicBasis& harm_basis(int n, int p) {
  check_real_cell(n, p, "harm_basis");
  using Key = std::array<int, 2>;
  return detail::memoized<Key, HarmonicBasis>(Key{n, p},
                                              [&] { return construct_harm_basis(n, p); });
}

int harm_dimension(int n, int p) {
  check_real_cell(n, p, "harm_dimension");
  return harm_basis(n, p).dim;
}

HarmDecomposition harm_decompose(const RealRationalPoly& f) {
  if (!real_laplacian(f).is_zero())
    throw std::invalid_argument("harm_decompose: input is not harmonic");
  HarmDecomposition d;
  d.n = f.nvars();
  for (auto& [p, slice] : f.degree_slices()) {
    HarmonicComponent comp;
    comp.n = d.n;
    comp.p = p;
    comp.exact_part = slice;
    comp.part = slice.to_double_poly();
    comp.exact = true;
    comp.exact_norm2 = real_sphere_inner(slice, slice);
    comp.norm2 = static_cast<double>(comp.exact_norm2);
    d.components.emplace(p, std::move(comp));
  }
  return d;
}

HarmDecomposition harm_decompose(const RealPoly& f) {
  if (coeff_l1(real_laplacian(f)) > 1e-8 * (1.0 + coeff_l1(f)))
    throw std::invalid_argument("harm_decompose: input is not harmonic");
  HarmDecomposition d;
  d.n = f.nvars();
  for (auto& [p, slice] : f.degree_slices()) {
    HarmonicComponent comp;
    comp.n = d.n;
    comp.p = p;
    comp.part = slice;
    comp.exact_part = RealRationalPoly(d.n);
    comp.exact = false;
    comp.norm2 = real_sphere_inner(slice, slice);
    d.components.emplace(p, std::move(comp));
  }
  return d;
}

RealPoly zonal_poly(int n, int p, std::span<const double> y) {
  check_real_cell(n, p, "zonal_poly");
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("zonal_poly: wrong point dimension");
  const HarmonicBasis& basis = harm_basis(n, p);
  RealPoly z(n);
  for (const RealPoly& e : basis.elements) {
    RealPoly scaled = e;
    scaled.scale(e.eval(y));
    z += scaled;
  }
  return z;
}

SeminormReport harm_norm_s(const HarmDecomposition& f, double s) {
  if (!(s > -f.n / 2.0 - 1.0))
    throw std::domain_error("harm_norm_s: requires s > -n/2-1");
  SeminormReport report;
  report.name = "harm_norm_s";
  for (const auto& [p, comp] : f.components) {
    double w = harm_coeff(f.n, p, s);
    report.value += w * comp.norm2;
    report.error_bound += w * comp.norm2 * 1e-14;
    report.cells_used.emplace_back(p, -1);
  }
  report.notes = "degree sum of harm_coeff(n,p,s) times squared sphere norms";
  return report;
}

PjVerification theorem_pj_verify(int n, int m, int pmax) {
  check_real_cell(n, 0, "theorem_pj_verify");
  if (m < 1 || 4 * m <= n)
    throw std::invalid_argument("theorem_pj_verify: requires an integer m with 4m > n");
  if (pmax < 1) throw std::invalid_argument("theorem_pj_verify: pmax >= 1");

  PjVerification v;
  v.n = n;
  v.m = m;

  // Word-sum identity at one level: the rotation fields applied to exact
  // basis elements reproduce the spectral weight 2p(p+n-2) exactly.
  Rational residual(0);
  for (int p = 1; p <= std::min(pmax, 3); ++p) {
    const HarmonicBasis& basis = harm_basis(n, p);
    for (std::size_t i = 0; i < basis.exact_elements.size(); ++i) {
      const RealRationalPoly& g = basis.exact_elements[i];
      Rational word_sum(0);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (j == k) continue;
          RealRationalPoly xg = real_tangential(g, j, k);
          word_sum += real_sphere_inner(xg, xg);
        }
      Rational spectral = Rational(2 * p * (p + n - 2)) * basis.exact_norms2[i];
      Rational diff = word_sum - spectral;
      if (diff < 0) diff = -diff;
      if (diff > residual) residual = diff;
    }
  }
  v.word_identity_residual = static_cast<double>(residual);

  double s = 2.0 * m - n / 2.0 - 1.0;
  for (int p = 1; p <= pmax; ++p) {
    double spectral = std::pow(2.0 * p * (p + n - 2.0), m) * harm_coeff(n, p, s);
    v.ratios.push_back(spectral / harm_sq(n, p));
  }
  v.window_lo = *std::min_element(v.ratios.begin(), v.ratios.end());
  v.window_hi = *std::max_element(v.ratios.begin(), v.ratios.end());
  return v;
}

}  // namespace mdirichlet
