#include "mdirichlet/harmonics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "mdirichlet/memo.hpp"
#include "mdirichlet/moments.hpp"
#include "mdirichlet/operators.hpp"
#include "mdirichlet/specfun.hpp"

namespace mdirichlet {

namespace {

void check_cell(int n, int p, int q, const char* who) {
  if (n < 1 || n > kMaxVars)
    throw std::invalid_argument(std::string(who) + ": dimension out of range");
  if (p < 0 || q < 0) throw std::invalid_argument(std::string(who) + ": negative bidegree");
}

Rational fact(int m) { return Rational(detail::big_factorial(m)); }

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == n - 1) {
      cur.set(j, rem);
      out.push_back(cur);
      cur.set(j, 0);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur.set(j, e);
      self(self, j + 1, rem - e);
    }
    cur.set(j, 0);
  };
  rec(rec, 0, d);
  return out;
}

/// Bidegree-(p,q) monomials in the canonical graded-lex order.
std::vector<TermKey> bigraded_monomials(int n, int p, int q) {
  std::vector<TermKey> cols;
  for (const auto& a : monomials_of_degree(n, p))
    for (const auto& b : monomials_of_degree(n, q)) cols.push_back(TermKey{a, b});
  std::sort(cols.begin(), cols.end(), TermKeyLess{});
  return cols;
}

struct Elimination {
  std::vector<TermKey> cols;
  std::vector<std::map<int, Rational>> rows;
  std::vector<int> pivot_row_of_col;  // -1 marks a free column
  int rank = 0;
};

/// Reduced row echelon form of the Euclidean Laplacian restricted to the
/// bidegree-(p,q) monomial span, with pivot columns chosen in canonical
/// order and, among candidate rows, the sparsest row (lowest index on ties)
/// so the result is deterministic.
Elimination eliminate_laplacian(int n, int p, int q) {
  Elimination el;
  el.cols = bigraded_monomials(n, p, q);
  std::map<int, Rational> dummy;

  std::map<TermKey, int, TermKeyLess> col_of;
  for (int c = 0; c < static_cast<int>(el.cols.size()); ++c) col_of[el.cols[c]] = c;

  if (p >= 1 && q >= 1) {
    auto targets = bigraded_monomials(n, p - 1, q - 1);
    std::map<TermKey, int, TermKeyLess> row_of;
    for (int r = 0; r < static_cast<int>(targets.size()); ++r) row_of[targets[r]] = r;
    el.rows.assign(targets.size(), {});
    for (int c = 0; c < static_cast<int>(el.cols.size()); ++c) {
      const TermKey& k = el.cols[c];
      for (int j = 0; j < n; ++j) {
        int aj = k.alpha[j], bj = k.beta[j];
        if (aj < 1 || bj < 1) continue;
        TermKey tk{k.alpha.lowered(j), k.beta.lowered(j)};
        el.rows[static_cast<std::size_t>(row_of.at(tk))][c] += Rational(4 * aj * bj);
      }
    }
  }

  const int C = static_cast<int>(el.cols.size());
  const int R = static_cast<int>(el.rows.size());
  el.pivot_row_of_col.assign(static_cast<std::size_t>(C), -1);
  std::vector<bool> used(static_cast<std::size_t>(R), false);

  for (int c = 0; c < C; ++c) {
    int best = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (int r = 0; r < R; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      auto it = el.rows[static_cast<std::size_t>(r)].find(c);
      if (it == el.rows[static_cast<std::size_t>(r)].end() || it->second == 0) continue;
      if (el.rows[static_cast<std::size_t>(r)].size() < best_size) {
        best = r;
        best_size = el.rows[static_cast<std::size_t>(r)].size();
      }
    }
    if (best < 0) continue;

    used[static_cast<std::size_t>(best)] = true;
    el.pivot_row_of_col[static_cast<std::size_t>(c)] = best;
    ++el.rank;
    auto& prow = el.rows[static_cast<std::size_t>(best)];
    Rational inv = prow.at(c);
    for (auto& [k, v] : prow) v /= inv;
    for (int r = 0; r < R; ++r) {
      if (r == best) continue;
      auto& row = el.rows[static_cast<std::size_t>(r)];
      auto it = row.find(c);
      if (it == row.end() || it->second == 0) continue;
      Rational f = it->second;
      for (const auto& [k, v] : prow) {
        auto jt = row.emplace(k, Rational(0)).first;
        jt->second -= f * v;
        if (jt->second == 0) row.erase(jt);
      }
    }
  }
  return el;
}

HpqBasis construct_basis(int n, int p, int q) {
  HpqBasis basis;
  basis.n = n;
  basis.p = p;
  basis.q = q;

  Elimination el = eliminate_laplacian(n, p, q);
  const int C = static_cast<int>(el.cols.size());

  std::vector<RationalPoly> nullspace;
  for (int f = 0; f < C; ++f) {
    if (el.pivot_row_of_col[static_cast<std::size_t>(f)] >= 0) continue;
    RationalPoly v(n);
    v.add_term(el.cols[static_cast<std::size_t>(f)].alpha,
               el.cols[static_cast<std::size_t>(f)].beta, GaussianRational(1));
    for (int c = 0; c < C; ++c) {
      int r = el.pivot_row_of_col[static_cast<std::size_t>(c)];
      if (r < 0) continue;
      auto it = el.rows[static_cast<std::size_t>(r)].find(f);
      if (it == el.rows[static_cast<std::size_t>(r)].end()) continue;
      v.add_term(el.cols[static_cast<std::size_t>(c)].alpha,
                 el.cols[static_cast<std::size_t>(c)].beta,
                 GaussianRational(Rational(0) - it->second));
    }
    nullspace.push_back(std::move(v));
  }

  for (auto& v : nullspace) {
    RationalPoly e = v;
    for (std::size_t j = 0; j < basis.exact_elements.size(); ++j) {
      GaussianRational ip = sphere_inner(e, basis.exact_elements[j]);
      if (ip == GaussianRational(0)) continue;
      GaussianRational c = ip / GaussianRational(basis.exact_norms2[j]);
      e -= basis.exact_elements[j] * c;
    }
    if (e.is_zero()) continue;
    GaussianRational nu = sphere_inner(e, e);
    if (!(nu.im == 0) || !(nu.re > 0))
      throw std::logic_error("build_basis: indefinite Gram entry");
    ComplexPoly unit = e.to_complex_poly();
    unit.scale(Complex(1.0 / std::sqrt(static_cast<double>(nu.re)), 0.0));
    basis.exact_elements.push_back(std::move(e));
    basis.exact_norms2.push_back(nu.re);
    basis.elements.push_back(std::move(unit));
  }
  basis.dim = static_cast<int>(basis.elements.size());
  return basis;
}

using CellKey = std::array<int, 3>;

const LogCaseExpansion& cached_expansion(int n, int p, int q) {
  return detail::memoized<CellKey, LogCaseExpansion>(CellKey{n, p, q}, [&] {
    for (int degree : {40, 80, 160, 320, 640}) {
      try {
        LogCaseExpansion ex = log_case_expansion(n, p, q, degree);
        if (ex.tail_bound <= 1e-13) return ex;
      } catch (const std::invalid_argument&) {
        continue;  // degree too small for a certified bound at this cell
      }
    }
    throw std::runtime_error("radial_profile: no certified expansion at this bidegree");
  });
}

const ComplexPoly& cached_hpq_complex(int n, int p, int q) {
  return detail::memoized<CellKey, ComplexPoly>(CellKey{n, p, q},
                                        [&] { return hpq_kernel(n, p, q).to_complex_poly(); });
}

}  // namespace

RationalPoly hpq_kernel(int n, int p, int q) {
  check_cell(n, p, q, "hpq_kernel");
  if (n == 1 && p > 0 && q > 0)
    throw std::invalid_argument("hpq_kernel: cell is trivial for n=1");

  RationalPoly H(1);
  if (p == 0 && q == 0) {
    H.add_term(MultiIndex{}, MultiIndex{}, GaussianRational(1));
    return H;
  }
  const bool swapped = p < q;
  if (swapped) std::swap(p, q);

  Rational pref = Rational(n + p + q - 1) * pochhammer_exact(Rational(n), p - 1) /
                  (fact(q) * fact(p - q));
  if (q % 2 != 0) pref = -pref;
  for (int k = 0; k <= q; ++k) {
    Rational ck = pref * pochhammer_exact(Rational(-q), k) *
                  pochhammer_exact(Rational(n + p - 1), k) /
                  (pochhammer_exact(Rational(p - q + 1), k) * fact(k));
    MultiIndex a({p - q + k}), b({k});
    if (swapped) std::swap(a, b);
    H.add_term(a, b, GaussianRational(ck));
  }
  return H;
}

int hpq_dimension(int n, int p, int q) {
  check_cell(n, p, q, "hpq_dimension");
  return detail::memoized<CellKey, int>(CellKey{n, p, q}, [&] {
    Elimination el = eliminate_laplacian(n, p, q);
    return static_cast<int>(el.cols.size()) - el.rank;
  });
}

const HpqBasis& build_basis(int n, int p, int q) {
  check_cell(n, p, q, "build_basis");
  if (n == 1 && p > 0 && q > 0)
    throw std::invalid_argument("build_basis: cell is empty for n=1");
  return detail::memoized<CellKey, HpqBasis>(CellKey{n, p, q},
                                             [&] { return construct_basis(n, p, q); });
}

double radial_profile_ratio(int n, int p, int q, double r) {
  check_cell(n, p, q, "radial_profile");
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("radial_profile: radius outside [0,1]");
  if (p == 0 || q == 0) return 1.0;
  double t = r * r;
  if (t <= 0.5) {
    double v = static_cast<double>(gauss_value_at_one_exact(p, q, n));
    return gauss_2f1(p, q, p + q + n, t) / v;
  }
  return cached_expansion(n, p, q).eval(1.0 - t);
}

double radial_profile(int n, int p, int q, double r) {
  check_cell(n, p, q, "radial_profile");
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("radial_profile: radius outside [0,1]");
  if (p + q == 0) return 1.0;
  if (r == 0.0) return 0.0;
  if (r == 1.0) return 1.0;
  return std::pow(r, p + q) * radial_profile_ratio(n, p, q, r);
}

Complex BigradedComponent::eval(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("BigradedComponent: point dimension mismatch");
  double r2 = 0.0;
  for (const Complex& zj : z) r2 += std::norm(zj);
  double r = std::sqrt(r2);
  if (r > 1.0 + 1e-12)
    throw std::domain_error("BigradedComponent: point outside the closed ball");
  return boundary.eval(z) * radial_profile_ratio(n, p, q, std::min(r, 1.0));
}

BigradedComponent solid_extend(const RationalPoly& f) {
  if (!f.is_bihomogeneous())
    throw std::invalid_argument("solid_extend: boundary must be bihomogeneous");
  if (!euclidean_laplacian(f).is_zero())
    throw std::invalid_argument("solid_extend: boundary must be harmonic");
  auto [p, q] = f.bidegree();
  BigradedComponent comp;
  comp.n = f.nvars();
  comp.p = p;
  comp.q = q;
  comp.exact_boundary = f;
  comp.boundary = f.to_complex_poly();
  comp.exact = true;
  comp.exact_norm2 = sphere_inner(f, f).re;
  comp.norm2 = static_cast<double>(comp.exact_norm2);
  return comp;
}

BigradedComponent solid_extend(const ComplexPoly& f) {
  if (!f.is_bihomogeneous())
    throw std::invalid_argument("solid_extend: boundary must be bihomogeneous");
  if (euclidean_laplacian(f).coeff_l1() > 1e-8 * (1.0 + f.coeff_l1()))
    throw std::invalid_argument("solid_extend: boundary must be harmonic");
  auto [p, q] = f.bidegree();
  BigradedComponent comp;
  comp.n = f.nvars();
  comp.p = p;
  comp.q = q;
  comp.boundary = f;
  comp.exact_boundary = RationalPoly(f.nvars());
  comp.exact = false;
  comp.norm2 = sphere_inner(f, f).real();
  return comp;
}

Complex kpq_kernel(std::span<const Complex> z, std::span<const Complex> w, int n, int p,
                   int q) {
  check_cell(n, p, q, "kpq_kernel");
  if (n == 1 && p > 0 && q > 0)
    throw std::invalid_argument("kpq_kernel: cell is trivial for n=1");
  if (static_cast<int>(z.size()) != n || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("kpq_kernel: point dimension mismatch");
  double rz2 = 0.0, rw2 = 0.0;
  for (const Complex& v : z) rz2 += std::norm(v);
  for (const Complex& v : w) rw2 += std::norm(v);
  double rz = std::sqrt(rz2), rw = std::sqrt(rw2);
  if (rz > 1.0 + 1e-12 || rw > 1.0 + 1e-12)
    throw std::domain_error("kpq_kernel: point outside the closed ball");
  if (p == 0 && q == 0) return Complex(1.0, 0.0);
  if (rz == 0.0 || rw == 0.0) return Complex(0.0, 0.0);

  Complex ip(0.0, 0.0);
  for (int j = 0; j < n; ++j) ip += z[j] * std::conj(w[j]);
  ip /= rz * rw;
  Complex hval = cached_hpq_complex(n, p, q).eval(std::span<const Complex>(&ip, 1));
  return radial_profile(n, p, q, std::min(rz, 1.0)) *
         radial_profile(n, p, q, std::min(rw, 1.0)) * hval;
}

PWDecomposition peter_weyl(const RationalPoly& f, int pmax, int qmax) {
  if (pmax < 0 || qmax < 0)
    throw std::invalid_argument("peter_weyl: negative bidegree cap");
  const int n = f.nvars();
  PWDecomposition d;
  d.n = n;

  std::set<std::pair<int, int>> cells;
  for (const auto& [ab, slice] : f.bidegree_slices()) {
    for (int k = 0; k <= std::min(ab.first, ab.second); ++k) {
      int p = ab.first - k, q = ab.second - k;
      if (p > pmax || q > qmax) continue;
      if (n == 1 && p > 0 && q > 0) continue;
      cells.insert({p, q});
    }
  }

  Rational kept(0);
  for (const auto& [p, q] : cells) {
    const HpqBasis& basis = build_basis(n, p, q);
    RationalPoly cell_poly(n);
    Rational cell_norm2(0);
    for (int i = 0; i < basis.dim; ++i) {
      GaussianRational ip = sphere_inner(f, basis.exact_elements[static_cast<std::size_t>(i)]);
      if (ip == GaussianRational(0)) continue;
      GaussianRational c =
          ip / GaussianRational(basis.exact_norms2[static_cast<std::size_t>(i)]);
      cell_poly += basis.exact_elements[static_cast<std::size_t>(i)] * c;
      cell_norm2 +=
          (c.re * c.re + c.im * c.im) * basis.exact_norms2[static_cast<std::size_t>(i)];
    }
    if (cell_poly.is_zero()) continue;

    BigradedComponent comp;
    comp.n = n;
    comp.p = p;
    comp.q = q;
    comp.exact_boundary = cell_poly;
    comp.boundary = cell_poly.to_complex_poly();
    comp.exact = true;
    comp.exact_norm2 = cell_norm2;
    comp.norm2 = static_cast<double>(cell_norm2);
    d.components.emplace(std::make_pair(p, q), std::move(comp));
    kept += cell_norm2;
  }

  Rational residual = sphere_inner(f, f).re - kept;
  if (residual < 0) residual = 0;
  d.tail_bound = std::sqrt(static_cast<double>(residual));
  return d;
}

PWDecomposition peter_weyl(const ComplexPoly& f, int pmax, int qmax) {
  return peter_weyl(to_rational_poly(f), pmax, qmax);
}

namespace {

template <class Keep>
RationalPoly project_cells(const RationalPoly& f, Keep&& keep) {
  int pmax = 0, qmax = 0;
  for (const auto& [ab, slice] : f.bidegree_slices()) {
    pmax = std::max(pmax, ab.first);
    qmax = std::max(qmax, ab.second);
  }
  PWDecomposition d = peter_weyl(f, pmax, qmax);
  RationalPoly out(f.nvars());
  for (const auto& [pq, comp] : d.components)
    if (keep(pq.first, pq.second)) out += comp.exact_boundary;
  return out;
}

template <class Keep>
PWDecomposition filter_cells(const PWDecomposition& d, Keep&& keep) {
  PWDecomposition out;
  out.n = d.n;
  out.tail_bound = d.tail_bound;
  for (const auto& [pq, comp] : d.components)
    if (keep(pq.first, pq.second)) out.components.emplace(pq, comp);
  return out;
}

constexpr auto keep_pi0 = [](int p, int q) { return p == 0 && q == 0; };
constexpr auto keep_hol = [](int, int q) { return q == 0; };
constexpr auto keep_antihol = [](int p, int) { return p == 0; };
constexpr auto keep_P = [](int p, int q) { return p == 0 || q == 0; };
constexpr auto keep_Q = [](int p, int q) { return p >= 1 && q >= 1; };

}  // namespace

RationalPoly project_pi0(const RationalPoly& f) { return project_cells(f, keep_pi0); }
RationalPoly project_hol(const RationalPoly& f) { return project_cells(f, keep_hol); }
RationalPoly project_antihol(const RationalPoly& f) { return project_cells(f, keep_antihol); }
RationalPoly project_P(const RationalPoly& f) { return project_cells(f, keep_P); }
RationalPoly project_Q(const RationalPoly& f) { return project_cells(f, keep_Q); }

ComplexPoly project_pi0(const ComplexPoly& f) {
  return project_pi0(to_rational_poly(f)).to_complex_poly();
}
ComplexPoly project_hol(const ComplexPoly& f) {
  return project_hol(to_rational_poly(f)).to_complex_poly();
}
ComplexPoly project_antihol(const ComplexPoly& f) {
  return project_antihol(to_rational_poly(f)).to_complex_poly();
}
ComplexPoly project_P(const ComplexPoly& f) {
  return project_P(to_rational_poly(f)).to_complex_poly();
}
ComplexPoly project_Q(const ComplexPoly& f) {
  return project_Q(to_rational_poly(f)).to_complex_poly();
}

PWDecomposition project_pi0(const PWDecomposition& d) { return filter_cells(d, keep_pi0); }
PWDecomposition project_hol(const PWDecomposition& d) { return filter_cells(d, keep_hol); }
PWDecomposition project_antihol(const PWDecomposition& d) {
  return filter_cells(d, keep_antihol);
}
PWDecomposition project_P(const PWDecomposition& d) { return filter_cells(d, keep_P); }
PWDecomposition project_Q(const PWDecomposition& d) { return filter_cells(d, keep_Q); }

Rational rational_of(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_of: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp2 = 0;
  double m = std::frexp(x, &exp2);
  auto mantissa = static_cast<long long>(std::ldexp(m, 53));
  int shift = exp2 - 53;
  Rational r{BigInt(mantissa)};
  if (shift > 0)
    r *= Rational(BigInt(1) << shift);
  else if (shift < 0)
    r /= Rational(BigInt(1) << -shift);
  return r;
}

RationalPoly to_rational_poly(const ComplexPoly& f) {
  RationalPoly out(f.nvars());
  for (const auto& [k, c] : f.terms())
    out.add_term(k.alpha, k.beta, GaussianRational(rational_of(c.real()), rational_of(c.imag())));
  return out;
}

}  // namespace mdirichlet
