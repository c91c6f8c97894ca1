#include "mdirichlet/seminorms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdirichlet/coeffs.hpp"
#include "mdirichlet/moments.hpp"
#include "mdirichlet/operators.hpp"

namespace mdirichlet {

namespace {

void require_pure_cells(const PWDecomposition& f, const char* who) {
  for (const auto& [cell, comp] : f.components)
    if (cell.first >= 1 && cell.second >= 1 && comp.norm2 > 0.0)
      throw std::invalid_argument(std::string(who) +
                                  ": decomposition must be pluriharmonic (pure cells only)");
}

double int_power(double base, int m) {
  double v = 1.0;
  for (int i = 0; i < m; ++i) v *= base;
  return v;
}

}  // namespace

SeminormReport norm_s(const PWDecomposition& f, double s) {
  if (!(s > -f.n - 1.0))
    throw std::domain_error("norm_s: requires s > -n-1");
  SeminormReport report;
  report.name = "norm_s";
  for (const auto& [cell, comp] : f.components) {
    auto [p, q] = cell;
    double w, w_err;
    if (p == 0 && q == 0) {
      w = 1.0;
      w_err = 0.0;
    } else if (q == 0) {
      w = c_p0_closed(f.n, p, s);
      w_err = 4e-15 * w * p;
    } else if (p == 0) {
      w = c_p0_closed(f.n, q, s);
      w_err = 4e-15 * w * q;
    } else if (s > -1.0) {
      ValueWithError v = c_pq(f.n, p, q, s);
      w = v.value;
      w_err = v.error;
    } else {
      ValueWithError v = c_pq_continued(f.n, p, q).regular_eval(s);
      w = v.value;
      w_err = v.error;
    }
    report.value += w * comp.norm2;
    report.error_bound += w_err * comp.norm2 + 2e-16 * w * comp.norm2;
    report.cells_used.push_back(cell);
  }
  if (f.tail_bound > 0.0) {
    if (s < -1.0)
      throw std::runtime_error(
          "norm_s: no tail bound available below s = -1 for a truncated decomposition");
    // Every cell weight is at most its value at s = -1, which is one.
    report.error_bound += f.tail_bound * f.tail_bound;
    report.notes = "truncation tail absorbed into the error bound";
  }
  return report;
}

SeminormReport hardy_norm(const PWDecomposition& f) {
  SeminormReport report;
  report.name = "hardy_norm";
  for (const auto& [cell, comp] : f.components) {
    report.value += comp.norm2;
    report.error_bound += 2e-16 * comp.norm2;
    report.cells_used.push_back(cell);
  }
  if (f.tail_bound > 0.0) {
    report.error_bound += f.tail_bound * f.tail_bound;
    report.notes = "truncation tail absorbed into the error bound";
  }
  return report;
}

SeminormReport dirichlet_cici(const PWDecomposition& f) {
  SeminormReport report;
  report.name = "dirichlet_cici";
  for (const auto& [cell, comp] : f.components) {
    auto [p, q] = cell;
    if (p == 0 || q == 0) continue;
    double w = c_cici(f.n, p, q);
    report.value += w * comp.norm2;
    report.error_bound += 3e-16 * w * comp.norm2;
    report.cells_used.push_back(cell);
  }
  if (report.cells_used.empty()) report.notes = "no mixed cells; the seminorm vanishes";
  return report;
}

SeminormReport dirichlet_circ(const PWDecomposition& f) {
  SeminormReport report;
  report.name = "dirichlet_circ";
  bool skipped_mixed = false;
  for (const auto& [cell, comp] : f.components) {
    auto [p, q] = cell;
    if (p >= 1 && q >= 1) {
      skipped_mixed = comp.norm2 > 0.0 || skipped_mixed;
      continue;
    }
    int deg = p + q;
    if (deg == 0) continue;
    double w = c_circ(f.n, deg);
    report.value += w * comp.norm2;
    report.error_bound += 3e-16 * w * comp.norm2;
    report.cells_used.push_back(cell);
  }
  if (skipped_mixed)
    report.notes = "mixed cells present; they carry no weight in this seminorm";
  return report;
}

SeminormReport dirichlet_sq(const HarmDecomposition& f) {
  SeminormReport report;
  report.name = "dirichlet_sq";
  for (const auto& [p, comp] : f.components) {
    if (p == 0) continue;
    double w = harm_sq(f.n, p);
    report.value += w * comp.norm2;
    report.error_bound += 3e-16 * w * comp.norm2;
    report.cells_used.emplace_back(p, -1);
  }
  return report;
}

SeminormReport tangential_sum(const ComplexPoly& f, int m) {
  const int n = f.nvars();
  if (m < 0) throw std::invalid_argument("tangential_sum: word length must be >= 0");
  if (m > 4 || (m >= 1 && n > 3))
    throw std::invalid_argument(
        "tangential_sum: word enumeration is guarded to m <= 4 and n <= 3");

  std::vector<RationalPoly> level{to_rational_poly(f)};
  for (int step = 0; step < m; ++step) {
    std::vector<RationalPoly> next;
    next.reserve(level.size() * 2 * static_cast<std::size_t>(n) *
                 static_cast<std::size_t>(n - 1));
    for (const RationalPoly& g : level)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (j == k) continue;
          next.push_back(tangential(g, j, k, false));
          next.push_back(tangential(g, j, k, true));
        }
    level = std::move(next);
  }

  Rational total(0);
  for (const RationalPoly& g : level) total += sphere_inner(g, g).re;

  SeminormReport report;
  report.name = "tangential_sum";
  report.value = static_cast<double>(total);
  report.error_bound = 2e-16 * std::abs(report.value);
  report.notes = "exact rational word sum over " + std::to_string(2 * n * (n - 1)) +
                 " fields, length " + std::to_string(m) + ", rounded once";
  return report;
}

double theorem_pf_ratio(const ComplexPoly& f, int n) {
  if (f.nvars() != n) throw std::invalid_argument("theorem_pf_ratio: dimension mismatch");
  ComplexPoly qf = project_Q(f);
  auto [dp, dq] = f.bidegree();
  double den = dirichlet_cici(peter_weyl(f, dp, dq)).value;
  if (den == 0.0)
    throw std::domain_error("theorem_pf_ratio: the invariant seminorm vanishes");
  double num = tangential_sum(qf, n).value;
  return num / den;
}

SeminormReport radial_seminorm(const PWDecomposition& f, int m) {
  if (2 * m <= f.n)
    throw std::invalid_argument("radial_seminorm: requires 2m > n");
  require_pure_cells(f, "radial_seminorm");
  double s = 2.0 * m - f.n - 1.0;
  SeminormReport report;
  report.name = "radial_seminorm";
  for (const auto& [cell, comp] : f.components) {
    int deg = cell.first + cell.second;
    if (deg == 0) continue;
    double w = int_power(deg, 2 * m) * c_p0_closed(f.n, deg, s);
    report.value += w * comp.norm2;
    report.error_bound += 5e-15 * w * comp.norm2;
    report.cells_used.push_back(cell);
  }
  return report;
}

PhReport theorem_ph_sums(const PWDecomposition& f, int k) {
  require_pure_cells(f, "theorem_ph_sums");
  if (!(k > -f.n - 1.0))
    throw std::domain_error("theorem_ph_sums: weight index must exceed -n-1");
  PhReport out;
  out.vq.name = "theorem_ph_vq";
  out.vr.name = "theorem_ph_vr";
  for (const auto& [cell, comp] : f.components) {
    int deg = cell.first + cell.second;
    if (deg == 0) continue;
    double base = (2.0 * f.n - 2.0) * deg;
    out.vq.value += int_power(base, f.n) * comp.norm2;
    out.vq.cells_used.push_back(cell);
    double w = int_power(base, f.n + k + 1) * c_p0_closed(f.n, deg, k);
    out.vr.value += w * comp.norm2;
    out.vr.cells_used.push_back(cell);
    out.vq.error_bound += 4e-15 * int_power(base, f.n) * comp.norm2;
    out.vr.error_bound += 6e-15 * w * comp.norm2;
  }
  return out;
}

SeminormReport theorem_pj_sums(const HarmDecomposition& f, int m) {
  if (m < 1 || 4 * m <= f.n)
    throw std::invalid_argument("theorem_pj_sums: requires an integer m with 4m > n");
  double s = 2.0 * m - f.n / 2.0 - 1.0;
  SeminormReport report;
  report.name = "theorem_pj_sums";
  for (const auto& [p, comp] : f.components) {
    if (p == 0) continue;
    double w = int_power(2.0 * p * (p + f.n - 2.0), m) * harm_coeff(f.n, p, s);
    report.value += w * comp.norm2;
    report.error_bound += 5e-15 * w * comp.norm2;
    report.cells_used.emplace_back(p, -1);
  }
  return report;
}

}  // namespace mdirichlet
