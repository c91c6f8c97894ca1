#pragma once

#include <vector>

#include "mdirichlet/scalar.hpp"

namespace mdirichlet {

/// Rising factorial x(x+1)...(x+m-1); empty product for m = 0.
double pochhammer(double x, int m);
Rational pochhammer_exact(const Rational& x, int m);

/// H_m = 1 + 1/2 + ... + 1/m as an exact rational; H_0 = 0.
Rational harmonic_number(int m);

/// Digamma at positive integer or half-integer arguments, via the recurrence
/// psi(x+1) = psi(x) + 1/x seeded at psi(1) and psi(1/2). Other arguments are
/// rejected; nothing in this project needs them.
double digamma(double x);

/// Gauss hypergeometric series sum_m (a)_m (b)_m / ((c)_m m!) t^m for |t| < 1,
/// with absolute error at most tol. Terminates exactly when a or b is a
/// nonpositive integer. Otherwise requires c + 1 > a + b, which makes the
/// term-ratio test (c+m)(m+1) >= (a+m)(b+m) permanent once it first holds, so
/// the reported geometric tail bound is certified.
double gauss_2f1(double a, double b, double c, double t, double tol = 1e-12);

/// 2F1(p,q;p+q+n;1) = Gamma(p+q+n) Gamma(n) / (Gamma(p+n) Gamma(q+n)).
double gauss_value_at_one(int p, int q, int n);
Rational gauss_value_at_one_exact(int p, int q, int n);

/// Connection expansion of the normalized series
///   f(t) = 2F1(p,q;p+q+n;t) / 2F1(p,q;p+q+n;1)
/// around t = 1 in the logarithmic case p,q >= 1:
///   f(t) = A0(u) + A1(u) u^n log(1/u),   u = 1 - t,
/// with exact rational coefficients. tail_bound is a certified sup-norm bound,
/// valid for u in (0, bound_radius], on the error of evaluating with both
/// series truncated at truncation_degree.
struct LogCaseExpansion {
  int n = 0, p = 0, q = 0;
  std::vector<Rational> a0;  // coefficients of u^0 .. u^truncation_degree
  std::vector<Rational> a1;
  int truncation_degree = 0;
  double tail_bound = 0.0;
  double bound_radius = 0.5;

  double eval_a0(double u) const;
  double eval_a1(double u) const;
  /// A0(u) + A1(u) u^n log(1/u); continuous value a0[0] at u = 0.
  double eval(double u) const;
};

LogCaseExpansion log_case_expansion(int n, int p, int q, int degree);

}  // namespace mdirichlet
