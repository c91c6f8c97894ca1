#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mdirichlet/scalar.hpp"

namespace mdirichlet {

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

struct PoleInfo {
  double location = 0.0;
  int order = 0;
  double strength = 0.0;
};

/// A function meromorphic on the stated domain: a pole ledger plus an
/// evaluator for the regular points. Near a pole s0 of given order,
/// (s - s0)^order * regular_eval(s) tends to the listed strength.
struct MeromorphicEval {
  std::vector<PoleInfo> poles;
  std::function<ValueWithError(double)> regular_eval;
  std::string domain_note;
};

/// Truncated power series of G_pq around t = 0. coefficients[m] multiplies
/// t^{p+q+n-1+m}; all coefficients are nonnegative and sum to at most 1.
/// tail_bound dominates the dropped tail uniformly on [0, 1/2].
struct GpqSeries {
  int p = 0, q = 0, n = 0;
  std::vector<double> coefficients;
  double tail_bound = 0.0;
};

/// Meromorphic continuation of s -> integral_0^delta F(u) log^m(1/u) u^s du
/// for the polynomial F given by f_coeffs: the part of F below degree big_n
/// is integrated in closed form (contributing poles at s = -j-1 of order m+1
/// with strength m! * f_coeffs[j]), the rest by adaptive quadrature. Valid
/// for s > -big_n - 1 away from the poles.
MeromorphicEval lemma_pb(const std::vector<double>& f_coeffs, double delta, int m, int big_n);

/// Power-series coefficients of G_pq(t) = t^{p+q+n-1} (F(t)/F(1))^2 with
/// F = 2F1(p,q;p+q+n;.), truncated after `degree` terms past the leading
/// exponent, with a certified tail bound on [0, 1/2].
GpqSeries g_pq(int n, int p, int q, int degree);

/// C_pq(s) for s > -1 by the termwise Beta-integral sum, with certified
/// absolute error at most 1e-9. C_00 is exactly 1.
ValueWithError c_pq(int n, int p, int q, double s);

/// Meromorphic continuation of C_pq, p,q >= 1, on s > -2n-1: regular part by
/// quadrature over [0, 1/2], boundary part by closed singular sums from the
/// connection expansion at t = 1. The ledger lists double poles at
/// s = -n-1, ..., -2n and the leading triple poles from s = -2n-1 downward.
MeromorphicEval c_pq_continued(int n, int p, int q);

/// Closed form C_p0(s) = (n)_p / (n+s+1)_p, q = 0 family.
double c_p0_closed(int n, int p, double s);

/// Boundary-seminorm coefficient p (n)_p / p!.
double c_circ(int n, int p);

/// Mixed-cell coefficient (p)_n (q)_n / Gamma(n)^2, zero when pq = 0.
double c_cici(int n, int p, int q);

/// Real-harmonic weight (n/2)_p / (n/2+s+1)_p.
double harm_coeff(int n, int p, double s);

/// Real-harmonic seminorm coefficient p (n/2)_p / p!.
double harm_sq(int n, int p);

}  // namespace mdirichlet
