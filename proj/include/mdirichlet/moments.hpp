#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "mdirichlet/poly.hpp"

namespace mdirichlet {

namespace detail {

inline double lfact(int m) {
  static thread_local std::vector<double> table{0.0, 0.0};
  while (static_cast<int>(table.size()) <= m)
    table.push_back(table.back() + std::log(static_cast<double>(table.size())));
  return table[static_cast<std::size_t>(m)];
}

inline BigInt big_factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

/// Rising factorial (x)_m for rational x.
inline Rational rational_pochhammer(const Rational& x, int m) {
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= (x + i);
  return r;
}

inline double double_pochhammer(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (x + i);
  return r;
}

}  // namespace detail

/// Integral of z^mu zbar^mu over the unit sphere of C^n against the
/// normalized surface measure: (n-1)! mu! / (n-1+|mu|)!.
inline double sphere_moment(int n, const MultiIndex& mu) {
  double lg = detail::lfact(n - 1) - detail::lfact(n - 1 + mu.degree());
  for (int j = 0; j < n; ++j) lg += detail::lfact(mu[j]);
  return std::exp(lg);
}

inline Rational sphere_moment_exact(int n, const MultiIndex& mu) {
  BigInt num = detail::big_factorial(n - 1);
  for (int j = 0; j < n; ++j) num *= detail::big_factorial(mu[j]);
  return Rational(num, detail::big_factorial(n - 1 + mu.degree()));
}

/// Integral of z^mu zbar^mu over the ball against the normalized weighted
/// measure c_s (1-|z|^2)^s dV: mu! / (n+s+1)_{|mu|}. Requires s > -1.
inline double ball_moment(int n, const MultiIndex& mu, double s) {
  if (!(s > -1.0)) throw std::domain_error("ball_moment: requires s > -1");
  double lg = -0.0;
  for (int j = 0; j < n; ++j) lg += detail::lfact(mu[j]);
  return std::exp(lg) / detail::double_pochhammer(n + s + 1.0, mu.degree());
}

inline Rational ball_moment_exact(int n, const MultiIndex& mu, const Rational& s) {
  if (!(s > -1)) throw std::domain_error("ball_moment: requires s > -1");
  BigInt num = 1;
  for (int j = 0; j < n; ++j) num *= detail::big_factorial(mu[j]);
  return Rational(num) / detail::rational_pochhammer(Rational(n) + s + 1, mu.degree());
}

/// Integral of x^gamma over the unit sphere of R^n (normalized measure).
/// Vanishes unless every exponent is even.
inline double real_sphere_moment(int n, const MultiIndex& gamma) {
  int half_total = 0;
  double f = 1.0;
  for (int j = 0; j < n; ++j) {
    if (gamma[j] % 2 != 0) return 0.0;
    int b = gamma[j] / 2;
    half_total += b;
    f *= std::exp(detail::lfact(2 * b) - detail::lfact(b)) / std::pow(4.0, b);
  }
  return f / detail::double_pochhammer(n / 2.0, half_total);
}

inline Rational real_sphere_moment_exact(int n, const MultiIndex& gamma) {
  int half_total = 0;
  Rational f = 1;
  for (int j = 0; j < n; ++j) {
    if (gamma[j] % 2 != 0) return 0;
    int b = gamma[j] / 2;
    half_total += b;
    BigInt p4 = 1;
    p4 <<= 2 * b;  // 4^b
    f *= Rational(detail::big_factorial(2 * b), detail::big_factorial(b) * p4);
  }
  return f / detail::rational_pochhammer(Rational(n, 2), half_total);
}

/// Integral of x^gamma over the real ball against c_s (1-|x|^2)^s dV,
/// normalized to a probability measure. Requires s > -1.
inline double real_ball_moment(int n, const MultiIndex& gamma, double s) {
  if (!(s > -1.0)) throw std::domain_error("real_ball_moment: requires s > -1");
  double m = real_sphere_moment(n, gamma);
  if (m == 0.0) return 0.0;
  int half_total = gamma.degree() / 2;
  return m * detail::double_pochhammer(n / 2.0, half_total) /
         detail::double_pochhammer(n / 2.0 + s + 1.0, half_total);
}

inline Rational real_ball_moment_exact(int n, const MultiIndex& gamma, const Rational& s) {
  if (!(s > -1)) throw std::domain_error("real_ball_moment: requires s > -1");
  Rational m = real_sphere_moment_exact(n, gamma);
  if (m == 0) return 0;
  int half_total = gamma.degree() / 2;
  return m * detail::rational_pochhammer(Rational(n, 2), half_total) /
         detail::rational_pochhammer(Rational(n, 2) + s + 1, half_total);
}

namespace detail {

template <class S, class MomentFn>
S hermitian_pairing(const PolyT<S>& f, const PolyT<S>& g, MomentFn&& moment) {
  using Traits = ScalarTraits<S>;
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("inner product: dimension mismatch");
  // <f,g> = sum over term pairs with alpha_f + beta_g = beta_f + alpha_g of
  // c_f conj(c_g) * moment(alpha_f + beta_g). Bucket g by alpha-beta.
  std::map<IndexDiff, std::vector<const typename PolyT<S>::TermMap::value_type*>> buckets;
  for (const auto& term : g.terms())
    buckets[index_diff(term.first.alpha, term.first.beta)].push_back(&term);
  S acc = Traits::zero();
  for (const auto& [kf, cf] : f.terms()) {
    auto it = buckets.find(index_diff(kf.alpha, kf.beta));
    if (it == buckets.end()) continue;
    for (const auto* gt : it->second) {
      const auto& [kg, cg] = *gt;
      acc = acc + cf * Traits::conj(cg) * moment(kf.alpha + kg.beta);
    }
  }
  return acc;
}

}  // namespace detail

/// L^2 inner product over the unit sphere of C^n (normalized measure),
/// evaluated exactly through monomial moments.
inline Complex sphere_inner(const ComplexPoly& f, const ComplexPoly& g) {
  return detail::hermitian_pairing(f, g, [n = f.nvars()](const MultiIndex& m) {
    return Complex(sphere_moment(n, m), 0.0);
  });
}

inline GaussianRational sphere_inner(const RationalPoly& f, const RationalPoly& g) {
  return detail::hermitian_pairing(f, g, [n = f.nvars()](const MultiIndex& m) {
    return GaussianRational(sphere_moment_exact(n, m));
  });
}

/// Weighted Bergman inner product over the ball, weight (1-|z|^2)^s
/// normalized to total mass one. Requires s > -1.
inline Complex ball_inner(const ComplexPoly& f, const ComplexPoly& g, double s) {
  return detail::hermitian_pairing(f, g, [n = f.nvars(), s](const MultiIndex& m) {
    return Complex(ball_moment(n, m, s), 0.0);
  });
}

inline GaussianRational ball_inner(const RationalPoly& f, const RationalPoly& g,
                                   const Rational& s) {
  return detail::hermitian_pairing(f, g, [n = f.nvars(), &s](const MultiIndex& m) {
    return GaussianRational(ball_moment_exact(n, m, s));
  });
}

inline double sphere_norm2(const ComplexPoly& f) {
  return sphere_inner(f, f).real();
}

/// L^2 inner product over the unit sphere of R^n.
template <class S>
S real_sphere_inner(const RealPolyT<S>& f, const RealPolyT<S>& g) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("real_sphere_inner: dimension mismatch");
  const int n = f.nvars();
  S acc = RealScalarTraits<S>::zero();
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      if constexpr (std::is_same_v<S, double>)
        acc += cf * cg * real_sphere_moment(n, kf + kg);
      else
        acc += cf * cg * real_sphere_moment_exact(n, kf + kg);
    }
  return acc;
}

/// Weighted inner product over the real ball, weight (1-|x|^2)^s normalized.
template <class S, class SV>
S real_ball_inner(const RealPolyT<S>& f, const RealPolyT<S>& g, const SV& s) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("real_ball_inner: dimension mismatch");
  const int n = f.nvars();
  S acc = RealScalarTraits<S>::zero();
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      if constexpr (std::is_same_v<S, double>)
        acc += cf * cg * real_ball_moment(n, kf + kg, s);
      else
        acc += cf * cg * real_ball_moment_exact(n, kf + kg, s);
    }
  return acc;
}

}  // namespace mdirichlet
