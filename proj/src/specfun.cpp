#include "mdirichlet/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdirichlet/moments.hpp"

namespace mdirichlet {

double pochhammer(double x, int m) {
  return detail::double_pochhammer(x, m);
}

Rational pochhammer_exact(const Rational& x, int m) {
  return detail::rational_pochhammer(x, m);
}

Rational harmonic_number(int m) {
  if (m < 0) throw std::invalid_argument("harmonic_number: negative index");
  static thread_local std::vector<Rational> cache{Rational(0)};
  while (static_cast<int>(cache.size()) <= m)
    cache.push_back(cache.back() + Rational(1, static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(m)];
}

double digamma(double x) {
  const double euler = 0.57721566490153286060651209008240;
  double twice = 2.0 * x;
  if (!(x > 0.0) || twice != std::round(twice))
    throw std::invalid_argument("digamma: only positive integer or half-integer arguments");
  double v, y;
  if (x == std::round(x)) {
    v = -euler;
    y = 1.0;
  } else {
    v = -euler - 2.0 * std::log(2.0);
    y = 0.5;
  }
  for (; y < x - 0.25; y += 1.0) v += 1.0 / y;
  return v;
}

double gauss_2f1(double a, double b, double c, double t, double tol) {
  if (!(t < 1.0))
    throw std::domain_error("gauss_2f1: series diverges for t >= 1");
  if (!(t > -1.0))
    throw std::domain_error("gauss_2f1: |t| must be below 1");
  if (c <= 0.0 && c == std::round(c))
    throw std::invalid_argument("gauss_2f1: c must not be a nonpositive integer");

  auto nonpos_int = [](double x) { return x <= 0.0 && x == std::round(x); };
  double term = 1.0, sum = 1.0;

  if (nonpos_int(a) || nonpos_int(b)) {
    long long len = 1LL << 40;
    if (nonpos_int(a)) len = std::min(len, std::llround(-a));
    if (nonpos_int(b)) len = std::min(len, std::llround(-b));
    for (long long m = 0; m < len; ++m) {
      term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * t;
      sum += term;
    }
    return sum;
  }

  if (!(c + 1.0 > a + b))
    throw std::domain_error("gauss_2f1: unsupported parameter range (needs c+1 > a+b)");

  const double at = std::abs(t);
  for (long long m = 0; m < 4000000; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * t;
    sum += term;
    bool ratios_below_one = (c + m + 1) * (m + 2) >= std::abs((a + m + 1) * (b + m + 1));
    if (ratios_below_one && std::abs(term) * at / (1.0 - at) <= tol) return sum;
  }
  throw std::runtime_error("gauss_2f1: did not reach the requested tolerance");
}

Rational gauss_value_at_one_exact(int p, int q, int n) {
  if (p < 0 || q < 0 || n < 1)
    throw std::invalid_argument("gauss_value_at_one: requires p,q >= 0 and n >= 1");
  return Rational(detail::big_factorial(p + q + n - 1) * detail::big_factorial(n - 1),
                  detail::big_factorial(p + n - 1) * detail::big_factorial(q + n - 1));
}

double gauss_value_at_one(int p, int q, int n) {
  return static_cast<double>(gauss_value_at_one_exact(p, q, n));
}

double LogCaseExpansion::eval_a0(double u) const {
  double s = 0.0;
  for (std::size_t j = a0.size(); j-- > 0;) s = s * u + static_cast<double>(a0[j]);
  return s;
}

double LogCaseExpansion::eval_a1(double u) const {
  double s = 0.0;
  for (std::size_t j = a1.size(); j-- > 0;) s = s * u + static_cast<double>(a1[j]);
  return s;
}

double LogCaseExpansion::eval(double u) const {
  if (u == 0.0) return a0.empty() ? 0.0 : static_cast<double>(a0[0]);
  return eval_a0(u) + eval_a1(u) * std::pow(u, n) * std::log(1.0 / u);
}

namespace {

// Finite-block coefficient (p)_j (q)_j / ((1-n)_j j!), defined for j < n.
Rational finite_block_coeff(int n, int p, int q, int j) {
  Rational c(1);
  for (int i = 0; i < j; ++i) c *= Rational((p + i) * (q + i)) / Rational(1 - n + i);
  return c / Rational(detail::big_factorial(j));
}

// Signed coefficient shared by the A1 series and the h''-weighted block of
// A0: (-1)^n Gamma(n+p+i) Gamma(n+q+i) / (i! (i+n)! Gamma(n) Gamma(p) Gamma(q)).
Rational log_family_coeff(int n, int p, int q, int i) {
  BigInt num = detail::big_factorial(n + p + i - 1) * detail::big_factorial(n + q + i - 1);
  if (n % 2 != 0) num = -num;
  BigInt den = detail::big_factorial(i) * detail::big_factorial(i + n) *
               detail::big_factorial(n - 1) * detail::big_factorial(p - 1) *
               detail::big_factorial(q - 1);
  return Rational(num, den);
}

Rational hdd(int n, int p, int q, int i) {
  return harmonic_number(i) + harmonic_number(i + n) - harmonic_number(i + n + p - 1) -
         harmonic_number(i + n + q - 1);
}

}  // namespace

LogCaseExpansion log_case_expansion(int n, int p, int q, int degree) {
  if (n < 1) throw std::invalid_argument("log_case_expansion: n must be >= 1");
  if (p < 1 || q < 1)
    throw std::invalid_argument(
        "log_case_expansion: p,q >= 1 required; the series has no log term otherwise");
  if (degree < 0) throw std::invalid_argument("log_case_expansion: degree must be >= 0");

  LogCaseExpansion ex;
  ex.n = n;
  ex.p = p;
  ex.q = q;
  ex.truncation_degree = degree;
  ex.a0.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  ex.a1.assign(static_cast<std::size_t>(degree) + 1, Rational(0));

  for (int j = 0; j <= std::min(n - 1, degree); ++j)
    ex.a0[static_cast<std::size_t>(j)] = finite_block_coeff(n, p, q, j);
  for (int i = 0; i + n <= degree; ++i)
    ex.a0[static_cast<std::size_t>(n + i)] += log_family_coeff(n, p, q, i) * hdd(n, p, q, i);
  for (int i = 0; i <= degree; ++i)
    ex.a1[static_cast<std::size_t>(i)] = log_family_coeff(n, p, q, i);

  // Certified tail on (0, delta]. The log-family magnitudes m_i satisfy
  // m_{i+1}/m_i = (n+p+i)(n+q+i)/((i+1)(i+n+1)) <= rho(I) for every i >= I,
  // and |hdd| is strictly decreasing (it is a sum of right-shifting blocks of
  // reciprocals), so each dropped tail is dominated by a geometric series.
  const double delta = ex.bound_radius;
  auto rho = [&](int I) {
    return (1.0 + static_cast<double>(n + p - 1) / (I + 1)) *
           (1.0 + static_cast<double>(q - 1) / (I + n + 1));
  };

  const int i1 = degree + 1;  // first dropped A1 index
  const int i0 = std::max(0, degree - n + 1);  // first dropped A0 log-block index
  double rho1 = rho(i1), rho0 = rho(i0);
  if (rho1 * delta >= 0.999 || rho0 * delta >= 0.999)
    throw std::invalid_argument(
        "log_case_expansion: degree too small for a certified tail bound at this (n,p,q)");

  double tail_a1 = std::abs(static_cast<double>(log_family_coeff(n, p, q, i1))) *
                   std::pow(delta, i1) / (1.0 - rho1 * delta);
  double tail_a0 = std::abs(static_cast<double>(log_family_coeff(n, p, q, i0))) *
                   std::abs(static_cast<double>(hdd(n, p, q, i0))) *
                   std::pow(delta, n + i0) / (1.0 - rho0 * delta);
  double tail_finite = 0.0;
  for (int j = degree + 1; j <= n - 1; ++j)
    tail_finite += std::abs(static_cast<double>(finite_block_coeff(n, p, q, j))) *
                   std::pow(delta, j);

  // sup of u^n log(1/u) on (0, delta]: endpoint value, or the interior
  // stationary value 1/(n e) when the stationary point e^{-1/n} lies inside.
  double mlog = std::pow(delta, n) * std::log(1.0 / delta);
  if (std::exp(-1.0 / n) <= delta) mlog = std::max(mlog, 1.0 / (n * std::exp(1.0)));

  ex.tail_bound = tail_finite + tail_a0 + tail_a1 * mlog;
  return ex;
}

}  // namespace mdirichlet
