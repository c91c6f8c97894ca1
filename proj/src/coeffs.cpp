#include "mdirichlet/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mdirichlet/memo.hpp"
#include "mdirichlet/specfun.hpp"

namespace mdirichlet {

namespace {

constexpr double kDelta = 0.5;
constexpr int kSeriesDegree = 160;
constexpr int kSingularCut = 40;
constexpr int kRegularDegree = 80;

double factorial_double(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Nodes and weights of 16-point Gauss-Legendre on [-1, 1], by Newton
/// iteration on the Legendre recurrence.
const std::array<std::array<double, 16>, 2>& gl16_rule() {
  static const std::array<std::array<double, 16>, 2> rule = [] {
    std::array<std::array<double, 16>, 2> r{};
    const int nn = 16;
    for (int i = 0; i < nn; ++i) {
      double x = std::cos(3.14159265358979323846 * (i + 0.75) / (nn + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 64; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= nn; ++k) {
          double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = nn * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r[0][static_cast<std::size_t>(i)] = x;
      r[1][static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

template <class F>
double gl16(const F& f, double a, double b) {
  const auto& rule = gl16_rule();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanSum acc;
  for (int i = 0; i < 16; ++i)
    acc.add(rule[1][static_cast<std::size_t>(i)] *
            f(mid + half * rule[0][static_cast<std::size_t>(i)]));
  return acc.sum * half;
}

template <class F>
double adaptive_gl(const F& f, double a, double b, double tol, int depth, double& err) {
  double whole = gl16(f, a, b);
  double mid = 0.5 * (a + b);
  double halves = gl16(f, a, mid) + gl16(f, mid, b);
  double diff = std::abs(whole - halves);
  if (diff <= tol || depth >= 48) {
    err += diff;
    return halves;
  }
  return adaptive_gl(f, a, mid, 0.5 * tol, depth + 1, err) +
         adaptive_gl(f, mid, b, 0.5 * tol, depth + 1, err);
}

/// Closed form of the continuation of integral_0^delta u^{w-1} log^m(1/u) du:
/// m! delta^w / w^{m+1} * sum_{i<=m} (w log(1/delta))^i / i!.
double w_closed(int m, double w, double delta, double log_inv_delta) {
  double term = 1.0, poly = 1.0;
  for (int i = 1; i <= m; ++i) {
    term *= w * log_inv_delta / i;
    poly += term;
  }
  return factorial_double(m) * std::pow(delta, w) / std::pow(w, m + 1) * poly;
}

void check_cell_args(int n, int p, int q, const char* who) {
  if (n < 1 || p < 0 || q < 0)
    throw std::invalid_argument(std::string(who) + ": need n >= 1 and p, q >= 0");
}

/// Exact power-series coefficients of 2F1(p,q;p+q+n;t)/2F1(p,q;p+q+n;1).
std::vector<Rational> normalized_series(int n, int p, int q, int degree) {
  std::vector<Rational> a(static_cast<std::size_t>(degree) + 1);
  a[0] = Rational(1) / gauss_value_at_one_exact(p, q, n);
  for (int k = 0; k < degree; ++k)
    a[static_cast<std::size_t>(k) + 1] = a[static_cast<std::size_t>(k)] *
                                         Rational((p + k) * (q + k)) /
                                         Rational((p + q + n + k) * (k + 1));
  return a;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(degree); ++i) {
    if (a[i] == 0) continue;
    std::size_t jmax = std::min(b.size() - 1, static_cast<std::size_t>(degree) - i);
    for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// Exact coefficients of (1-u)^k.
std::vector<Rational> one_minus_u_power(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  Rational binom(1);
  for (int j = 0; j <= k; ++j) {
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? binom : -binom;
    binom = binom * Rational(k - j) / Rational(j + 1);
  }
  return c;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = static_cast<double>(v[i]);
  return d;
}

/// sum_{j<=degree} |coeffs_j| r^j plus a certified geometric bound on the
/// dropped tail, using the eventual coefficient ratio rho of the connection
/// series. Valid because the ratio bound is decreasing in the index.
double cauchy_majorant(const std::vector<Rational>& coeffs, double r, double rho) {
  if (rho * r >= 0.999)
    throw std::runtime_error("cauchy_majorant: radius too close to the ratio bound");
  double sum = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    sum += std::abs(static_cast<double>(coeffs[j])) * std::pow(r, static_cast<double>(j));
  double last = std::abs(static_cast<double>(coeffs.back())) *
                std::pow(r, static_cast<double>(coeffs.size() - 1));
  return sum + last * rho * r / (1.0 - rho * r);
}

/// Everything c_pq_continued needs for one cell, built once.
struct CellContinuation {
  int n = 0, p = 0, q = 0;
  std::vector<double> canc_coeffs;          // B0 coefficients j < n
  MeromorphicEval part0, part1, part2;      // lemma engines for B0 (j >= n), B1, B2
  std::vector<double> gprime;               // t-side series of G past t^{p+q+n-1}
  double tail_const = 0.0;                  // certified beyond-truncation constant
  double gamma_n = 1.0;
  std::vector<PoleInfo> poles;
};

CellContinuation build_cell_continuation(int n, int p, int q) {
  CellContinuation cell;
  cell.n = n;
  cell.p = p;
  cell.q = q;
  cell.gamma_n = factorial_double(n - 1);

  LogCaseExpansion ex = log_case_expansion(n, p, q, kSeriesDegree);
  std::vector<Rational> pref = one_minus_u_power(p + q + n - 1);
  std::vector<Rational> b0 = convolve(pref, convolve(ex.a0, ex.a0, kSeriesDegree), kSeriesDegree);
  std::vector<Rational> b01 = convolve(pref, convolve(ex.a0, ex.a1, kSeriesDegree), kSeriesDegree);
  std::vector<Rational> b1(b01.size());
  for (std::size_t j = 0; j < b01.size(); ++j) b1[j] = b01[j] * Rational(2);
  std::vector<Rational> b2 = convolve(pref, convolve(ex.a1, ex.a1, kSeriesDegree), kSeriesDegree);

  std::vector<double> b0d = to_doubles(b0);
  cell.canc_coeffs.assign(b0d.begin(), b0d.begin() + n);
  std::vector<double> b0_upper = b0d;
  std::fill(b0_upper.begin(), b0_upper.begin() + n, 0.0);
  cell.part0 = lemma_pb(b0_upper, kDelta, 0, kSingularCut);
  cell.part1 = lemma_pb(to_doubles(b1), kDelta, 1, kSingularCut);
  cell.part2 = lemma_pb(to_doubles(b2), kDelta, 2, kSingularCut);

  std::vector<Rational> a_t = normalized_series(n, p, q, kRegularDegree);
  std::vector<Rational> g_exact = convolve(a_t, a_t, kRegularDegree);
  cell.gprime = to_doubles(g_exact);

  // Pole strengths, exact: the double at s = -n-1-j comes from the order-2
  // term of B1 at index j, scaled by (s+1)_n / Gamma(n); the triple at
  // s = -2n-1-j likewise from B2.
  Rational gam = pochhammer_exact(Rational(1), n - 1);
  for (int j = 0; j < n; ++j) {
    Rational poch = pochhammer_exact(Rational(-(n + j)), n);
    cell.poles.push_back(
        {static_cast<double>(-(n + 1 + j)), 2,
         static_cast<double>(poch * b1[static_cast<std::size_t>(j)] / gam)});
  }
  for (int j = 0; j < n; ++j) {
    Rational poch = pochhammer_exact(Rational(-(2 * n + j)), n);
    cell.poles.push_back(
        {static_cast<double>(-(2 * n + 1 + j)), 3,
         static_cast<double>(Rational(2) * poch * b2[static_cast<std::size_t>(j)] / gam)});
  }

  // Certified bound on the dropped tail of the three boundary series,
  // via a Cauchy majorant on the circle of radius 3/4.
  const double r = 0.75;
  double i0 = static_cast<double>(kSeriesDegree - n);
  double rho = (1.0 + (n + p - 1) / (i0 + 1.0)) * (1.0 + (q - 1) / (i0 + n + 1.0));
  double m0 = cauchy_majorant(ex.a0, r, rho);
  double m1 = cauchy_majorant(ex.a1, r, rho);
  double scale = std::pow(1.0 + r, p + q + n - 1);
  double mb = scale * (m0 * m0 + 2.0 * m0 * m1 + m1 * m1);
  double ratio = kDelta / r;
  cell.tail_const =
      3.0 * mb * std::pow(ratio, kSeriesDegree + 1) / (1.0 - ratio);
  return cell;
}

const CellContinuation& cached_continuation(int n, int p, int q) {
  using CellKey = std::array<int, 3>;
  return detail::memoized<CellKey, CellContinuation>(
      CellKey{n, p, q}, [&] { return build_cell_continuation(n, p, q); });
}

}  // namespace

MeromorphicEval lemma_pb(const std::vector<double>& f_coeffs, double delta, int m, int big_n) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("lemma_pb: delta outside (0, 1]");
  if (m < 0) throw std::invalid_argument("lemma_pb: negative log power");
  if (big_n < 0 || static_cast<std::size_t>(big_n) > f_coeffs.size())
    throw std::invalid_argument("lemma_pb: fewer coefficients than big_n");

  MeromorphicEval me;
  for (int j = 0; j < big_n; ++j)
    if (f_coeffs[static_cast<std::size_t>(j)] != 0.0)
      me.poles.push_back({static_cast<double>(-(j + 1)), m + 1,
                          factorial_double(m) * f_coeffs[static_cast<std::size_t>(j)]});

  const bool has_remainder = f_coeffs.size() > static_cast<std::size_t>(big_n);
  me.domain_note = has_remainder
                       ? "continuation of the supplied truncation, valid for s > -" +
                             std::to_string(big_n) + " away from the listed poles"
                       : "continuation of the supplied polynomial, valid away from the poles";

  const double log_inv_delta = std::log(1.0 / delta);
  me.regular_eval = [coeffs = f_coeffs, delta, m, big_n, log_inv_delta,
                     has_remainder](double s) -> ValueWithError {
    if (has_remainder && s <= -static_cast<double>(big_n))
      throw std::domain_error("lemma_pb: s outside the represented window");
    KahanSum closed;
    for (int j = 0; j < big_n; ++j) {
      double c = coeffs[static_cast<std::size_t>(j)];
      if (c != 0.0) closed.add(c * w_closed(m, s + j + 1, delta, log_inv_delta));
    }
    double quad = 0.0, quad_err = 0.0;
    if (has_remainder) {
      auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        double poly = 0.0;
        for (std::size_t j = coeffs.size(); j-- > static_cast<std::size_t>(big_n);)
          poly = poly * u + coeffs[j];
        return poly * std::pow(u, s + big_n) * std::pow(std::log(1.0 / u), m);
      };
      quad = adaptive_gl(integrand, 0.0, delta, 1e-12, 0, quad_err);
    }
    double value = closed.sum + quad;
    double error = quad_err + 1e-14 * (std::abs(closed.sum) + std::abs(quad));
    if (!std::isfinite(value)) error = std::numeric_limits<double>::infinity();
    return {value, error};
  };
  return me;
}

GpqSeries g_pq(int n, int p, int q, int degree) {
  check_cell_args(n, p, q, "g_pq");
  if (degree < 0 || degree > 4000) throw std::invalid_argument("g_pq: degree out of range");
  GpqSeries series;
  series.n = n;
  series.p = p;
  series.q = q;
  std::vector<Rational> a = normalized_series(n, p, q, degree);
  std::vector<Rational> g = convolve(a, a, degree);
  series.coefficients = to_doubles(g);
  Rational mass(0);
  for (const Rational& c : g) mass += c;
  Rational missing = Rational(1) - mass;
  if (missing < 0) missing = 0;
  series.tail_bound =
      std::pow(kDelta, p + q + n + degree) * static_cast<double>(missing);
  return series;
}

ValueWithError c_pq(int n, int p, int q, double s) {
  check_cell_args(n, p, q, "c_pq");
  if (!(s > -1.0))
    throw std::domain_error("c_pq: the direct path needs s > -1; use the continuation");
  if (p == 0 && q == 0) return {1.0, 0.0};

  const int base = p + q + n;
  const double t0 = std::lgamma(s + n + 1.0) - std::lgamma(static_cast<double>(n));
  const double tol = 4e-10;
  int cap = 64;
  for (;; cap *= 2) {
    // T[m] = Gamma(s+n+1) Gamma(base+m) / (Gamma(n) Gamma(base+m+s+1)),
    // decreasing in m for s > -1.
    std::vector<double> big_t(static_cast<std::size_t>(2 * cap) + 2);
    big_t[0] = std::exp(t0 + std::lgamma(static_cast<double>(base)) -
                        std::lgamma(base + s + 1.0));
    for (int m = 0; m <= 2 * cap; ++m)
      big_t[static_cast<std::size_t>(m) + 1] =
          big_t[static_cast<std::size_t>(m)] * (base + m) / (base + m + s + 1.0);

    std::vector<double> a(static_cast<std::size_t>(cap) + 1);
    a[0] = static_cast<double>(Rational(1) / gauss_value_at_one_exact(p, q, n));
    for (int k = 0; k < cap; ++k)
      a[static_cast<std::size_t>(k) + 1] = a[static_cast<std::size_t>(k)] *
                                           (static_cast<double>(p) + k) * (q + k) /
                                           ((static_cast<double>(base) + k) * (k + 1));

    KahanSum mass;
    for (double ak : a) mass.add(ak);
    double outside = std::max(0.0, 1.0 - mass.sum * mass.sum) + 1e-11;
    double tail = big_t[static_cast<std::size_t>(cap) + 1] * outside;

    if (tail <= tol || cap >= (1 << 16)) {
      KahanSum total;
      for (int i = 0; i <= cap; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0.0) continue;
        KahanSum row;
        for (int j = 0; j <= cap; ++j)
          row.add(a[static_cast<std::size_t>(j)] * big_t[static_cast<std::size_t>(i + j)]);
        total.add(a[static_cast<std::size_t>(i)] * row.sum);
      }
      double value = total.sum;
      double error = tail + 4e-14 * std::abs(value) + 1e-15;
      if (error > 1e-9)
        throw std::runtime_error("c_pq: could not certify the requested accuracy");
      return {value, error};
    }
  }
}

MeromorphicEval c_pq_continued(int n, int p, int q) {
  check_cell_args(n, p, q, "c_pq_continued");
  if (p == 0 || q == 0)
    throw std::invalid_argument("c_pq_continued: pq = 0 has the closed Pochhammer form");
  const CellContinuation* cell = &cached_continuation(n, p, q);

  MeromorphicEval me;
  me.poles = cell->poles;
  me.domain_note =
      "certified for s > " + std::to_string(-(2 * n + 1)) + " away from the listed poles";
  const int nn = n, pp = p, qq = q;
  me.regular_eval = [cell, nn, pp, qq](double s) -> ValueWithError {
    if (s <= -static_cast<double>(2 * nn + 1))
      throw std::domain_error("c_pq_continued: s below the certified window");

    const int lead = pp + qq + nn - 1;
    auto g_of_t = [&](double t) {
      double series = 0.0;
      for (std::size_t m = cell->gprime.size(); m-- > 0;)
        series = series * t + cell->gprime[m];
      return series * std::pow(t, lead) * std::pow(1.0 - t, s);
    };
    double q_err = 0.0;
    double regular = adaptive_gl(g_of_t, 0.0, 1.0 - kDelta, 1e-12, 0, q_err);

    ValueWithError s0 = cell->part0.regular_eval(s);
    ValueWithError s1 = cell->part1.regular_eval(s + nn);
    ValueWithError s2 = cell->part2.regular_eval(s + 2 * nn);

    double poch = 1.0;
    for (int i = 1; i <= nn; ++i) poch *= s + i;

    double canc = 0.0;
    for (int j = 0; j < nn; ++j) {
      double pj = 1.0;
      for (int i = 1; i <= nn; ++i)
        if (i != j + 1) pj *= s + i;
      canc += cell->canc_coeffs[static_cast<std::size_t>(j)] * pj * std::pow(kDelta, s + j + 1);
    }

    double inner = regular + s0.value + s1.value + s2.value;
    double value = (poch * inner + canc) / cell->gamma_n;
    double tail = std::pow(kDelta, s + 1.0) * cell->tail_const;
    double error = (std::abs(poch) * (q_err + s0.error + s1.error + s2.error + tail) +
                    1e-15 * std::abs(canc)) /
                       cell->gamma_n +
                   2e-14 * std::abs(value);
    if (!std::isfinite(value)) error = std::numeric_limits<double>::infinity();
    return {value, error};
  };
  return me;
}

double c_p0_closed(int n, int p, double s) {
  check_cell_args(n, p, 0, "c_p0_closed");
  for (int k = 0; k < p; ++k)
    if (std::abs(n + s + 1.0 + k) < 1e-9)
      throw std::domain_error("c_p0_closed: evaluation at a pole");
  return pochhammer(static_cast<double>(n), p) / pochhammer(n + s + 1.0, p);
}

double c_circ(int n, int p) {
  check_cell_args(n, p, 0, "c_circ");
  if (p == 0) return 0.0;
  return static_cast<double>(Rational(p) * pochhammer_exact(Rational(n), p) /
                             pochhammer_exact(Rational(1), p));
}

double c_cici(int n, int p, int q) {
  check_cell_args(n, p, q, "c_cici");
  if (p == 0 || q == 0) return 0.0;
  Rational gam = pochhammer_exact(Rational(1), n - 1);
  return static_cast<double>(pochhammer_exact(Rational(p), n) *
                             pochhammer_exact(Rational(q), n) / (gam * gam));
}

double harm_coeff(int n, int p, double s) {
  check_cell_args(n, p, 0, "harm_coeff");
  const double half_n = 0.5 * n;
  for (int k = 0; k < p; ++k)
    if (std::abs(half_n + s + 1.0 + k) < 1e-9)
      throw std::domain_error("harm_coeff: evaluation at a pole");
  return pochhammer(half_n, p) / pochhammer(half_n + s + 1.0, p);
}

double harm_sq(int n, int p) {
  check_cell_args(n, p, 0, "harm_sq");
  if (p == 0) return 0.0;
  return static_cast<double>(Rational(p) * pochhammer_exact(Rational(n, 2), p) /
                             pochhammer_exact(Rational(1), p));
}

}  // namespace mdirichlet
