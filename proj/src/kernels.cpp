#include "mdirichlet/kernels.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "mdirichlet/coeffs.hpp"
#include "mdirichlet/harmonics.hpp"
#include "mdirichlet/realharm.hpp"
#include "mdirichlet/specfun.hpp"

namespace mdirichlet {

namespace {

Complex ball_pairing(std::span<const Complex> x, std::span<const Complex> y, int n,
                     const char* who, bool strict_interior) {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument(std::string(who) + ": wrong point dimension");
  double nx = 0.0, ny = 0.0;
  Complex ip = 0.0;
  for (int j = 0; j < n; ++j) {
    nx += std::norm(x[static_cast<std::size_t>(j)]);
    ny += std::norm(y[static_cast<std::size_t>(j)]);
    ip += x[static_cast<std::size_t>(j)] * std::conj(y[static_cast<std::size_t>(j)]);
  }
  double cap = strict_interior ? 1.0 - 1e-14 : 1.0 + 1e-12;
  if (nx > cap || ny > cap)
    throw std::invalid_argument(std::string(who) + ": points must lie in the unit ball");
  return ip;
}

void check_real_point(std::span<const double> x, int n, const char* who) {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument(std::string(who) + ": wrong point dimension");
  double nx = 0.0;
  for (double v : x) nx += v * v;
  if (nx > 1.0 + 1e-12)
    throw std::invalid_argument(std::string(who) + ": points must lie in the unit ball");
}

std::string truncation_note(int cutoff, const char* index) {
  return std::string("partial sum; cells with ") + index + " > " + std::to_string(cutoff) +
         " are omitted and no extrapolation is applied";
}

}  // namespace

Complex k_hol(std::span<const Complex> x, std::span<const Complex> y, int n, double s) {
  Complex ip = ball_pairing(x, y, n, "k_hol", true);
  return std::pow(Complex(1.0, 0.0) - ip, Complex(-s - n - 1.0, 0.0));
}

Complex k_hol_circ(std::span<const Complex> x, std::span<const Complex> y) {
  int n = static_cast<int>(x.size());
  Complex ip = ball_pairing(x, y, n, "k_hol_circ", true);
  return -std::log(Complex(1.0, 0.0) - ip);
}

double k_circ(std::span<const Complex> x, std::span<const Complex> y) {
  return 2.0 * k_hol_circ(x, y).real();
}

double k_circ_partial(std::span<const Complex> x, std::span<const Complex> y, int n,
                      int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("k_circ_partial: cutoff >= 0");
  double total = 0.0;
  for (int p = 1; p <= cutoff; ++p) {
    double w = 1.0 / c_circ(n, p);
    Complex shell = kpq_kernel(x, y, n, p, 0) + kpq_kernel(x, y, n, 0, p);
    total += w * shell.real();
  }
  return total;
}

TruncatedKernel k_s_truncated(int n, double s, int cutoff) {
  if (n < 1 || cutoff < 0)
    throw std::invalid_argument("k_s_truncated: need n >= 1 and cutoff >= 0");
  if (!(s > -n - 1.0))
    throw std::domain_error("k_s_truncated: requires s > -n-1");

  std::vector<std::pair<std::pair<int, int>, double>> weights;
  for (int p = 0; p <= cutoff; ++p)
    for (int q = 0; p + q <= cutoff; ++q) {
      if (n == 1 && p >= 1 && q >= 1) continue;
      double c;
      if (p == 0 && q == 0)
        c = 1.0;
      else if (q == 0)
        c = c_p0_closed(n, p, s);
      else if (p == 0)
        c = c_p0_closed(n, q, s);
      else if (s > -1.0)
        c = c_pq(n, p, q, s).value;
      else
        c = c_pq_continued(n, p, q).regular_eval(s).value;
      weights.push_back({{p, q}, 1.0 / c});
    }

  TruncatedKernel k;
  k.family = "mharmonic_s";
  k.parameters = {{"n", static_cast<double>(n)}, {"s", s}};
  k.cutoff = cutoff;
  k.tail_note = truncation_note(cutoff, "p+q");
  k.eval = [n, weights = std::move(weights)](std::span<const Complex> x,
                                             std::span<const Complex> y) {
    Complex total = 0.0;
    for (const auto& [cell, w] : weights)
      total += w * kpq_kernel(x, y, n, cell.first, cell.second);
    return total;
  };
  return k;
}

TruncatedKernel k_cici_truncated(int n, int cutoff) {
  if (n < 2)
    throw std::invalid_argument(
        "k_cici_truncated: the space is trivial for n = 1; need n >= 2");
  if (cutoff < 0) throw std::invalid_argument("k_cici_truncated: cutoff >= 0");

  std::vector<std::pair<std::pair<int, int>, double>> weights;
  for (int p = 1; p <= cutoff; ++p)
    for (int q = 1; p + q <= cutoff; ++q) weights.push_back({{p, q}, 1.0 / c_cici(n, p, q)});

  TruncatedKernel k;
  k.family = "cici";
  k.parameters = {{"n", static_cast<double>(n)}};
  k.cutoff = cutoff;
  k.tail_note = truncation_note(cutoff, "p+q");
  k.eval = [n, weights = std::move(weights)](std::span<const Complex> x,
                                             std::span<const Complex> y) {
    Complex total = 0.0;
    for (const auto& [cell, w] : weights)
      total += w * kpq_kernel(x, y, n, cell.first, cell.second);
    return total;
  };
  return k;
}

TruncatedKernel k_harm_truncated(int n, double s, int cutoff) {
  if (n < 1 || n > kMaxVars || cutoff < 0)
    throw std::invalid_argument("k_harm_truncated: need 1 <= n <= " +
                                std::to_string(kMaxVars) + " and cutoff >= 0");
  double edge = -n / 2.0 - 1.0;
  if (s < edge)
    throw std::domain_error("k_harm_truncated: requires s >= -n/2-1");

  std::vector<double> weights(static_cast<std::size_t>(cutoff) + 1);
  std::vector<const HarmonicBasis*> bases(static_cast<std::size_t>(cutoff) + 1);
  double w = 1.0;
  for (int p = 0; p <= cutoff; ++p) {
    weights[static_cast<std::size_t>(p)] = w;
    bases[static_cast<std::size_t>(p)] = &harm_basis(n, p);
    w *= (n / 2.0 + s + 1.0 + p) / (n / 2.0 + p);
  }

  TruncatedKernel k;
  k.family = "harmonic_s";
  k.parameters = {{"n", static_cast<double>(n)}, {"s", s}};
  k.cutoff = cutoff;
  k.tail_note = truncation_note(cutoff, "p");
  k.eval_real = [n, weights = std::move(weights),
                 bases = std::move(bases)](std::span<const double> x,
                                           std::span<const double> y) {
    check_real_point(x, n, "harmonic kernel");
    check_real_point(y, n, "harmonic kernel");
    double total = 0.0;
    for (std::size_t p = 0; p < weights.size(); ++p) {
      if (weights[p] == 0.0) continue;
      double zonal = 0.0;
      for (const RealPoly& e : bases[p]->elements) zonal += e.eval(x) * e.eval(y);
      total += weights[p] * zonal;
    }
    return total;
  };
  return k;
}

double gram_min_eigenvalue(const TruncatedKernel& kernel,
                           const std::vector<std::vector<Complex>>& points) {
  if (!kernel.eval)
    throw std::invalid_argument("gram_min_eigenvalue: kernel has no complex evaluator");
  const int m = static_cast<int>(points.size());
  if (m == 0) throw std::invalid_argument("gram_min_eigenvalue: no points");
  Eigen::MatrixXcd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g(i, j) = kernel.eval(points[static_cast<std::size_t>(i)],
                            points[static_cast<std::size_t>(j)]);
    }
  Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  return solver.eigenvalues().minCoeff();
}

double gram_min_eigenvalue(const TruncatedKernel& kernel,
                           const std::vector<std::vector<double>>& points) {
  if (!kernel.eval_real)
    throw std::invalid_argument("gram_min_eigenvalue: kernel has no real evaluator");
  const int m = static_cast<int>(points.size());
  if (m == 0) throw std::invalid_argument("gram_min_eigenvalue: no points");
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = kernel.eval_real(points[static_cast<std::size_t>(i)],
                                 points[static_cast<std::size_t>(j)]);
  Eigen::MatrixXd h = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  return solver.eigenvalues().minCoeff();
}

}  // namespace mdirichlet
