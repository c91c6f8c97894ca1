#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace mdirichlet {

struct QuadNode {
  double x;
  double w;
};

/// Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
/// on the Legendre recurrence and cached per order.
inline const std::vector<QuadNode>& gauss_legendre(int order) {
  static thread_local std::map<int, std::vector<QuadNode>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");

  std::vector<QuadNode> nw(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    // Chebyshev-based initial guess, then Newton.
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (order + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int pass = 0; pass < 64; ++pass) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // Refresh p1/dp at the converged node before computing the weight.
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= order; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    nw[static_cast<std::size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
  }
  auto [pos, inserted] = cache.emplace(order, std::move(nw));
  return pos->second;
}

/// Fixed-order Gauss-Legendre integral of f over [a,b].
template <class F>
double integrate_gl(F&& f, double a, double b, int order) {
  const auto& nodes = gauss_legendre(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (const auto& nd : nodes) s += nd.w * f(mid + half * nd.x);
  return s * half;
}

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;  // accumulated local error estimates
};

/// Adaptive bisection with a doubled-order error estimate per panel.
template <class F>
AdaptiveResult integrate_adaptive(F&& f, double a, double b, double target_abs,
                                  int order = 24, int max_depth = 24) {
  AdaptiveResult total;
  struct Panel {
    double a, b, tol;
    int depth;
  };
  std::vector<Panel> stack{{a, b, target_abs, 0}};
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double coarse = integrate_gl(f, p.a, p.b, order);
    double fine = integrate_gl(f, p.a, p.b, 2 * order);
    double err = std::abs(fine - coarse);
    if (err <= p.tol || p.depth >= max_depth) {
      total.value += fine;
      total.error += err;
      continue;
    }
    double mid = 0.5 * (p.a + p.b);
    stack.push_back({p.a, mid, 0.5 * p.tol, p.depth + 1});
    stack.push_back({mid, p.b, 0.5 * p.tol, p.depth + 1});
  }
  return total;
}

}  // namespace mdirichlet
