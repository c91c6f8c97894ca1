#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mdirichlet/scalar.hpp"

namespace mdirichlet {

/// Finite partial sum of a reproducing-kernel series. Exactly one of the two
/// evaluators is set: `eval` for the complex-ball families ("mharmonic_s",
/// "cici"), `eval_real` for the real-ball family ("harmonic_s"). The partial
/// sums are symmetric under argument swap and real-valued, since the series
/// pair each cell with its conjugate.
struct TruncatedKernel {
  std::string family;
  std::map<std::string, double> parameters;
  int cutoff = 0;
  std::function<Complex(std::span<const Complex>, std::span<const Complex>)> eval;
  std::function<double(std::span<const double>, std::span<const double>)> eval_real;
  std::string tail_note;
};

/// Weighted Bergman reproducing kernel (1 - <x,y>)^{-s-n-1} on the unit ball
/// of C^n, principal branch. Requires interior points. At s = -n-1 the kernel
/// is the constant one.
Complex k_hol(std::span<const Complex> x, std::span<const Complex> y, int n, double s);

/// Kernel log 1/(1 - <x,y>) of the holomorphic logarithmic Dirichlet space.
Complex k_hol_circ(std::span<const Complex> x, std::span<const Complex> y);

/// Kernel log 1/|1 - <x,y>|^2 = 2 Re k_hol_circ of its pluriharmonic
/// counterpart.
double k_circ(std::span<const Complex> x, std::span<const Complex> y);

/// Partial sum over degrees 1..cutoff of the cell expansion of k_circ:
/// sum of (K_p0 + K_0p) / c_circ(n, p). Converges to k_circ on the open ball.
double k_circ_partial(std::span<const Complex> x, std::span<const Complex> y, int n,
                      int cutoff);

/// Partial sum over cells p+q <= cutoff of K_pq / C_pq(s). Requires
/// s > -n-1; cell weights below s = -1 come from the meromorphic
/// continuation of the coefficient functions.
TruncatedKernel k_s_truncated(int n, double s, int cutoff);

/// Partial sum over mixed cells 1 <= p,q, p+q <= cutoff of
/// Gamma(n)^2 K_pq / ((p)_n (q)_n). Requires n >= 2; the space it reproduces
/// is trivial for n = 1.
TruncatedKernel k_cici_truncated(int n, int cutoff);

/// Partial sum over degrees p <= cutoff of [(n/2+s+1)_p / (n/2)_p] Z_p(x,y)
/// on the real ball, with Z_p the zonal sum of an orthonormal harmonic
/// basis. Requires s >= -n/2-1; at the left edge every p >= 1 weight
/// vanishes and the kernel is the constant one.
TruncatedKernel k_harm_truncated(int n, double s, int cutoff);

/// Smallest eigenvalue of the Gram matrix [K(x_i, x_j)] of the kernel over
/// the given points, after symmetrizing away floating-point skew.
double gram_min_eigenvalue(const TruncatedKernel& kernel,
                           const std::vector<std::vector<Complex>>& points);
double gram_min_eigenvalue(const TruncatedKernel& kernel,
                           const std::vector<std::vector<double>>& points);

}  // namespace mdirichlet
