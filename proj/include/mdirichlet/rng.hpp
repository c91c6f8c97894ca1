#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mdirichlet/scalar.hpp"

namespace mdirichlet {

/// Deterministic pseudo-random source. All mapping from raw engine output to
/// floating values is spelled out here instead of relying on distribution
/// classes, whose output is implementation-defined; identical seeds therefore
/// give identical streams on every platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed = 42) : eng_(seed) {}

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; caches the second value.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01(), u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Uniformly distributed point on the unit sphere of C^n.
  std::vector<Complex> complex_sphere_point(int n) {
    std::vector<Complex> z(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& c : z) {
      c = Complex(normal(), normal());
      norm2 += std::norm(c);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : z) c *= inv;
    return z;
  }

  /// Point in the open ball of C^n with |z| <= rmax, uniform in volume.
  std::vector<Complex> complex_ball_point(int n, double rmax = 0.95) {
    auto z = complex_sphere_point(n);
    double r = rmax * std::pow(uniform01(), 1.0 / (2.0 * n));
    for (auto& c : z) c *= r;
    return z;
  }

  std::vector<double> real_sphere_point(int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& v : x) {
      v = normal();
      norm2 += v * v;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : x) v *= inv;
    return x;
  }

  std::vector<double> real_ball_point(int n, double rmax = 0.95) {
    auto x = real_sphere_point(n);
    double r = rmax * std::pow(uniform01(), 1.0 / n);
    for (auto& v : x) v *= r;
    return x;
  }

  /// Haar-ish random unitary: Gram-Schmidt of a Gaussian matrix. Deterministic
  /// given the seed; distribution details are irrelevant for its uses.
  std::vector<std::vector<Complex>> unitary(int n) {
    std::vector<std::vector<Complex>> u(
        static_cast<std::size_t>(n),
        std::vector<Complex>(static_cast<std::size_t>(n)));
    for (auto& row : u)
      for (auto& c : row) c = Complex(normal(), normal());
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < i; ++k) {
        Complex proj = 0.0;
        for (int j = 0; j < n; ++j)
          proj += u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                  std::conj(u[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        for (int j = 0; j < n; ++j)
          u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
              proj * u[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      double norm2 = 0.0;
      for (int j = 0; j < n; ++j)
        norm2 += std::norm(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      double inv = 1.0 / std::sqrt(norm2);
      for (int j = 0; j < n; ++j)
        u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= inv;
    }
    return u;
  }

 private:
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace mdirichlet
