#pragma once

#include <cmath>
#include <vector>

#include "mdirichlet/poly.hpp"

namespace mdirichlet {

/// Wirtinger derivative d/dz_j of f, or d/dzbar_j when conjugated is true.
template <class S>
PolyT<S> wirtinger(const PolyT<S>& f, int j, bool conjugated) {
  return f.derivative(j, conjugated);
}

/// Invariant Laplacian 4(1-|z|^2) sum_{j,k} (delta_jk - z_j zbar_k) d_j dbar_k.
/// Annihilates exactly the M-harmonic functions.
template <class S>
PolyT<S> invariant_laplacian(const PolyT<S>& f) {
  using Traits = ScalarTraits<S>;
  const int n = f.nvars();
  PolyT<S> acc(n);
  for (int j = 0; j < n; ++j) {
    PolyT<S> fj = f.derivative(j, false);
    acc += fj.derivative(j, true);
    for (int k = 0; k < n; ++k) {
      PolyT<S> mixed = fj.derivative(k, true);
      // subtract z_j zbar_k d_j dbar_k f
      PolyT<S> zz = PolyT<S>::variable(n, j) * PolyT<S>::variable(n, k, true);
      acc -= zz * mixed;
    }
  }
  return (PolyT<S>::one_minus_norm2(n) * acc).scale(Traits::from_int(4));
}

/// Tangential field L_jk = zbar_j d_k - zbar_k d_j, or its conjugate
/// Lbar_jk = z_j dbar_k - z_k dbar_j when conjugated is true. Requires j != k.
template <class S>
PolyT<S> tangential(const PolyT<S>& f, int j, int k, bool conjugated) {
  const int n = f.nvars();
  if (j == k) throw std::invalid_argument("tangential: indices must differ");
  if (j < 0 || k < 0 || j >= n || k >= n)
    throw std::invalid_argument("tangential: index out of range");
  if (!conjugated) {
    return PolyT<S>::variable(n, j, true) * f.derivative(k, false) -
           PolyT<S>::variable(n, k, true) * f.derivative(j, false);
  }
  return PolyT<S>::variable(n, j) * f.derivative(k, true) -
         PolyT<S>::variable(n, k) * f.derivative(j, true);
}

/// Reeb field sum_j (z_j d_j - zbar_j dbar_j); acts as p-q on the cell (p,q).
template <class S>
PolyT<S> reeb(const PolyT<S>& f) {
  const int n = f.nvars();
  PolyT<S> r(n);
  for (int j = 0; j < n; ++j) {
    r += PolyT<S>::variable(n, j) * f.derivative(j, false);
    r -= PolyT<S>::variable(n, j, true) * f.derivative(j, true);
  }
  return r;
}

/// Radial degree field sum_j (z_j d_j + zbar_j dbar_j); acts as p+q on
/// bidegree-(p,q) monomials, hence as the degree on pluriharmonic cells.
template <class S>
PolyT<S> radial_n(const PolyT<S>& f) {
  const int n = f.nvars();
  PolyT<S> r(n);
  for (int j = 0; j < n; ++j) {
    r += PolyT<S>::variable(n, j) * f.derivative(j, false);
    r += PolyT<S>::variable(n, j, true) * f.derivative(j, true);
  }
  return r;
}

/// Euclidean Laplacian on C^n identified with R^{2n}: 4 sum_j d_j dbar_j.
template <class S>
PolyT<S> euclidean_laplacian(const PolyT<S>& f) {
  using Traits = ScalarTraits<S>;
  const int n = f.nvars();
  PolyT<S> acc(n);
  for (int j = 0; j < n; ++j) acc += f.derivative(j, false).derivative(j, true);
  return acc.scale(Traits::from_int(4));
}

/// Spherical Laplacian in its tangential-operator form
/// -R^2 + sum_{j != k} (L_jk Lbar_jk + Lbar_jk L_jk), summed over ordered pairs.
template <class S>
PolyT<S> delta_sph(const PolyT<S>& f) {
  const int n = f.nvars();
  PolyT<S> acc = -(reeb(reeb(f)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      acc += tangential(tangential(f, j, k, true), j, k, false);
      acc += tangential(tangential(f, j, k, false), j, k, true);
    }
  return acc;
}

/// Substitution z -> U z for a unitary U (floating backend only).
/// Requires max_ij |(U*U - I)_ij| <= 1e-12.
inline ComplexPoly rotate(const ComplexPoly& f, const std::vector<std::vector<Complex>>& U) {
  const int n = f.nvars();
  if (static_cast<int>(U.size()) != n)
    throw std::invalid_argument("rotate: matrix size mismatch");
  for (const auto& row : U)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rotate: matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k) s += std::conj(U[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) * U[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw std::invalid_argument("rotate: matrix is not unitary");
    }

  std::vector<ComplexPoly> lin, linbar;
  for (int j = 0; j < n; ++j) {
    ComplexPoly a(n), b(n);
    for (int k = 0; k < n; ++k) {
      MultiIndex m;
      m.set(k, 1);
      a.add_term(m, MultiIndex{}, U[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
      b.add_term(MultiIndex{}, m, std::conj(U[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]));
    }
    lin.push_back(a);
    linbar.push_back(b);
  }

  auto power = [](const ComplexPoly& base, int e) {
    ComplexPoly r = ComplexPoly::constant(base.nvars(), 1.0);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };

  ComplexPoly out(n);
  for (const auto& [k, c] : f.terms()) {
    ComplexPoly t = ComplexPoly::constant(n, c);
    for (int j = 0; j < n; ++j) {
      if (k.alpha[j]) t = t * power(lin[static_cast<std::size_t>(j)], k.alpha[j]);
      if (k.beta[j]) t = t * power(linbar[static_cast<std::size_t>(j)], k.beta[j]);
    }
    out += t;
  }
  return out;
}

/// Real rotation field X_jk = x_j d_k - x_k d_j on R^n. Requires j != k.
template <class S>
RealPolyT<S> real_tangential(const RealPolyT<S>& g, int j, int k) {
  const int n = g.nvars();
  if (j == k) throw std::invalid_argument("real_tangential: indices must differ");
  if (j < 0 || k < 0 || j >= n || k >= n)
    throw std::invalid_argument("real_tangential: index out of range");
  return RealPolyT<S>::variable(n, j) * g.derivative(k) -
         RealPolyT<S>::variable(n, k) * g.derivative(j);
}

template <class S>
RealPolyT<S> real_laplacian(const RealPolyT<S>& g) {
  const int n = g.nvars();
  RealPolyT<S> acc(n);
  for (int j = 0; j < n; ++j) acc += g.derivative(j).derivative(j);
  return acc;
}

/// Real spherical Laplacian: half the sum of X_jk^2 over ordered pairs.
template <class S>
RealPolyT<S> real_delta_sph(const RealPolyT<S>& g) {
  using Traits = RealScalarTraits<S>;
  const int n = g.nvars();
  RealPolyT<S> acc(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      acc += real_tangential(real_tangential(g, j, k), j, k);
    }
  // Ordered pairs double-count each rotation plane.
  S half = Traits::one() / Traits::from_int(2);
  return acc.scale(half);
}

}  // namespace mdirichlet
