#pragma once

#include <map>
#include <span>
#include <vector>

#include "mdirichlet/poly.hpp"
#include "mdirichlet/report.hpp"

namespace mdirichlet {

/// Orthogonal basis of the harmonic homogeneous polynomials of degree p on
/// R^n. `elements` are unit-norm under the normalized sphere measure;
/// `exact_elements` are the same family before normalization, pairwise
/// orthogonal with exact rational coefficients and squared norms in
/// `exact_norms2`.
struct HarmonicBasis {
  int n = 0;
  int p = 0;
  int dim = 0;
  std::vector<RealPoly> elements;
  std::vector<RealRationalPoly> exact_elements;
  std::vector<Rational> exact_norms2;
};

/// Memoized orthonormal degree-p basis; the returned reference stays valid
/// for the process lifetime. Deterministic: monomials are processed in a
/// fixed graded order.
const HarmonicBasis& harm_basis(int n, int p);

/// Dimension of the degree-p harmonic space on R^n.
int harm_dimension(int n, int p);

/// One degree of a harmonic decomposition.
struct HarmonicComponent {
  int n = 0;
  int p = 0;
  RealPoly part;
  RealRationalPoly exact_part;
  bool exact = false;
  Rational exact_norm2{0};
  double norm2 = 0.0;

  HarmonicComponent() : part(1), exact_part(1) {}
};

/// Degree-graded split of a harmonic polynomial; components of distinct
/// degrees are orthogonal on the sphere, so Parseval holds exactly.
struct HarmDecomposition {
  int n = 0;
  std::map<int, HarmonicComponent> components;
};

/// Splits a harmonic polynomial into homogeneous degrees. The rational
/// overload validates harmonicity exactly; the floating-point overload
/// within a tolerance scaled by the coefficient size.
HarmDecomposition harm_decompose(const RealRationalPoly& f);
HarmDecomposition harm_decompose(const RealPoly& f);

/// Zonal kernel of the degree-p harmonics with pole y, as a polynomial in
/// x: the orthonormal-basis sum of e_i(x) e_i(y). Reproduces degree-p
/// harmonics under the normalized sphere pairing.
RealPoly zonal_poly(int n, int p, std::span<const double> y);

/// Weighted norm of a harmonic polynomial: the degree sum of
/// harm_coeff(n,p,s) times the squared sphere norm. Requires s > -n/2-1.
SeminormReport harm_norm_s(const HarmDecomposition& f, double s);

/// Verification record for the rotation-field seminorm equivalence: the
/// word-sum identity residual at m = 1 and the ratio table of the spectral
/// seminorm against the harmonic Dirichlet weight.
struct PjVerification {
  int n = 0;
  int m = 0;
  double word_identity_residual = 0.0;
  std::vector<double> ratios;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// Requires 4m > n. Ratios cover degrees 1..pmax.
PjVerification theorem_pj_verify(int n, int m, int pmax);

}  // namespace mdirichlet
