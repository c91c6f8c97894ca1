#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mdirichlet/poly.hpp"

namespace mdirichlet {

/// Orthogonal basis of the bigraded cell (p,q) in n complex variables:
/// bihomogeneous polynomials of bidegree (p,q) annihilated by the Euclidean
/// Laplacian. `elements` are unit-norm under the sphere pairing;
/// `exact_elements` are the same family before normalization, pairwise
/// orthogonal with exact rational coefficients, with squared norms in
/// `exact_norms2`.
struct HpqBasis {
  int n = 0;
  int p = 0;
  int q = 0;
  int dim = 0;
  std::vector<ComplexPoly> elements;
  std::vector<RationalPoly> exact_elements;
  std::vector<Rational> exact_norms2;
};

/// One cell of a spherical-harmonic decomposition together with its radial
/// extension: the function S^{pq}(|z|) * boundary(z/|z|) on the closed ball.
struct BigradedComponent {
  int n = 0;
  int p = 0;
  int q = 0;
  ComplexPoly boundary;
  RationalPoly exact_boundary;
  bool exact = false;
  Rational exact_norm2{0};
  double norm2 = 0.0;

  BigradedComponent() : boundary(1), exact_boundary(1) {}

  /// Value of the extension at a point of the closed ball.
  Complex eval(std::span<const Complex> z) const;
};

/// Cellwise decomposition of a polynomial's sphere restriction. `tail_bound`
/// is a certified L2(sphere) bound on the omitted cells; it is zero whenever
/// every cell of a polynomial input is kept.
struct PWDecomposition {
  int n = 0;
  std::map<std::pair<int, int>, BigradedComponent> components;
  double tail_bound = 0.0;
};

/// Reproducing kernel of the cell (p,q) as a polynomial in one complex
/// scalar (variable 0) and its conjugate, with exact rational coefficients.
/// For n = 1 only pq = 0 is admissible (the other cells are trivial).
RationalPoly hpq_kernel(int n, int p, int q);

/// Dimension of the cell (p,q), computed as the nullspace dimension of the
/// Euclidean Laplacian on the bidegree-(p,q) monomial span. Memoized.
int hpq_dimension(int n, int p, int q);

/// Orthonormal cell basis, memoized behind a read-mostly cache; the returned
/// reference stays valid for the process lifetime. Deterministic: monomials
/// are processed in the canonical graded-lex order.
const HpqBasis& build_basis(int n, int p, int q);

/// Radial factor S^{pq}(r) of the M-harmonic extension, normalized so that
/// S^{pq}(1) = 1. Requires 0 <= r <= 1.
double radial_profile(int n, int p, int q, double r);

/// S^{pq}(r) / r^{p+q}, which extends continuously to r = 0.
double radial_profile_ratio(int n, int p, int q, double r);

/// M-harmonic extension of a harmonic bihomogeneous boundary polynomial.
/// The rational overload validates harmonicity exactly; the floating-point
/// overload within a tolerance scaled by the coefficient size.
BigradedComponent solid_extend(const RationalPoly& boundary);
BigradedComponent solid_extend(const ComplexPoly& boundary);

/// Reproducing kernel of the solid cell (p,q) at a pair of points of the
/// closed ball: S^{pq}(|z|) S^{pq}(|w|) H^{pq}(<z/|z|, w/|w|>).
Complex kpq_kernel(std::span<const Complex> z, std::span<const Complex> w, int n, int p,
                   int q);

/// Decomposition of the sphere restriction of f over the cells with
/// p <= pmax and q <= qmax. Exact for rational input; the floating-point
/// overload converts the coefficients losslessly and runs the exact path.
PWDecomposition peter_weyl(const RationalPoly& f, int pmax, int qmax);
PWDecomposition peter_weyl(const ComplexPoly& f, int pmax, int qmax);

/// Projections of sphere restrictions. The polynomial forms return the
/// canonical harmonic representative of the projected function:
/// project_pi0 keeps the cell (0,0), project_hol the cells (p,0),
/// project_antihol the cells (0,q), project_P their union, and project_Q
/// the complement (cells with p >= 1 and q >= 1).
RationalPoly project_pi0(const RationalPoly& f);
RationalPoly project_hol(const RationalPoly& f);
RationalPoly project_antihol(const RationalPoly& f);
RationalPoly project_P(const RationalPoly& f);
RationalPoly project_Q(const RationalPoly& f);
ComplexPoly project_pi0(const ComplexPoly& f);
ComplexPoly project_hol(const ComplexPoly& f);
ComplexPoly project_antihol(const ComplexPoly& f);
ComplexPoly project_P(const ComplexPoly& f);
ComplexPoly project_Q(const ComplexPoly& f);
PWDecomposition project_pi0(const PWDecomposition& d);
PWDecomposition project_hol(const PWDecomposition& d);
PWDecomposition project_antihol(const PWDecomposition& d);
PWDecomposition project_P(const PWDecomposition& d);
PWDecomposition project_Q(const PWDecomposition& d);

/// Exact rational value of a finite double (every double is dyadic).
Rational rational_of(double x);

/// Lossless rational image of a floating-point coefficient polynomial.
RationalPoly to_rational_poly(const ComplexPoly& f);

}  // namespace mdirichlet
