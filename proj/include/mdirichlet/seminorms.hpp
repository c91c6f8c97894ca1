#pragma once

#include "mdirichlet/harmonics.hpp"
#include "mdirichlet/realharm.hpp"
#include "mdirichlet/report.hpp"

namespace mdirichlet {

/// Weighted norm sum C_pq(s) ||f_pq||^2 over the cells of a decomposition.
/// Requires s > -n-1; cell weights below s = -1 come from the meromorphic
/// continuation. A nonzero decomposition tail is absorbed into the error
/// bound for s >= -1 and is unbounded below that, where it throws.
SeminormReport norm_s(const PWDecomposition& f, double s);

/// Unweighted cell sum, the boundary L^2 norm of the decomposition.
SeminormReport hardy_norm(const PWDecomposition& f);

/// Invariant Dirichlet seminorm with mixed-cell weights (p)_n (q)_n /
/// Gamma(n)^2. Pluriharmonic decompositions score zero.
SeminormReport dirichlet_cici(const PWDecomposition& f);

/// Dirichlet seminorm of the pluriharmonic part, weight p (n)_p / p! on the
/// pure cells. Mixed cells carry no weight here and are noted, not summed.
SeminormReport dirichlet_circ(const PWDecomposition& f);

/// Dirichlet seminorm of a real harmonic decomposition, weight p (n/2)_p /
/// p! per degree.
SeminormReport dirichlet_sq(const HarmDecomposition& f);

/// Sum of squared boundary norms of every length-m word in the 2n(n-1)
/// complex tangential fields applied to f, evaluated exactly in rational
/// arithmetic. Guarded to m <= 4 and, for m >= 1, n <= 3. At m = 1 the
/// value equals the cell sum [4pq + (2n-2)(p+q)] ||f_pq||^2. Longer words
/// migrate across cells, so for m >= 2 the sum is a path sum of the split
/// weights 2p(q+n-1) (into cell (p-1,q+1)) and 2q(p+n-1) (into (p+1,q-1)),
/// not the m-th power of their total.
SeminormReport tangential_sum(const ComplexPoly& f, int m);

/// Ratio of the length-n tangential word sum of the non-pluriharmonic part
/// to the invariant Dirichlet seminorm. Requires f.nvars() == n and a
/// nonzero denominator.
double theorem_pf_ratio(const ComplexPoly& f, int n);

/// Radial seminorm sum p^{2m} C_p0(2m-n-1) ||f_cell||^2 over the pure cells
/// of a pluriharmonic decomposition. Requires 2m > n.
SeminormReport radial_seminorm(const PWDecomposition& f, int m);

/// The two spectral sums comparing iterated tangential derivatives of a
/// pluriharmonic decomposition against Hardy and weighted norms: vq uses
/// weight [(2n-2)p]^n on plain cell norms, vr uses [(2n-2)p]^{n+k+1} with
/// the closed pure-cell coefficient at s = k.
struct PhReport {
  SeminormReport vq;
  SeminormReport vr;
};
PhReport theorem_ph_sums(const PWDecomposition& f, int k);

/// Spectral sum [2p(p+n-2)]^m harm_coeff(n, p, 2m-n/2-1) ||f_p||^2 over a
/// real harmonic decomposition. Requires 4m > n.
SeminormReport theorem_pj_sums(const HarmDecomposition& f, int m);

}  // namespace mdirichlet
