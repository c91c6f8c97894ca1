#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mdirichlet/multiindex.hpp"
#include "mdirichlet/scalar.hpp"

namespace mdirichlet {

/// Monomial key z^alpha zbar^beta.
struct TermKey {
  MultiIndex alpha;
  MultiIndex beta;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Graded-lexicographic order: total degree first, then alpha, then beta.
struct TermKeyLess {
  bool operator()(const TermKey& x, const TermKey& y) const {
    int dx = x.alpha.degree() + x.beta.degree();
    int dy = y.alpha.degree() + y.beta.degree();
    if (dx != dy) return dx < dy;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.beta < y.beta;
  }
};

/// Sparse polynomial in z_1..z_n and their conjugates with scalar type S
/// (Complex for the floating path, GaussianRational for the exact path).
/// Terms are kept in graded-lex order so that every iteration, and hence
/// every floating accumulation and serialization, is deterministic.
template <class S>
class PolyT {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using TermMap = std::map<TermKey, S, TermKeyLess>;

  explicit PolyT(int nvars) : n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("PolyT: variable count out of range");
  }

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const MultiIndex& alpha, const MultiIndex& beta, const S& c) {
    if (Traits::is_zero(c)) return;
    check_support(alpha);
    check_support(beta);
    auto [it, inserted] = terms_.try_emplace(TermKey{alpha, beta}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  static PolyT constant(int nvars, const S& c) {
    PolyT r(nvars);
    r.add_term(MultiIndex{}, MultiIndex{}, c);
    return r;
  }

  static PolyT variable(int nvars, int j, bool conjugated = false) {
    PolyT r(nvars);
    MultiIndex m;
    m.set(j, 1);
    if (conjugated)
      r.add_term(MultiIndex{}, m, Traits::one());
    else
      r.add_term(m, MultiIndex{}, Traits::one());
    return r;
  }

  /// 1 - |z|^2 as a polynomial; multiplies into the invariant Laplacian.
  static PolyT one_minus_norm2(int nvars) {
    PolyT r = constant(nvars, Traits::one());
    for (int j = 0; j < nvars; ++j) {
      MultiIndex m;
      m.set(j, 1);
      r.add_term(m, m, Traits::zero() - Traits::one());
    }
    return r;
  }

  PolyT& operator+=(const PolyT& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, Traits::zero() - c);
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

  PolyT operator-() const {
    PolyT r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, Traits::zero() - c);
    return r;
  }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    a.check_same(b);
    PolyT r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.alpha + kb.alpha, ka.beta + kb.beta, ca * cb);
    return r;
  }

  PolyT& scale(const S& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v = v * c;
    return *this;
  }
  friend PolyT operator*(PolyT a, const S& c) { return a.scale(c); }
  friend PolyT operator*(const S& c, PolyT a) { return a.scale(c); }

  /// Complex conjugate: swaps holomorphic and anti-holomorphic exponents.
  PolyT conjugate() const {
    PolyT r(n_);
    for (const auto& [k, c] : terms_)
      r.terms_.emplace(TermKey{k.beta, k.alpha}, Traits::conj(c));
    return r;
  }

  /// Wirtinger derivative d/dz_j (conjugated=false) or d/dzbar_j.
  PolyT derivative(int j, bool conjugated) const {
    check_var(j);
    PolyT r(n_);
    for (const auto& [k, c] : terms_) {
      const MultiIndex& m = conjugated ? k.beta : k.alpha;
      int e = m[j];
      if (e == 0) continue;
      TermKey nk = k;
      (conjugated ? nk.beta : nk.alpha) = m.lowered(j);
      r.add_term(nk.alpha, nk.beta, Traits::from_int(e) * c);
    }
    return r;
  }

  /// Holomorphic and anti-holomorphic degrees (max |alpha|, max |beta|).
  std::pair<int, int> bidegree() const {
    int p = 0, q = 0;
    for (const auto& [k, c] : terms_) {
      p = std::max(p, k.alpha.degree());
      q = std::max(q, k.beta.degree());
    }
    return {p, q};
  }

  bool is_bihomogeneous() const {
    if (terms_.empty()) return true;
    auto first = terms_.begin()->first;
    int p = first.alpha.degree(), q = first.beta.degree();
    for (const auto& [k, c] : terms_)
      if (k.alpha.degree() != p || k.beta.degree() != q) return false;
    return true;
  }

  /// Splits into bihomogeneous slices keyed by (|alpha|, |beta|).
  std::map<std::pair<int, int>, PolyT> bidegree_slices() const {
    std::map<std::pair<int, int>, PolyT> r;
    for (const auto& [k, c] : terms_) {
      auto key = std::make_pair(k.alpha.degree(), k.beta.degree());
      auto it = r.find(key);
      if (it == r.end()) it = r.emplace(key, PolyT(n_)).first;
      it->second.add_term(k.alpha, k.beta, c);
    }
    return r;
  }

  /// Sum of coefficient magnitudes; dominates the sup norm on the closed ball.
  double coeff_l1() const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) s += Traits::abs(c);
    return s;
  }

  /// Evaluation at a point of C^n (floating result for both backends).
  Complex eval(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != n_)
      throw std::invalid_argument("PolyT::eval: wrong point dimension");
    int dmax = 0;
    for (const auto& [k, c] : terms_)
      for (int j = 0; j < n_; ++j)
        dmax = std::max({dmax, k.alpha[j], k.beta[j]});
    // Cached powers keep evaluation O(terms) after O(n*dmax) setup.
    std::vector<std::vector<Complex>> zp(static_cast<std::size_t>(n_)),
        zbp(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      auto& a = zp[static_cast<std::size_t>(j)];
      auto& b = zbp[static_cast<std::size_t>(j)];
      a.resize(static_cast<std::size_t>(dmax) + 1);
      b.resize(static_cast<std::size_t>(dmax) + 1);
      a[0] = b[0] = 1.0;
      for (int d = 1; d <= dmax; ++d) {
        a[static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(d - 1)] * z[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(d)] = b[static_cast<std::size_t>(d - 1)] * std::conj(z[static_cast<std::size_t>(j)]);
      }
    }
    Complex s = 0.0;
    for (const auto& [k, c] : terms_) {
      Complex m = Traits::to_complex(c);
      for (int j = 0; j < n_; ++j) {
        m *= zp[static_cast<std::size_t>(j)][static_cast<std::size_t>(k.alpha[j])];
        m *= zbp[static_cast<std::size_t>(j)][static_cast<std::size_t>(k.beta[j])];
      }
      s += m;
    }
    return s;
  }

  /// Drops floating terms whose magnitude is at most tol (no-op for tol=0).
  PolyT pruned(double tol) const {
    PolyT r(n_);
    for (const auto& [k, c] : terms_)
      if (Traits::abs(c) > tol) r.terms_.emplace(k, c);
    return r;
  }

  /// Coefficient-wise conversion to the floating backend.
  PolyT<Complex> to_complex_poly() const {
    PolyT<Complex> r(n_);
    for (const auto& [k, c] : terms_) r.add_term(k.alpha, k.beta, Traits::to_complex(c));
    return r;
  }

 private:
  void check_var(int j) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("PolyT: variable index out of range");
  }
  void check_same(const PolyT& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PolyT: variable count mismatch");
  }
  void check_support(const MultiIndex& m) const {
    for (int j = n_; j < kMaxVars; ++j)
      if (m[j] != 0) throw std::invalid_argument("PolyT: exponent beyond variable count");
  }

  int n_;
  TermMap terms_;
};

using ComplexPoly = PolyT<Complex>;
using RationalPoly = PolyT<GaussianRational>;

/// Sparse real-coefficient polynomial in x_1..x_n.
template <class S>
class RealPolyT {
 public:
  using Scalar = S;
  using Traits = RealScalarTraits<S>;

  struct KeyLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db;
      return a < b;
    }
  };
  using TermMap = std::map<MultiIndex, S, KeyLess>;

  explicit RealPolyT(int nvars) : n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("RealPolyT: variable count out of range");
  }

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& g, const S& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  static RealPolyT constant(int nvars, const S& c) {
    RealPolyT r(nvars);
    r.add_term(MultiIndex{}, c);
    return r;
  }

  static RealPolyT variable(int nvars, int j) {
    RealPolyT r(nvars);
    MultiIndex m;
    m.set(j, 1);
    r.add_term(m, Traits::one());
    return r;
  }

  RealPolyT& operator+=(const RealPolyT& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  RealPolyT& operator-=(const RealPolyT& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, Traits::zero() - c);
    return *this;
  }
  friend RealPolyT operator+(RealPolyT a, const RealPolyT& b) { return a += b; }
  friend RealPolyT operator-(RealPolyT a, const RealPolyT& b) { return a -= b; }

  friend RealPolyT operator*(const RealPolyT& a, const RealPolyT& b) {
    RealPolyT r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }

  RealPolyT& scale(const S& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v = v * c;
    return *this;
  }
  friend RealPolyT operator*(RealPolyT a, const S& c) { return a.scale(c); }

  RealPolyT derivative(int j) const {
    RealPolyT r(n_);
    for (const auto& [k, c] : terms_) {
      int e = k[j];
      if (e == 0) continue;
      r.add_term(k.lowered(j), Traits::from_int(e) * c);
    }
    return r;
  }

  int degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
    return d;
  }

  std::map<int, RealPolyT> degree_slices() const {
    std::map<int, RealPolyT> r;
    for (const auto& [k, c] : terms_) {
      auto it = r.find(k.degree());
      if (it == r.end()) it = r.emplace(k.degree(), RealPolyT(n_)).first;
      it->second.add_term(k, c);
    }
    return r;
  }

  double eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
      throw std::invalid_argument("RealPolyT::eval: wrong point dimension");
    double s = 0.0;
    for (const auto& [k, c] : terms_) {
      double m = Traits::to_double(c);
      for (int j = 0; j < n_; ++j)
        for (int i = 0; i < k[j]; ++i) m *= x[static_cast<std::size_t>(j)];
      s += m;
    }
    return s;
  }

  RealPolyT<double> to_double_poly() const {
    RealPolyT<double> r(n_);
    for (const auto& [k, c] : terms_) r.add_term(k, Traits::to_double(c));
    return r;
  }

 private:
  int n_;
  TermMap terms_;
};

using RealPoly = RealPolyT<double>;
using RealRationalPoly = RealPolyT<Rational>;

}  // namespace mdirichlet
