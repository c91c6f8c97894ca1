#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mdirichlet {

/// Maximum number of (complex or real) variables supported by the dense
/// exponent storage. Desk-scale runs use n <= 4.
inline constexpr int kMaxVars = 4;

/// Exponent vector of a monomial in up to kMaxVars variables. Entries beyond
/// the active variable count must stay zero so that comparisons and hashing
/// are independent of the ambient dimension.
struct MultiIndex {
  std::array<std::uint16_t, kMaxVars> e{};

  MultiIndex() = default;

  /// Builds an index from an initializer list, e.g. MultiIndex({2,0,1}).
  MultiIndex(std::initializer_list<int> vals) {
    if (vals.size() > static_cast<std::size_t>(kMaxVars))
      throw std::invalid_argument("MultiIndex: too many variables");
    int j = 0;
    for (int v : vals) {
      if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
      e[j++] = static_cast<std::uint16_t>(v);
    }
  }

  int operator[](int j) const { return e[static_cast<std::size_t>(j)]; }

  void set(int j, int v) {
    if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(v);
  }

  int degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  bool is_zero() const { return degree() == 0; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.e <=> b.e;  // lexicographic
  }

  MultiIndex raised(int j, int by = 1) const {
    MultiIndex r = *this;
    r.e[static_cast<std::size_t>(j)] =
        static_cast<std::uint16_t>(r.e[static_cast<std::size_t>(j)] + by);
    return r;
  }

  /// Lowered index; valid only when the j-th exponent is at least `by`.
  MultiIndex lowered(int j, int by = 1) const {
    MultiIndex r = *this;
    int cur = r[j];
    if (cur < by) throw std::logic_error("MultiIndex: exponent underflow");
    r.e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(cur - by);
    return r;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r;
    for (int j = 0; j < kMaxVars; ++j)
      r.e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(
          a.e[static_cast<std::size_t>(j)] + b.e[static_cast<std::size_t>(j)]);
    return r;
  }

  std::string to_string(int nvars) const {
    std::string s;
    for (int j = 0; j < nvars; ++j) {
      if (j) s += ',';
      s += std::to_string((*this)[j]);
    }
    return s;
  }
};

/// Signed difference vector alpha - beta, used to bucket monomials whose
/// sphere integrals against each other can be nonzero.
struct IndexDiff {
  std::array<int, kMaxVars> d{};
  friend bool operator==(const IndexDiff&, const IndexDiff&) = default;
  friend auto operator<=>(const IndexDiff&, const IndexDiff&) = default;
};

inline IndexDiff index_diff(const MultiIndex& a, const MultiIndex& b) {
  IndexDiff r;
  for (int j = 0; j < kMaxVars; ++j)
    r.d[static_cast<std::size_t>(j)] = a[j] - b[j];
  return r;
}

}  // namespace mdirichlet
