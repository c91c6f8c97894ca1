#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace mdirichlet {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact complex number with rational real and imaginary parts. Backs the
/// exact-arithmetic path of the polynomial engine.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational den = b.re * b.re + b.im * b.im;
    if (den == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational conj() const { return {re, -im}; }

  Complex to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  std::string to_string() const {
    return re.str() + (im >= 0 ? "+" : "") + im.str() + "i";
  }
};

/// Uniform scalar interface for the two coefficient backends.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static bool is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
  static Complex to_complex(const Complex& c) { return c; }
  static double abs(const Complex& c) { return std::abs(c); }
};

template <>
struct ScalarTraits<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1)}; }
  static GaussianRational from_int(long long v) { return {Rational(v)}; }
  static GaussianRational conj(const GaussianRational& c) { return c.conj(); }
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  static Complex to_complex(const GaussianRational& c) { return c.to_complex(); }
  static double abs(const GaussianRational& c) { return std::abs(c.to_complex()); }
};

/// Scalar backend for real-coefficient polynomials.
template <class S>
struct RealScalarTraits;

template <>
struct RealScalarTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long long v) { return static_cast<double>(v); }
  static bool is_zero(double c) { return c == 0.0; }
  static double to_double(double c) { return c; }
};

template <>
struct RealScalarTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static Rational from_int(long long v) { return v; }
  static bool is_zero(const Rational& c) { return c == 0; }
  static double to_double(const Rational& c) { return static_cast<double>(c); }
};

}  // namespace mdirichlet
