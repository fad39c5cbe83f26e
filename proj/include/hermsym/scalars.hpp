#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermsym {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using CD = std::complex<double>;

/// Gaussian rational: exact complex scalar with rational real and imaginary parts.
struct GQ {
  Rat re{0}, im{0};

  GQ() = default;
  GQ(long r) : re(r) {}
  GQ(Rat r) : re(std::move(r)) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GQ operator/(const GQ& a, const GQ& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GQ division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GQ& operator+=(const GQ& b) { *this = *this + b; return *this; }
  GQ& operator-=(const GQ& b) { *this = *this - b; return *this; }
  GQ& operator*=(const GQ& b) { *this = *this * b; return *this; }
  GQ& operator/=(const GQ& b) { *this = *this / b; return *this; }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
};

inline GQ conj(const GQ& a) { return {a.re, -a.im}; }
inline CD to_cd(const GQ& a) {
  return {static_cast<double>(a.re), static_cast<double>(a.im)};
}
inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const GQ& a) {
  if (a.im == 0) return a.re.str();
  return a.re.str() + (a.im > 0 ? "+" : "") + a.im.str() + "i";
}

/// Per-scalar hooks used by the generic linear algebra and Jordan operations.
template <class S> struct ScalarOps;

template <> struct ScalarOps<GQ> {
  static GQ zero() { return GQ(); }
  static GQ one() { return GQ(1); }
  static GQ from_int(long v) { return GQ(v); }
  static GQ conj(const GQ& a) { return hermsym::conj(a); }
  static bool is_zero(const GQ& a) { return a.is_zero(); }
  /// Pivot preference; exact scalars only need a nonzero test.
  static double mag(const GQ& a) { return a.is_zero() ? 0.0 : 1.0; }
  static constexpr bool exact = true;
};

template <> struct ScalarOps<CD> {
  static CD zero() { return {0.0, 0.0}; }
  static CD one() { return {1.0, 0.0}; }
  static CD from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static CD conj(const CD& a) { return std::conj(a); }
  static bool is_zero(const CD& a) { return a == CD{0.0, 0.0}; }
  static double mag(const CD& a) { return std::abs(a); }
  static constexpr bool exact = false;
};

}  // namespace hermsym
