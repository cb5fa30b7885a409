#pragma once

#include "ricsol/rational.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <type_traits>

namespace ricsol {

/// Traits of the two coefficient fields the library runs over.
///
/// Everything numeric is templated on K; K = double is the tolerance-based
/// mode, K = Rational the exact mode. Mixing the two in one expression does
/// not compile, which is the intended failure mode.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";

  static double default_tolerance() { return 1e-9; }

  static double from_rational(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_ratio(const Rational& r) { return r.convert_to<double>(); }
  static double to_double(double x) { return x; }

  /// Shortest decimal string that round-trips to the same double.
  static std::string to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
  }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";

  static Rational default_tolerance() { return Rational(0); }

  static Rational from_rational(long long num, long long den) {
    return Rational(num, den);
  }
  static Rational from_ratio(const Rational& r) { return r; }
  static double to_double(const Rational& r) { return r.convert_to<double>(); }

  static std::string to_string(const Rational& r) { return rational_to_string(r); }
};

inline double field_abs(double x) { return std::fabs(x); }
// Plain overloads (not a template) so Boost expression templates coming out
// of compound arithmetic convert to Rational at the call site.
inline Rational field_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Convenience literal: frac<K>(1, 2) is one half in either field.
template <class K>
inline K frac(long long num, long long den = 1) {
  return FieldTraits<K>::from_rational(num, den);
}

} // namespace ricsol
