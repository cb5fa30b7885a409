#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ricsol {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; always canonical (lowest terms, positive
/// denominator) by construction.
using Rational = boost::multiprecision::cpp_rational;

/// True if `s` is an integer or "p/q" literal with nonzero q.
inline bool is_rational_literal(std::string_view s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    return pos > start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  std::size_t den_start = i;
  if (!digits(i) || i != s.size()) return false;
  for (std::size_t j = den_start; j < s.size(); ++j)
    if (s[j] != '0') return true;
  return false; // zero denominator
}

inline std::optional<Rational> parse_rational(std::string_view s) {
  if (!is_rational_literal(s)) return std::nullopt;
  return Rational(std::string(s));
}

inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Exact square root when `r` is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

} // namespace ricsol
