#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

#include "weilgroid/error.hpp"

namespace weilgroid {

/// Exact rational scalar. All theorem checks compare with literal equality.
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts `7`, `-3`, `2/5`, `-1/2`.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw ParseError(0, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// The coefficient rings the Weil algebra is instantiated over: rationals for
/// concrete points, polynomials in the base coordinates for sections. Both are
/// Q-algebras; the linear solver only needs the Q-module structure.
template <class S>
concept Coefficient = std::regular<S> && requires(S a, const S& b, const Rational& q) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a * q } -> std::convertible_to<S>;
  { is_zero(b) } -> std::convertible_to<bool>;
};

}  // namespace weilgroid
