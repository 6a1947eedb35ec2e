#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/rational.hpp"

namespace weilgroid {

/// A polynomial as read from text: exponent vector -> coefficient, with no
/// ring relations applied. Callers reduce it into the ring they need.
struct ParsedPolynomial {
  std::size_t variables = 0;
  std::map<std::vector<unsigned>, Rational> terms;
};

/// Maps an identifier such as `d2` or `m1` to a 0-based variable index.
using VariableResolver = std::function<std::optional<std::size_t>(std::string_view)>;

/// Resolver for `<prefix><k>` names with 1 <= k <= count.
inline VariableResolver indexed_variables(std::string prefix, std::size_t count) {
  return [prefix = std::move(prefix), count](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::size_t k = 0;
    for (char c : name.substr(prefix.size())) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > 1000) return std::nullopt;
    }
    if (k < 1 || k > count) return std::nullopt;
    return k - 1;
  };
}

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t variables, VariableResolver resolve, std::size_t offset)
      : text_(text), n_(variables), resolve_(std::move(resolve)), offset_(offset) {}

  ParsedPolynomial parse() {
    auto result = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    ParsedPolynomial out;
    out.variables = n_;
    for (auto& [k, v] : result)
      if (!is_zero(v)) out.terms.emplace(k, v);
    return out;
  }

 private:
  using Poly = std::map<std::vector<unsigned>, Rational>;

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const Rational& c) const {
    Poly p;
    if (!is_zero(c)) p.emplace(std::vector<unsigned>(n_, 0), c);
    return p;
  }

  static Poly add(Poly a, const Poly& b, int sign) {
    for (const auto& [k, v] : b) {
      auto& slot = a[k];
      if (sign > 0) slot += v; else slot -= v;
      if (is_zero(slot)) a.erase(k);
    }
    return a;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [ka, va] : a) {
      for (const auto& [kb, vb] : b) {
        std::vector<unsigned> k(n_);
        for (std::size_t i = 0; i < n_; ++i) k[i] = ka[i] + kb[i];
        auto& slot = r[k];
        slot += va * vb;
        if (is_zero(slot)) r.erase(k);
      }
    }
    return r;
  }

  Poly power(const Poly& base, unsigned e) const {
    Poly r = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Poly expr() {
    skip_ws();
    int sign = 1;
    if (accept('-')) sign = -1; else accept('+');
    Poly acc = add(Poly{}, term(), sign);
    while (true) {
      if (accept('+')) acc = add(acc, term(), 1);
      else if (accept('-')) acc = add(acc, term(), -1);
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Rational d = number();
        if (is_zero(d)) { pos_ = at; error("division by zero"); }
        acc = mul(acc, constant(Rational(1) / d));
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_ws();
    if (accept('-')) {
      Poly f = factor();
      return add(Poly{}, f, -1);
    }
    Poly base;
    if (accept('(')) {
      base = expr();
      if (!accept(')')) error("expected ')'");
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      base = constant(number());
    } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = resolve_(name);
      if (!idx || *idx >= n_) {
        pos_ = start;
        error("unknown variable '" + std::string(name) + "'");
      }
      std::vector<unsigned> k(n_, 0);
      k[*idx] = 1;
      base.emplace(k, Rational(1));
    } else {
      error(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                : "unexpected end of input");
    }
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      unsigned e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 4096) error("exponent too large");
        ++pos_;
      }
      if (pos_ == start) error("expected exponent");
      base = power(base, e);
    }
    return base;
  }

  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) error("expected number");
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t n_;
  VariableResolver resolve_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums of products of rational literals and variables, with `^` for
/// non-negative integer powers and `/` only by numeric literals.
inline ParsedPolynomial parse_polynomial(std::string_view text, std::size_t variables,
                                         const VariableResolver& resolve, std::size_t offset = 0) {
  return detail::ExprParser(text, variables, resolve, offset).parse();
}

}  // namespace weilgroid
