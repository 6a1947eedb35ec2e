#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/expr_parser.hpp"
#include "weilgroid/polynomial.hpp"
#include "weilgroid/rational.hpp"

namespace weilgroid {

/// Square-free monomial d_{i1}...d_{ik}, stored as a bitmask (bit i-1 for d_i).
using Mask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

inline std::string monomial_name(Mask m, const std::string& var = "d") {
  if (m == 0) return "1";
  std::string out;
  for (int i : mask_indices(m)) {
    if (!out.empty()) out += "*";
    out += var + std::to_string(i);
  }
  return out;
}

/// Graded, then lexicographic on the sorted index lists.
inline bool basis_less(Mask a, Mask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return mask_indices(a) < mask_indices(b);
}

/// The presentation D^m{S}. Presentations are interned: equal (m, S) share
/// one immutable record, so equality is a pointer comparison.
class SimplicialSpace {
 public:
  SimplicialSpace() : SimplicialSpace(0, std::vector<Mask>{}) {}

  SimplicialSpace(int generators, std::vector<Mask> patterns) : data_(intern(generators, std::move(patterns))) {}

  /// Patterns given as 1-based index lists.
  static SimplicialSpace from_index_sets(int generators, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> masks;
    for (const auto& s : sets) {
      Mask m = 0;
      for (int i : s) {
        if (i < 1 || i > generators)
          fail(ErrorKind::Parse, "pattern index " + std::to_string(i) + " out of range 1.." +
                                     std::to_string(generators));
        m |= Mask{1} << (i - 1);
      }
      masks.push_back(m);
    }
    return SimplicialSpace(generators, std::move(masks));
  }

  static SimplicialSpace point() { return SimplicialSpace(); }
  static SimplicialSpace D() { return SimplicialSpace(1, {}); }
  static SimplicialSpace cube(int m) { return SimplicialSpace(m, {}); }

  /// D(n): n generators, every pairwise product vanishes.
  static SimplicialSpace first_order(int n) {
    std::vector<Mask> p;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) p.push_back((Mask{1} << i) | (Mask{1} << j));
    return SimplicialSpace(n, std::move(p));
  }

  int generators() const { return data_->m; }
  const std::vector<Mask>& patterns() const { return data_->patterns; }
  const std::vector<Mask>& basis() const { return data_->basis; }
  std::size_t dimension() const { return data_->basis.size(); }

  bool admissible(Mask m) const {
    return m < data_->index.size() && data_->index[m] >= 0;
  }

  /// Position of an admissible monomial in `basis()`, or -1.
  int index_of(Mask m) const { return m < data_->index.size() ? data_->index[m] : -1; }

  std::string to_string() const {
    const int m = data_->m;
    if (m == 0) return "1";
    if (data_->patterns.empty()) return m == 1 ? "D" : "D^" + std::to_string(m);
    if (m >= 2 && *this == first_order(m)) return "D(" + std::to_string(m) + ")";
    std::string out = "D^" + std::to_string(m) + "{";
    bool first = true;
    for (Mask p : data_->patterns) {
      if (!first) out += ",";
      first = false;
      bool dotted = m > 9;
      bool lead = true;
      for (int i : mask_indices(p)) {
        if (dotted && !lead) out += ".";
        lead = false;
        out += std::to_string(i);
      }
    }
    return out + "}";
  }

  friend bool operator==(const SimplicialSpace& a, const SimplicialSpace& b) { return a.data_ == b.data_; }

 private:
  struct Data {
    int m = 0;
    std::vector<Mask> patterns;
    std::vector<Mask> basis;
    std::vector<int> index;
  };

  static std::shared_ptr<const Data> intern(int m, std::vector<Mask> raw) {
    if (m < 0 || m > kMaxGenerators)
      fail(ErrorKind::DimensionMismatch, "spaces support 0.." + std::to_string(kMaxGenerators) + " generators");
    const Mask full = m == 32 ? ~Mask{0} : ((Mask{1} << m) - 1);
    for (Mask p : raw) {
      if (std::popcount(p) < 2) fail(ErrorKind::Parse, "patterns need at least two indices");
      if (p & ~full) fail(ErrorKind::Parse, "pattern index out of range");
    }
    // Minimal antichain: drop duplicates and any pattern containing another.
    std::sort(raw.begin(), raw.end(), basis_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Mask> anti;
    for (Mask p : raw) {
      bool redundant = std::any_of(anti.begin(), anti.end(), [p](Mask q) { return (q & p) == q; });
      if (!redundant) anti.push_back(p);
    }
    std::sort(anti.begin(), anti.end(), basis_less);

    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<Mask>>, std::shared_ptr<const Data>> table;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(m, anti);
    if (auto it = table.find(key); it != table.end()) return it->second;

    auto d = std::make_shared<Data>();
    d->m = m;
    d->patterns = anti;
    d->index.assign(std::size_t{1} << m, -1);
    for (Mask s = 0; s <= full; ++s) {
      bool ok = std::none_of(anti.begin(), anti.end(), [s](Mask q) { return (q & s) == q; });
      if (ok) d->basis.push_back(s);
      if (s == full) break;
    }
    std::sort(d->basis.begin(), d->basis.end(), basis_less);
    for (std::size_t i = 0; i < d->basis.size(); ++i) d->index[d->basis[i]] = static_cast<int>(i);
    table.emplace(std::move(key), d);
    return d;
  }

  std::shared_ptr<const Data> data_;
};

/// a ⊕ b: b's generators are shifted past a's and every cross product vanishes.
inline SimplicialSpace oplus(const SimplicialSpace& a, const SimplicialSpace& b) {
  const int m = a.generators(), n = b.generators();
  std::vector<Mask> p = a.patterns();
  for (Mask q : b.patterns()) p.push_back(q << m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.push_back((Mask{1} << i) | (Mask{1} << (m + j)));
  return SimplicialSpace(m + n, std::move(p));
}

/// a × b: the two blocks carry their own relations and nothing between them.
inline SimplicialSpace product(const SimplicialSpace& a, const SimplicialSpace& b) {
  std::vector<Mask> p = a.patterns();
  for (Mask q : b.patterns()) p.push_back(q << a.generators());
  return SimplicialSpace(a.generators() + b.generators(), std::move(p));
}

inline SimplicialSpace product(const std::vector<SimplicialSpace>& factors) {
  SimplicialSpace r;
  for (const auto& f : factors) r = product(r, f);
  return r;
}

/// Accepts `1`, `D`, `D^n`, `D(n)`, `D^n{12,13}` and `D^12{1.10,2.11}`.
inline SimplicialSpace parse_space(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> int {
    skip();
    std::size_t start = pos;
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) throw ParseError(start, "number too large");
      ++pos;
    }
    if (pos == start) throw ParseError(pos, "expected integer");
    return v;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  };

  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError(pos, "trailing input after '1'");
    return SimplicialSpace::point();
  }
  expect('D');
  skip();
  SimplicialSpace result = SimplicialSpace::D();
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    int n = integer();
    expect(')');
    if (n < 1) throw ParseError(pos, "D(n) needs n >= 1");
    result = SimplicialSpace::first_order(n);
  } else if (pos < text.size() && text[pos] == '^') {
    ++pos;
    std::size_t at = pos;
    int m = integer();
    if (m > kMaxGenerators) throw ParseError(at, "too many generators");
    skip();
    std::vector<std::vector<int>> sets;
    if (pos < text.size() && text[pos] == '{') {
      ++pos;
      skip();
      while (true) {
        skip();
        std::size_t start = pos;
        std::string token;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
          token += text[pos++];
        }
        if (token.empty()) throw ParseError(pos, "expected pattern");
        std::vector<int> set;
        if (token.find('.') != std::string::npos) {
          std::size_t s = 0;
          while (s <= token.size()) {
            std::size_t e = token.find('.', s);
            if (e == std::string::npos) e = token.size();
            if (e == s) throw ParseError(start + s, "empty index in pattern");
            set.push_back(std::stoi(token.substr(s, e - s)));
            s = e + 1;
          }
        } else {
          for (char c : token) set.push_back(c - '0');
        }
        for (int i : set)
          if (i < 1 || i > m) throw ParseError(start, "pattern index " + std::to_string(i) + " out of range");
        if (set.size() < 2) throw ParseError(start, "pattern needs at least two indices");
        sets.push_back(std::move(set));
        skip();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        expect('}');
        break;
      }
    }
    result = SimplicialSpace::from_index_sets(m, sets);
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, "trailing input");
  return result;
}

/// An element of W(space) over the coefficient ring S, stored densely in the
/// basis order of the space.
template <Coefficient S>
class WeilElement {
 public:
  using scalar_type = S;

  WeilElement() : WeilElement(SimplicialSpace()) {}
  explicit WeilElement(SimplicialSpace space) : space_(std::move(space)), c_(space_.dimension()) {}

  WeilElement(SimplicialSpace space, std::vector<S> coefficients)
      : space_(std::move(space)), c_(std::move(coefficients)) {
    if (c_.size() != space_.dimension())
      fail(ErrorKind::DimensionMismatch, "coefficient vector length " + std::to_string(c_.size()) +
                                             " does not match dim W(" + space_.to_string() + ")");
  }

  static WeilElement constant(const SimplicialSpace& space, const S& value) {
    WeilElement e(space);
    e.c_[0] = value;
    return e;
  }

  /// The generator d_i, 1-based.
  static WeilElement generator(const SimplicialSpace& space, int i) {
    if (i < 1 || i > space.generators())
      fail(ErrorKind::BadSlot, "generator d" + std::to_string(i) + " not in " + space.to_string());
    return monomial(space, Mask{1} << (i - 1), S(Rational(1)));
  }

  /// c times the given monomial; zero when the monomial is not admissible.
  static WeilElement monomial(const SimplicialSpace& space, Mask m, const S& c) {
    WeilElement e(space);
    int k = space.index_of(m);
    if (k >= 0) e.c_[k] = c;
    return e;
  }

  const SimplicialSpace& space() const { return space_; }
  const std::vector<S>& coefficients() const { return c_; }
  std::vector<S>& coefficients() { return c_; }
  const S& operator[](std::size_t k) const { return c_[k]; }
  S& operator[](std::size_t k) { return c_[k]; }

  S coefficient(Mask m) const {
    int k = space_.index_of(m);
    return k < 0 ? S() : c_[k];
  }

  const S& augmentation() const { return c_[0]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const S& s) { return weilgroid::is_zero(s); });
  }

  bool is_constant() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!weilgroid::is_zero(c_[k])) return false;
    return true;
  }

  /// Monomial/coefficient pairs with nonzero coefficient, in basis order.
  std::vector<std::pair<Mask, S>> terms() const {
    std::vector<std::pair<Mask, S>> out;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!weilgroid::is_zero(c_[k])) out.emplace_back(space_.basis()[k], c_[k]);
    return out;
  }

  WeilElement& operator+=(const WeilElement& o) {
    same_space(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  WeilElement& operator-=(const WeilElement& o) {
    same_space(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend WeilElement operator+(WeilElement a, const WeilElement& b) { return a += b; }
  friend WeilElement operator-(WeilElement a, const WeilElement& b) { return a -= b; }
  friend WeilElement operator-(WeilElement a) {
    for (auto& s : a.c_) s = -s;
    return a;
  }

  WeilElement scaled(const Rational& q) const {
    WeilElement r(space_);
    if (weilgroid::is_zero(q)) return r;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!weilgroid::is_zero(c_[k])) r.c_[k] = c_[k] * q;
    return r;
  }

  WeilElement scaled(const S& s) const requires(!std::is_same_v<S, Rational>) {
    WeilElement r(space_);
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!weilgroid::is_zero(c_[k])) r.c_[k] = c_[k] * s;
    return r;
  }

  friend WeilElement operator*(const WeilElement& a, const WeilElement& b) {
    a.same_space(b);
    const auto& basis = a.space_.basis();
    WeilElement r(a.space_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (weilgroid::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (weilgroid::is_zero(b.c_[j])) continue;
        Mask x = basis[i], y = basis[j];
        if (x & y) continue;
        int k = a.space_.index_of(x | y);
        if (k < 0) continue;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  WeilElement& operator*=(const WeilElement& o) { return *this = *this * o; }

  friend bool operator==(const WeilElement& a, const WeilElement& b) {
    return a.space_ == b.space_ && a.c_ == b.c_;
  }

  /// Same coefficients, reinterpreted over a space with the same basis
  /// (e.g. the bracketing of a product of three factors).
  WeilElement rebased(const SimplicialSpace& other) const {
    if (other == space_) return *this;
    if (other.basis() != space_.basis())
      fail(ErrorKind::SpaceMismatch, "cannot rebase " + space_.to_string() + " onto " + other.to_string());
    return WeilElement(other, c_);
  }

  void same_space(const WeilElement& o) const {
    if (!(space_ == o.space_))
      fail(ErrorKind::MixedSpace, "operands live in " + space_.to_string() + " and " + o.space_.to_string());
  }

 private:
  SimplicialSpace space_;
  std::vector<S> c_;
};

using Weil = WeilElement<Rational>;
using PolyWeil = WeilElement<Polynomial>;

template <Coefficient S>
std::string coefficient_string(const S& s) {
  if constexpr (std::is_same_v<S, Rational>) {
    return s.get_str();
  } else {
    return s.to_string();
  }
}

/// Canonical text such as `3 + 2*d1 - 1/2*d1*d2`; polynomial coefficients are
/// parenthesized.
template <Coefficient S>
std::string to_string(const WeilElement<S>& e, const std::string& var = "d") {
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    std::string cs = coefficient_string(c);
    std::string mono = monomial_name(m, var);
    bool neg = false;
    if constexpr (std::is_same_v<S, Rational>) {
      neg = sgn(c) < 0;
      if (neg) cs = Rational(-c).get_str();
    } else {
      if (c.terms().size() > 1) cs = "(" + cs + ")";
    }
    std::string piece = m == 0 ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty()) {
      out = (neg ? "-" : "") + piece;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

/// Reduces a parsed polynomial in d1..dm into W(space): squares and pattern
/// monomials vanish.
inline Weil weil_from_parsed(const SimplicialSpace& space, const ParsedPolynomial& p) {
  Weil e(space);
  for (const auto& [exps, c] : p.terms) {
    Mask m = 0;
    bool vanishes = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] >= 2) vanishes = true;
      if (exps[i] == 1) m |= Mask{1} << i;
    }
    if (vanishes) continue;
    int k = space.index_of(m);
    if (k >= 0) e[k] += c;
  }
  return e;
}

inline Weil parse_weil(const SimplicialSpace& space, std::string_view text, std::size_t offset = 0) {
  auto parsed = parse_polynomial(text, static_cast<std::size_t>(space.generators()),
                                 indexed_variables("d", static_cast<std::size_t>(space.generators())), offset);
  return weil_from_parsed(space, parsed);
}

/// Parses a polynomial in m1..mN.
inline Polynomial parse_base_polynomial(std::string_view text, int dim, std::size_t offset = 0) {
  if (dim < 0 || dim > Polynomial::kMaxVariables)
    fail(ErrorKind::DimensionMismatch, "base dimension must be 0..4");
  auto parsed = parse_polynomial(text, static_cast<std::size_t>(dim),
                                 indexed_variables("m", static_cast<std::size_t>(dim)), offset);
  Polynomial p;
  for (const auto& [exps, c] : parsed.terms) {
    Polynomial::Exponents e{};
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i];
    p += Polynomial::monomial(e, c);
  }
  return p;
}

/// Ring map Q -> S applied coefficientwise.
inline PolyWeil to_poly(const Weil& e) {
  std::vector<Polynomial> c;
  c.reserve(e.coefficients().size());
  for (const auto& q : e.coefficients()) c.emplace_back(q);
  return PolyWeil(e.space(), std::move(c));
}

}  // namespace weilgroid
