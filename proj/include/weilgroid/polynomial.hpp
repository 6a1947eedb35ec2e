#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/rational.hpp"

namespace weilgroid {

/// Sparse multivariate polynomial over the rationals in at most four
/// variables m1..m4. Exponents are packed 16 bits per variable so that a
/// monomial is a single integer and products are additions of keys.
class Polynomial {
 public:
  static constexpr int kMaxVariables = 4;
  static constexpr unsigned kMaxExponent = 0xFFFF;
  using Key = std::uint64_t;
  using Exponents = std::array<unsigned, kMaxVariables>;
  using Term = std::pair<Key, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: scalars embed implicitly
    if (!weilgroid::is_zero(c)) terms_.emplace_back(0, c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(int i) {
    check_variable(i);
    Exponents e{};
    e[i] = 1;
    return monomial(e, Rational(1));
  }

  static Polynomial monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (!weilgroid::is_zero(c)) p.terms_.emplace_back(pack(e), c);
    return p;
  }

  static Key pack(const Exponents& e) {
    Key k = 0;
    for (int i = kMaxVariables - 1; i >= 0; --i) {
      if (e[i] > kMaxExponent) fail(ErrorKind::DegreeOverflow, "exponent exceeds 65535");
      k = (k << 16) | e[i];
    }
    return k;
  }

  static Exponents unpack(Key k) {
    Exponents e{};
    for (int i = 0; i < kMaxVariables; ++i) {
      e[i] = static_cast<unsigned>(k & 0xFFFF);
      k >>= 16;
    }
    return e;
  }

  static unsigned degree_of(Key k) {
    unsigned d = 0;
    for (unsigned e : unpack(k)) d += e;
    return d;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.front().first == 0) return terms_.front().second;
    return Rational(0);
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, degree_of(k));
    return d;
  }

  int variables_used() const {
    int used = 0;
    for (const auto& [k, c] : terms_) {
      auto e = unpack(k);
      for (int i = 0; i < kMaxVariables; ++i)
        if (e[i] > 0) used = std::max(used, i + 1);
    }
    return used;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& q) {
    if (weilgroid::is_zero(q)) return {};
    Polynomial r = a;
    for (auto& t : r.terms_) t.second *= q;
    return r;
  }
  friend Polynomial operator*(const Rational& q, const Polynomial& a) { return a * q; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.constant_term();
    if (b.is_constant()) return a * b.constant_term();
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        check_no_carry(ka, kb);
        raw.emplace_back(ka + kb, ca * cb);
      }
    }
    return from_unsorted(std::move(raw));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Partial derivative with respect to variable i (0-based).
  Polynomial derivative(int i) const {
    check_variable(i);
    std::vector<Term> out;
    for (const auto& [k, c] : terms_) {
      auto e = unpack(k);
      if (e[i] == 0) continue;
      Rational coeff = c * e[i];
      e[i] -= 1;
      out.emplace_back(pack(e), coeff);
    }
    return from_unsorted(std::move(out));
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational sum(0);
    for (const auto& [k, c] : terms_) {
      auto e = unpack(k);
      Rational t = c;
      for (int i = 0; i < kMaxVariables; ++i) {
        if (e[i] == 0) continue;
        if (static_cast<std::size_t>(i) >= point.size())
          fail(ErrorKind::DimensionMismatch, "polynomial uses m" + std::to_string(i + 1) +
                                                 " but point has " + std::to_string(point.size()) +
                                                 " coordinates");
        Rational pw(1);
        for (unsigned j = 0; j < e[i]; ++j) pw *= point[i];
        t *= pw;
      }
      sum += t;
    }
    return sum;
  }

  std::string to_string(const std::string& var = "m") const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest degree first reads more naturally; keys sort by m4 first, so re-sort.
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      unsigned da = degree_of(a->first), db = degree_of(b->first);
      if (da != db) return da < db;
      return unpack(a->first) > unpack(b->first);
    });
    bool first = true;
    for (const Term* t : order) {
      Rational c = t->second;
      bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      auto e = unpack(t->first);
      for (int i = 0; i < kMaxVariables; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += c.get_str();
      } else if (c == 1) {
        out += mono;
      } else {
        out += c.get_str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  static void check_variable(int i) {
    if (i < 0 || i >= kMaxVariables)
      fail(ErrorKind::DimensionMismatch, "polynomials support at most 4 base coordinates");
  }

  static void check_no_carry(Key a, Key b) {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (((a >> (16 * i)) & 0xFFFF) + ((b >> (16 * i)) & 0xFFFF) > kMaxExponent)
        fail(ErrorKind::DegreeOverflow, "exponent exceeds 65535");
    }
  }

  static Polynomial from_unsorted(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Polynomial r;
    for (auto& t : raw) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second += t.second;
      } else {
        if (!r.terms_.empty() && weilgroid::is_zero(r.terms_.back().second)) r.terms_.pop_back();
        r.terms_.push_back(std::move(t));
      }
    }
    if (!r.terms_.empty() && weilgroid::is_zero(r.terms_.back().second)) r.terms_.pop_back();
    return r;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
        ++j;
      } else {
        Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
        if (!weilgroid::is_zero(c)) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace weilgroid
