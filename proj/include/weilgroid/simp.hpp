#pragma once

#include <bit>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/linalg.hpp"
#include "weilgroid/weil.hpp"

namespace weilgroid {

/// A morphism D^m{S} -> D^n{T} of Simp given by n nilpotent components over
/// the domain. Construction validates it; the pullback e ↦ e∘f is
/// precomputed as a sparse matrix.
class SimpMorphism {
 public:
  SimpMorphism() : SimpMorphism(SimplicialSpace(), SimplicialSpace(), {}) {}

  SimpMorphism(SimplicialSpace domain, SimplicialSpace codomain, std::vector<Weil> components)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), components_(std::move(components)) {
    validate();
    build_pullback();
  }

  const SimplicialSpace& domain() const { return domain_; }
  const SimplicialSpace& codomain() const { return codomain_; }
  const std::vector<Weil>& components() const { return components_; }

  /// Rows indexed by the domain basis, columns by the codomain basis.
  Matrix matrix() const {
    Matrix m(domain_.dimension(), codomain_.dimension());
    for (std::size_t c = 0; c < columns_.size(); ++c)
      for (const auto& [r, q] : columns_[c]) m(r, c) = q;
    return m;
  }

  /// e ∘ f for e over the codomain.
  template <Coefficient S>
  WeilElement<S> pull(const WeilElement<S>& e) const {
    if (!(e.space() == codomain_))
      fail(ErrorKind::SpaceMismatch, "element over " + e.space().to_string() + " pulled along a map into " +
                                         codomain_.to_string());
    WeilElement<S> out(domain_);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const S& v = e[c];
      if (weilgroid::is_zero(v)) continue;
      for (const auto& [r, q] : columns_[c]) out[r] += v * q;
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (int i = 1; i <= domain_.generators(); ++i) out += (i > 1 ? "," : "") + std::string("d") + std::to_string(i);
    out += ") -> (";
    for (std::size_t j = 0; j < components_.size(); ++j) out += (j ? ", " : "") + weilgroid::to_string(components_[j]);
    return out + ")";
  }

  friend bool operator==(const SimpMorphism& a, const SimpMorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.components_ == b.components_;
  }

 private:
  void validate() const {
    if (components_.size() != static_cast<std::size_t>(codomain_.generators()))
      fail(ErrorKind::DimensionMismatch, "map into " + codomain_.to_string() + " needs " +
                                             std::to_string(codomain_.generators()) + " components, got " +
                                             std::to_string(components_.size()));
    for (std::size_t j = 0; j < components_.size(); ++j)
      if (!(components_[j].space() == domain_))
        fail(ErrorKind::DomainMismatch, "component " + std::to_string(j + 1) + " is not over " + domain_.to_string());
    for (std::size_t j = 0; j < components_.size(); ++j)
      if (!is_zero(components_[j].augmentation()))
        fail(ErrorKind::NonzeroConstant, "component " + std::to_string(j + 1) + " has constant term " +
                                             components_[j].augmentation().get_str());
    for (std::size_t j = 0; j < components_.size(); ++j)
      if (!(components_[j] * components_[j]).is_zero())
        fail(ErrorKind::NonNilpotentComponent, "component " + std::to_string(j + 1) + " = " +
                                                   weilgroid::to_string(components_[j]) + " does not square to 0");
    for (Mask p : codomain_.patterns()) {
      Weil prod = Weil::constant(domain_, Rational(1));
      for (int i : mask_indices(p)) prod *= components_[static_cast<std::size_t>(i - 1)];
      if (!prod.is_zero())
        fail(ErrorKind::PatternViolation, "relation " + monomial_name(p) + " = 0 of " + codomain_.to_string() +
                                              " fails: product is " + weilgroid::to_string(prod));
    }
  }

  void build_pullback() {
    const auto& basis = codomain_.basis();
    std::vector<Weil> image(basis.size());
    columns_.resize(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Mask mu = basis[c];
      if (mu == 0) {
        image[c] = Weil::constant(domain_, Rational(1));
      } else {
        int low = std::countr_zero(mu);
        Mask rest = mu & (mu - 1);
        image[c] = image[static_cast<std::size_t>(codomain_.index_of(rest))] * components_[static_cast<std::size_t>(low)];
      }
      for (std::size_t r = 0; r < image[c].coefficients().size(); ++r)
        if (!is_zero(image[c][r])) columns_[c].emplace_back(r, image[c][r]);
    }
  }

  SimplicialSpace domain_, codomain_;
  std::vector<Weil> components_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
};

/// Builds a morphism from component texts in d1..dm over the domain.
inline SimpMorphism morphism(const SimplicialSpace& domain, const SimplicialSpace& codomain,
                             const std::vector<std::string>& components) {
  std::vector<Weil> c;
  for (const auto& s : components) c.push_back(parse_weil(domain, s));
  return SimpMorphism(domain, codomain, std::move(c));
}

inline SimpMorphism identity(const SimplicialSpace& s) {
  std::vector<Weil> c;
  for (int i = 1; i <= s.generators(); ++i) c.push_back(Weil::generator(s, i));
  return SimpMorphism(s, s, std::move(c));
}

/// The map sending everything to the base point.
inline SimpMorphism zero_map(const SimplicialSpace& domain, const SimplicialSpace& codomain) {
  return SimpMorphism(domain, codomain, std::vector<Weil>(static_cast<std::size_t>(codomain.generators()), Weil(domain)));
}

inline SimpMorphism to_point(const SimplicialSpace& domain) { return zero_map(domain, SimplicialSpace::point()); }

/// g ∘ f for f: A → B, g: B → C.
inline SimpMorphism compose(const SimpMorphism& g, const SimpMorphism& f) {
  if (!(f.codomain() == g.domain()))
    fail(ErrorKind::DomainMismatch, "cannot compose: " + f.codomain().to_string() + " vs " + g.domain().to_string());
  std::vector<Weil> c;
  for (const auto& gj : g.components()) c.push_back(f.pull(gj));
  return SimpMorphism(f.domain(), g.codomain(), std::move(c));
}

/// σ acting on the generators of `space`: component j is d_{σ(j)} (1-based).
inline SimpMorphism permutation(const SimplicialSpace& space, const std::vector<int>& sigma) {
  const int n = space.generators();
  if (static_cast<int>(sigma.size()) != n) fail(ErrorKind::DimensionMismatch, "permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s - 1)]) fail(ErrorKind::BadSlot, "not a permutation");
    seen[static_cast<std::size_t>(s - 1)] = true;
  }
  std::vector<Weil> c;
  for (int s : sigma) c.push_back(Weil::generator(space, s));
  return SimpMorphism(space, space, std::move(c));
}

inline SimpMorphism permutation(int n, const std::vector<int>& sigma) {
  return permutation(SimplicialSpace::cube(n), sigma);
}

/// Embeds an element over `from` into a space whose first (or trailing)
/// generators carry the same names; used for product maps.
inline Weil shift_into(const Weil& e, const SimplicialSpace& to, int offset) {
  Weil out(to);
  for (const auto& [m, c] : e.terms()) {
    int k = to.index_of(m << offset);
    if (k >= 0) out[static_cast<std::size_t>(k)] += c;
  }
  return out;
}

/// f × g : A × C → B × E.
inline SimpMorphism product_map(const SimpMorphism& f, const SimpMorphism& g) {
  SimplicialSpace dom = product(f.domain(), g.domain());
  SimplicialSpace cod = product(f.codomain(), g.codomain());
  std::vector<Weil> c;
  for (const auto& x : f.components()) c.push_back(shift_into(x, dom, 0));
  for (const auto& y : g.components()) c.push_back(shift_into(y, dom, f.domain().generators()));
  return SimpMorphism(dom, cod, std::move(c));
}

/// Structural maps of a × b.
struct ProductMaps {
  SimplicialSpace space;
  SimpMorphism p1, p2, i1, i2;
};

inline ProductMaps product_with_maps(const SimplicialSpace& a, const SimplicialSpace& b) {
  SimplicialSpace ab = product(a, b);
  const int m = a.generators(), n = b.generators();
  std::vector<Weil> p1, p2, i1, i2;
  for (int i = 1; i <= m; ++i) p1.push_back(Weil::generator(ab, i));
  for (int j = 1; j <= n; ++j) p2.push_back(Weil::generator(ab, m + j));
  for (int i = 1; i <= m; ++i) i1.push_back(Weil::generator(a, i));
  for (int j = 1; j <= n; ++j) i1.push_back(Weil(a));
  for (int i = 1; i <= m; ++i) i2.push_back(Weil(b));
  for (int j = 1; j <= n; ++j) i2.push_back(Weil::generator(b, j));
  return {ab, SimpMorphism(ab, a, p1), SimpMorphism(ab, b, p2), SimpMorphism(a, ab, i1), SimpMorphism(b, ab, i2)};
}

/// Generator d_i ↦ d_i between presentations with the same generator count.
inline SimpMorphism identity_on_generators(const SimplicialSpace& from, const SimplicialSpace& to) {
  if (from.generators() != to.generators()) fail(ErrorKind::DimensionMismatch, "generator counts differ");
  std::vector<Weil> c;
  for (int i = 1; i <= from.generators(); ++i) c.push_back(Weil::generator(from, i));
  return SimpMorphism(from, to, std::move(c));
}

/// Structural maps of a ⊕ b: the injections and the inclusion into a × b.
struct OplusMaps {
  SimplicialSpace space;
  SimpMorphism i1, i2, to_product;
};

inline OplusMaps oplus_with_maps(const SimplicialSpace& a, const SimplicialSpace& b) {
  SimplicialSpace s = oplus(a, b);
  const int m = a.generators(), n = b.generators();
  std::vector<Weil> i1, i2;
  for (int i = 1; i <= m; ++i) i1.push_back(Weil::generator(a, i));
  for (int j = 1; j <= n; ++j) i1.push_back(Weil(a));
  for (int i = 1; i <= m; ++i) i2.push_back(Weil(b));
  for (int j = 1; j <= n; ++j) i2.push_back(Weil::generator(b, j));
  return {s, SimpMorphism(a, s, i1), SimpMorphism(b, s, i2), identity_on_generators(s, product(a, b))};
}

/// Parses `(d1,d2) -> (d2, d1*d2)`; the left tuple names the domain
/// generators in order (any identifiers), `d -> (d,d)` is accepted too.
inline SimpMorphism parse_morphism(const SimplicialSpace& domain, const SimplicialSpace& codomain,
                                   std::string_view text) {
  std::size_t arrow = text.find("->");
  if (arrow == std::string_view::npos) throw ParseError(0, "expected '->'");

  auto split_tuple = [](std::string_view s, std::size_t offset) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    if (a < b && s[a] == '(') {
      if (s[b - 1] != ')') throw ParseError(offset + b - 1, "expected ')'");
      ++a;
      --b;
      int depth = 0;
      std::size_t start = a;
      for (std::size_t i = a; i < b; ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
          parts.emplace_back(s.substr(start, i - start), offset + start);
          start = i + 1;
        }
      }
      std::string_view last = s.substr(start, b - start);
      bool blank = last.find_first_not_of(" \t") == std::string_view::npos;
      if (!(parts.empty() && blank)) parts.emplace_back(last, offset + start);
    } else {
      parts.emplace_back(s.substr(a, b - a), offset + a);
    }
    return parts;
  };

  auto lhs = split_tuple(text.substr(0, arrow), 0);
  auto rhs = split_tuple(text.substr(arrow + 2), arrow + 2);
  if (lhs.size() != static_cast<std::size_t>(domain.generators()))
    throw ParseError(0, "domain " + domain.to_string() + " has " + std::to_string(domain.generators()) +
                            " generators but " + std::to_string(lhs.size()) + " names were given");
  std::vector<std::string> names;
  for (auto [name, at] : lhs) {
    std::string n(name);
    n.erase(0, n.find_first_not_of(" \t"));
    n.erase(n.find_last_not_of(" \t") + 1);
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) throw ParseError(at, "expected variable name");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c))) throw ParseError(at, "bad variable name '" + n + "'");
    names.push_back(n);
  }
  if (rhs.size() != static_cast<std::size_t>(codomain.generators()))
    throw ParseError(arrow + 2, "codomain " + codomain.to_string() + " needs " +
                                    std::to_string(codomain.generators()) + " components, got " +
                                    std::to_string(rhs.size()));
  VariableResolver resolve = [names](std::string_view v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == v) return i;
    return std::nullopt;
  };
  std::vector<Weil> comps;
  for (auto [expr, at] : rhs) {
    auto parsed = parse_polynomial(expr, names.size(), resolve, at);
    comps.push_back(weil_from_parsed(domain, parsed));
  }
  return SimpMorphism(domain, codomain, std::move(comps));
}

}  // namespace weilgroid
