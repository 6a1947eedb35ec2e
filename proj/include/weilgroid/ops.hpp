#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "weilgroid/catalog.hpp"
#include "weilgroid/error.hpp"
#include "weilgroid/limits.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/simp.hpp"

namespace weilgroid {

/// P × (catalog diagram), cached per (P, name).
inline const Diagram& parametrized_diagram(const SimplicialSpace& p, const std::string& name) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::string>, std::shared_ptr<const Diagram>> cache;
  auto key = std::make_pair(p.to_string(), name);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto built = std::make_shared<const Diagram>(parametrize(p, catalog_diagram(name)));
  std::lock_guard lock(mutex);
  return *cache.emplace(key, built).first->second;
}

/// id_P × (catalog map), cached per (P, name).
inline const SimpMorphism& lifted_map(const SimplicialSpace& p, const std::string& name) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::string>, std::shared_ptr<const SimpMorphism>> cache;
  auto key = std::make_pair(p.to_string(), name);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto built = std::make_shared<const SimpMorphism>(product_map(identity(p), std_map(name)));
  std::lock_guard lock(mutex);
  return *cache.emplace(key, built).first->second;
}

/// Generator `slot` scaled by a, the others fixed.
inline SimpMorphism slot_scaling_map(const SimplicialSpace& s, int slot, const Rational& a) {
  if (slot < 1 || slot > s.generators())
    fail(ErrorKind::BadSlot, "slot " + std::to_string(slot) + " outside 1.." + std::to_string(s.generators()));
  std::vector<Weil> c;
  for (int i = 1; i <= s.generators(); ++i) {
    Weil g = Weil::generator(s, i);
    c.push_back(i == slot ? g.scaled(a) : g);
  }
  return SimpMorphism(s, s, std::move(c));
}

namespace detail {

template <Coefficient S>
void require_space(const Element<S>& x, const SimplicialSpace& s, const char* what) {
  if (!(x.space() == s))
    fail(ErrorKind::SpaceMismatch, std::string(what) + " expects an element over " + s.to_string() + ", got " +
                                       x.space().to_string());
}

template <Coefficient S>
void require_restrictions_agree(const SimpMorphism& r, const Element<S>& y, const Element<S>& x, const char* what) {
  require_same_model(x, y);
  if (!(apply(r, x) == apply(r, y)))
    fail(ErrorKind::Incompatible, std::string(what) + ": arguments differ on " + r.domain().to_string());
}

}  // namespace detail

// ---- R-module structure on A^1_m -------------------------------------------

template <Coefficient S>
Element<S> add(const Element<S>& x, const Element<S>& y) {
  const auto D = SimplicialSpace::D();
  detail::require_space(x, D, "add");
  detail::require_space(y, D, "add");
  require_same_model(x, y);
  Element<S> z = solve_limit(catalog_diagram("sum"), std::vector<Element<S>>{x, y});
  return apply(std_map("oplus-diag"), z);
}

template <Coefficient S>
Element<S> scalar(const Rational& a, const Element<S>& x) {
  detail::require_space(x, SimplicialSpace::D(), "scalar");
  return apply(slot_scaling_map(x.space(), 1, a), x);
}

template <Coefficient S>
Element<S> negate(const Element<S>& x) { return scalar(Rational(-1), x); }

template <Coefficient S>
Element<S> subtract(const Element<S>& x, const Element<S>& y) { return add(x, negate(y)); }

/// a ·ᵢ x.
template <Coefficient S>
Element<S> slot_scale(const Rational& a, int slot, const Element<S>& x) {
  return apply(slot_scaling_map(x.space(), slot, a), x);
}

/// a ·ᵢ x for a scalar of the coefficient ring itself (polynomial fields):
/// every coefficient on a monomial containing dᵢ is multiplied by a.
template <Coefficient S>
Element<S> slot_scale_by(const S& a, int slot, const Element<S>& x) {
  if (slot < 1 || slot > x.space().generators())
    fail(ErrorKind::BadSlot, "slot " + std::to_string(slot) + " outside 1.." + std::to_string(x.space().generators()));
  const Mask bit = Mask{1} << (slot - 1);
  std::vector<WeilElement<S>> coords;
  for (const auto& c : x.coords()) {
    WeilElement<S> e = c;
    const auto& basis = x.space().basis();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] & bit) e[k] = e[k] * a;
    coords.push_back(std::move(e));
  }
  return Element<S>(x.model(), x.space(), std::move(coords));
}

// ---- strong differences ----------------------------------------------------

/// y −̇ x for x, y ∈ A² agreeing on D ⊕ D.
template <Coefficient S>
Element<S> strong_diff(const Element<S>& y, const Element<S>& x) {
  const auto D2 = SimplicialSpace::cube(2);
  detail::require_space(x, D2, "strong difference");
  detail::require_space(y, D2, "strong difference");
  detail::require_restrictions_agree(std_map("incl12"), y, x, "strong difference");
  Element<S> z = solve_limit(catalog_diagram("diff"), std::vector<Element<S>>{x, y});
  return apply(std_map("diff-corner"), z);
}

/// y −̇ᵢ x for x, y ∈ A³ agreeing on the slot-i sub-presentation.
template <Coefficient S>
Element<S> strong_diff_slot(int slot, const Element<S>& y, const Element<S>& x) {
  if (slot < 1 || slot > 3) fail(ErrorKind::BadSlot, "strong difference slot must be 1, 2 or 3");
  const auto D3 = SimplicialSpace::cube(3);
  detail::require_space(x, D3, "slot strong difference");
  detail::require_space(y, D3, "slot strong difference");
  const std::string s = std::to_string(slot);
  detail::require_restrictions_agree(std_map("incl-slot" + s), y, x, "slot strong difference");
  Element<S> z = solve_limit(catalog_diagram("diff" + s), std::vector<Element<S>>{x, y});
  return apply(std_map("diff" + s + "-corner"), z);
}

/// The restriction a pair must share for the strong difference in `slot`
/// (0 for the A² difference).
inline const SimpMorphism& agreement_map(int slot) {
  if (slot == 0) return std_map("incl12");
  if (slot < 1 || slot > 3) fail(ErrorKind::BadSlot, "strong difference slot must be 0..3");
  return std_map("incl-slot" + std::to_string(slot));
}

// ---- families (maps P → A^D) -----------------------------------------------

namespace detail {

template <Coefficient S>
void require_same_shape(const Family<S>& a, const Family<S>& b) {
  if (!(a.index == b.index) || !(a.value == b.value))
    fail(ErrorKind::SpaceMismatch, "families over different index or value spaces");
  require_same_model(a.body, b.body);
}

}  // namespace detail

/// d ↦ a(d) + b(d).
template <Coefficient S>
Family<S> family_add(const Family<S>& a, const Family<S>& b) {
  detail::require_same_shape(a, b);
  if (!(a.value == SimplicialSpace::D())) fail(ErrorKind::SpaceMismatch, "family addition needs values in A^1");
  Element<S> z = solve_limit(parametrized_diagram(a.index, "sum"), std::vector<Element<S>>{a.body, b.body});
  return Family<S>{a.index, a.value, apply(lifted_map(a.index, "oplus-diag"), z)};
}

template <Coefficient S>
Family<S> family_negate(const Family<S>& a) {
  return Family<S>{a.index, a.value, apply(lifted_map(a.index, "neg"), a.body)};
}

template <Coefficient S>
Family<S> family_sub(const Family<S>& a, const Family<S>& b) { return family_add(a, family_negate(b)); }

/// d ↦ b(d) −̇ a(d) for families of microsquares.
template <Coefficient S>
Family<S> family_strong_diff(const Family<S>& b, const Family<S>& a) {
  detail::require_same_shape(a, b);
  if (!(a.value == SimplicialSpace::cube(2))) fail(ErrorKind::SpaceMismatch, "family strong difference needs A^2 values");
  const auto& r = lifted_map(a.index, "incl12");
  if (!(apply(r, a.body) == apply(r, b.body)))
    fail(ErrorKind::Incompatible, "family strong difference: values differ on D+D");
  Element<S> z = solve_limit(parametrized_diagram(a.index, "diff"), std::vector<Element<S>>{a.body, b.body});
  return Family<S>{a.index, SimplicialSpace::D(), apply(lifted_map(a.index, "diff-corner"), z)};
}

/// ζ ∘ f: the family reindexed along f: P' → P.
template <Coefficient S>
Family<S> reindex(const Family<S>& z, const SimpMorphism& f) {
  if (!(f.codomain() == z.index)) fail(ErrorKind::DomainMismatch, "reindexing map does not land in the index space");
  return Family<S>{f.domain(), z.value, apply(product_map(f, identity(z.value)), z.body)};
}

/// ζ₂ ∗^{D₁} ζ₁: d ↦ ζ₂(d,·) ∗ ζ₁(d). The product presentation is
/// associative, so this is ∗ with index D₁ × D₂.
template <Coefficient S>
Family<S> family_star(const Family<S>& z2, const Family<S>& z1) {
  if (!(z2.index == product(z1.index, z1.value)))
    fail(ErrorKind::SpaceMismatch, "outer family must be indexed by " + product(z1.index, z1.value).to_string());
  Element<S> body = star(z2, z1.body);
  return Family<S>{z1.index, product(z1.value, z2.value), std::move(body)};
}

// ---- totally intransitive structure ----------------------------------------

/// y ⊛ x = (d ↦ y) ∗ x over x.space × y.space, i.e. (y⊛x)(d₁,d₂) = y(d₂)·x(d₁).
template <Coefficient S>
Element<S> circledast(const Element<S>& y, const Element<S>& x) {
  require_same_model(x, y);
  if (!x.model().totally_intransitive()) require_same_base(x, y);
  return star(constant_family(x.space(), y), x);
}

/// f₀ ⊛ f₁ ⊛ … ⊛ fₙ; the last factor occupies the first slots.
template <Coefficient S>
Element<S> circledast(const std::vector<Element<S>>& factors) {
  if (factors.empty()) fail(ErrorKind::DimensionMismatch, "empty ⊛ product");
  Element<S> acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = circledast(factors[i], acc);
  return acc;
}

/// The unique z with A^{(d₁,d₂)↦d₁d₂}(z) = w, after checking that w is
/// trivial on both axes.
template <Coefficient S>
Element<S> kl_solve(const Element<S>& w) {
  detail::require_space(w, SimplicialSpace::cube(2), "d1*d2 quotient");
  const SimplicialSpace D = SimplicialSpace::D();
  const Element<S> zero_d = zero_like(w, D);
  if (!(apply(std_map("first"), w) == zero_d) || !(apply(std_map("second"), w) == zero_d))
    fail(ErrorKind::Incompatible, "microsquare is not trivial on both axes");
  return solve_limit(catalog_diagram("kl"), std::vector<Element<S>>{w});
}

/// A^{(d₁,d₂)↦(d₁,d₂,−d₁,−d₂)}(y⊛x⊛y⊛x).
template <Coefficient S>
Element<S> commutator_square(const Element<S>& x, const Element<S>& y) {
  return apply(std_map("bracket-restrict"), circledast(std::vector<Element<S>>{y, x, y, x}));
}

template <Coefficient S>
Element<S> bracket(const Element<S>& x, const Element<S>& y) {
  const auto D = SimplicialSpace::D();
  detail::require_space(x, D, "bracket");
  detail::require_space(y, D, "bracket");
  require_same_model(x, y);
  if (!in_anchor_kernel(x) || !in_anchor_kernel(y))
    fail(ErrorKind::NotInKernel, "bracket arguments must be killed by the anchor");
  require_same_base(x, y);
  return kl_solve(commutator_square(x, y));
}

/// y⊛x −̇ A^{twist}(x⊛y), the strong-difference form of [x,y].
template <Coefficient S>
Element<S> bracket_by_strong_diff(const Element<S>& x, const Element<S>& y) {
  return strong_diff(circledast(y, x), apply(std_map("twist"), circledast(x, y)));
}

// ---- Euclidean module ------------------------------------------------------

/// For φ: D → A¹_m, the unique y with φ(d) − φ(0) = d·y.
template <Coefficient S>
Element<S> euclid_derivative(const Family<S>& phi) {
  const auto D = SimplicialSpace::D();
  if (!(phi.index == D) || !(phi.value == D)) fail(ErrorKind::SpaceMismatch, "φ must be a map D → A^1");
  const Element<S> phi0 = family_at_zero(phi);
  Family<S> big_phi = family_sub(phi, constant_family(D, phi0));
  Element<S> x = star(big_phi, zero_like(phi0, D));
  return kl_solve(x);
}

/// d ↦ φ(0) + d·y.
template <Coefficient S>
Family<S> euclid_family(const Element<S>& phi0, const Element<S>& y) {
  const auto D = SimplicialSpace::D();
  Family<S> dy{D, D, apply(std_map("mult"), y)};
  return family_add(constant_family(D, phi0), dy);
}

// ---- matrix-group ad --------------------------------------------------------

/// d ↦ ad(x)(d)(y) − y, as a family of tangents indexed by D.
template <Coefficient S>
Family<S> ad_difference(const Element<S>& x, const Element<S>& y) {
  const auto D = SimplicialSpace::D();
  Family<S> ad{x.space(), y.space(), ad_conjugation(x, y)};
  return family_sub(ad, constant_family(D, y));
}

/// d ↦ d·z for a tangent z.
template <Coefficient S>
Family<S> scaled_family(const Element<S>& z) {
  const auto D = SimplicialSpace::D();
  detail::require_space(z, D, "d-scaling");
  return Family<S>{D, D, apply(std_map("mult"), z)};
}

}  // namespace weilgroid
