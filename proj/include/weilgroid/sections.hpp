#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/ops.hpp"
#include "weilgroid/polynomial.hpp"
#include "weilgroid/weil.hpp"

namespace weilgroid {

inline constexpr unsigned kDefaultDegreeCap = 16;

/// f: M → R, a polynomial in m1..mN.
struct ScalarField {
  int dim = 0;
  Polynomial f;

  friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

/// p(q₁, …, q_N) for Weil points qᵢ with polynomial coefficients.
inline PolyWeil evaluate_at(const Polynomial& p, const std::vector<PolyWeil>& q, const SimplicialSpace& space) {
  if (p.variables_used() > static_cast<int>(q.size()))
    fail(ErrorKind::DimensionMismatch, "polynomial uses m" + std::to_string(p.variables_used()) + " but the point has " +
                                           std::to_string(q.size()) + " coordinates");
  for (const auto& c : q)
    if (!(c.space() == space)) fail(ErrorKind::SpaceMismatch, "evaluation point coordinates over different spaces");
  std::vector<std::vector<PolyWeil>> powers(q.size());
  auto power = [&](std::size_t i, unsigned e) -> const PolyWeil& {
    auto& ps = powers[i];
    if (ps.empty()) ps.push_back(PolyWeil::constant(space, Polynomial(1)));
    while (ps.size() <= e) ps.push_back(ps.back() * q[i]);
    return ps[e];
  };
  PolyWeil out(space);
  for (const auto& [key, c] : p.terms()) {
    auto e = Polynomial::unpack(key);
    PolyWeil term = PolyWeil::constant(space, Polynomial(c));
    for (std::size_t i = 0; i < q.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

/// A global section m ↦ X_m of A^D over the formal base: one PolyWeil per
/// coordinate, with augmentation mᵢ in coordinate i.
class Section {
 public:
  Section() = default;

  Section(const Model& model, PolyPoint body) : body_(std::move(body)) {
    if (!(body_.model() == model)) fail(ErrorKind::WrongModel, "section body belongs to another model");
    if (model.kind() == ModelKind::MatrixGroup) fail(ErrorKind::WrongModel, "sections live over a formal base");
    if (model.base_dim() > Polynomial::kMaxVariables)
      fail(ErrorKind::DimensionMismatch, "sections support base dimension at most 4");
    for (int i = 0; i < model.base_dim(); ++i)
      if (!(body_.coord(static_cast<std::size_t>(i)).augmentation() == Polynomial::variable(i)))
        fail(ErrorKind::BaseIncompatible, "coordinate " + std::to_string(i + 1) + " of a section must reduce to m" +
                                              std::to_string(i + 1));
  }

  /// The D-section m ↦ m + d·v(m).
  static Section vector_field(const Model& model, const std::vector<Polynomial>& v) {
    if (v.size() != static_cast<std::size_t>(model.base_dim()))
      fail(ErrorKind::DimensionMismatch, "vector field needs " + std::to_string(model.base_dim()) + " components");
    const auto D = SimplicialSpace::D();
    std::vector<PolyWeil> c;
    for (int i = 0; i < model.base_dim(); ++i) {
      PolyWeil e(D);
      e[0] = Polynomial::variable(i);
      e[1] = v[static_cast<std::size_t>(i)];
      c.push_back(std::move(e));
    }
    return Section(model, PolyPoint(model, D, std::move(c)));
  }

  static Section zero(const Model& model, const SimplicialSpace& space) {
    std::vector<Polynomial> base;
    for (int i = 0; i < model.base_dim(); ++i) base.push_back(Polynomial::variable(i));
    return Section(model, weilgroid::zero(model, base, space));
  }

  const Model& model() const { return body_.model(); }
  const SimplicialSpace& space() const { return body_.space(); }
  const PolyPoint& body() const { return body_; }
  int dim() const { return model().base_dim(); }

  /// d-coefficients of a D-section.
  std::vector<Polynomial> vector_part() const {
    if (!(space() == SimplicialSpace::D())) fail(ErrorKind::SpaceMismatch, "vector part needs a section over D");
    std::vector<Polynomial> v;
    for (const auto& c : body_.coords()) v.push_back(c[1]);
    return v;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& c : body_.coords())
      for (const auto& p : c.coefficients()) d = std::max(d, p.total_degree());
    return d;
  }

  /// X_m at a rational point.
  Point at(const std::vector<Rational>& m) const {
    if (m.size() != static_cast<std::size_t>(dim()))
      fail(ErrorKind::DimensionMismatch, "base point has " + std::to_string(m.size()) + " coordinates, expected " +
                                             std::to_string(dim()));
    std::vector<Weil> c;
    for (const auto& e : body_.coords()) {
      Weil w(space());
      for (std::size_t k = 0; k < e.coefficients().size(); ++k) w[k] = e[k].evaluate(m);
      c.push_back(std::move(w));
    }
    return Point(model(), space(), std::move(c));
  }

  /// m ↦ X evaluated at the Weil point q (over E): an element over E × D.
  PolyPoint at_weil(const std::vector<PolyWeil>& q) const {
    if (q.size() != static_cast<std::size_t>(dim()))
      fail(ErrorKind::DimensionMismatch, "Weil point has " + std::to_string(q.size()) + " coordinates, expected " +
                                             std::to_string(dim()));
    const SimplicialSpace E = q.empty() ? SimplicialSpace::point() : q.front().space();
    const auto& pm = product_maps(E, space());
    const auto& basis = space().basis();
    const int shift = E.generators();
    std::vector<PolyWeil> out;
    for (const auto& e : body_.coords()) {
      PolyWeil acc(pm.space);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (e[k].is_zero()) continue;
        PolyWeil lifted = pm.p1.pull(evaluate_at(e[k], q, E));
        acc += lifted * PolyWeil::monomial(pm.space, basis[k] << shift, Polynomial(1));
      }
      out.push_back(std::move(acc));
    }
    return PolyPoint(model(), pm.space, std::move(out));
  }

  friend bool operator==(const Section& a, const Section& b) { return a.body_ == b.body_; }

 private:
  PolyPoint body_;
};

inline std::string to_string(const Section& x) {
  std::string out = "section over " + x.space().to_string() + ": (";
  for (std::size_t i = 0; i < x.body().coords().size(); ++i)
    out += (i ? ", " : "") + to_string(x.body().coord(i), "d");
  return out + ")";
}

inline const Section& check_degree(const Section& x, unsigned cap) {
  if (x.degree() > cap)
    fail(ErrorKind::DegreeOverflow, "section degree " + std::to_string(x.degree()) + " exceeds the cap " +
                                        std::to_string(cap));
  return x;
}

namespace detail {

inline void require_same_section_model(const Section& a, const Section& b) {
  if (!(a.model() == b.model())) fail(ErrorKind::WrongModel, "sections from " + a.model().name() + " and " + b.model().name());
}

inline std::vector<PolyWeil> anchor_path(const Section& x) { return anchor(x.body()).coords(); }

}  // namespace detail

/// (Y ⊚ X)_m = (Y ∘ a(X_m)) ∗ X_m, a section over X.space × Y.space.
inline Section circledcirc(const Section& y, const Section& x, unsigned cap = kDefaultDegreeCap) {
  detail::require_same_section_model(x, y);
  Family<Polynomial> moved{x.space(), y.space(), y.at_weil(detail::anchor_path(x))};
  return check_degree(Section(x.model(), star(moved, x.body())), cap);
}

/// f·X for a D-section X.
inline Section scale(const ScalarField& f, const Section& x) {
  if (!(x.space() == SimplicialSpace::D())) fail(ErrorKind::SpaceMismatch, "scalar fields act on sections over D");
  return Section(x.model(), slot_scale_by(f.f, 1, x.body()));
}

/// f ·ᵢ X.
inline Section slot_scale(const ScalarField& f, int slot, const Section& x) {
  return Section(x.model(), slot_scale_by(f.f, slot, x.body()));
}

inline Section add(const Section& x, const Section& y) {
  detail::require_same_section_model(x, y);
  return Section(x.model(), add(x.body(), y.body()));
}

inline Section negate(const Section& x) { return Section(x.model(), negate(x.body())); }

inline Section scalar(const Rational& a, const Section& x) { return Section(x.model(), scalar(a, x.body())); }

inline Section apply(const SimpMorphism& f, const Section& x) { return Section(x.model(), apply(f, x.body())); }

inline Section strong_diff(const Section& y, const Section& x) {
  detail::require_same_section_model(x, y);
  return Section(x.model(), strong_diff(y.body(), x.body()));
}

/// m ↦ coefficient of d in f(a(X_m)(d)).
inline ScalarField lie_derivative(const Section& x, const ScalarField& f) {
  if (!(x.space() == SimplicialSpace::D())) fail(ErrorKind::SpaceMismatch, "Lie derivative along a section over D");
  PolyWeil v = evaluate_at(f.f, detail::anchor_path(x), x.space());
  return ScalarField{f.dim, v[1]};
}

/// The same derivative as ∇f · v, with v the vector part of a(X).
inline ScalarField lie_derivative_gradient(const Section& x, const ScalarField& f) {
  auto a = anchor(x.body());
  Polynomial out;
  for (std::size_t i = 0; i < a.coords().size(); ++i) out += f.f.derivative(static_cast<int>(i)) * a.coord(i)[1];
  return ScalarField{f.dim, out};
}

/// [X, Y]: the unique D-section whose d₁d₂-pullback is the
/// (d₁,d₂,−d₁,−d₂)-restriction of Y⊚X⊚Y⊚X.
inline Section section_bracket(const Section& x, const Section& y, unsigned cap = kDefaultDegreeCap) {
  const auto D = SimplicialSpace::D();
  if (!(x.space() == D) || !(y.space() == D)) fail(ErrorKind::SpaceMismatch, "section bracket needs sections over D");
  Section yx = circledcirc(y, x, cap);
  Section xyx = circledcirc(x, yx, cap);
  Section yxyx = circledcirc(y, xyx, cap);
  PolyPoint w = apply(std_map("bracket-restrict"), yxyx.body());
  return check_degree(Section(x.model(), kl_solve(w)), cap);
}

/// [X, fY] − f[X,Y] − X(f)·Y.
inline Section leibniz_residual(const Section& x, const Section& y, const ScalarField& f,
                                unsigned cap = kDefaultDegreeCap) {
  Section lhs = section_bracket(x, scale(f, y), cap);
  Section rhs = add(scale(f, section_bracket(x, y, cap)), scale(lie_derivative(x, f), y));
  return add(lhs, negate(rhs));
}

}  // namespace weilgroid
