#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/simp.hpp"
#include "weilgroid/weil.hpp"

namespace weilgroid {

enum class ModelKind { FormalSpace, PairGroupoid, MatrixGroup };

/// Descriptor of a concrete algebroid. Every model realizes A^D as K Weil
/// coordinates over D: the N coordinates of M for the formal space, the
/// target leg for the pair groupoid, the k×k entries (row-major) for the
/// matrix group.
class Model {
 public:
  Model() = default;

  static Model formal_space(int n) { return Model(ModelKind::FormalSpace, n); }
  static Model pair_groupoid(int n) { return Model(ModelKind::PairGroupoid, n); }
  static Model matrix_group(int k) { return Model(ModelKind::MatrixGroup, k); }

  ModelKind kind() const { return kind_; }
  int parameter() const { return param_; }

  int coordinates() const { return kind_ == ModelKind::MatrixGroup ? param_ * param_ : param_; }
  int base_dim() const { return kind_ == ModelKind::MatrixGroup ? 0 : param_; }
  int matrix_size() const { return kind_ == ModelKind::MatrixGroup ? param_ : 0; }

  /// Anchor identically zero.
  bool totally_intransitive() const { return kind_ == ModelKind::MatrixGroup; }

  /// The standard model the anchor lands in.
  Model anchor_target() const { return formal_space(base_dim()); }

  std::string kind_name() const {
    switch (kind_) {
      case ModelKind::FormalSpace: return "formal-space";
      case ModelKind::PairGroupoid: return "pair-groupoid";
      case ModelKind::MatrixGroup: return "matrix-group";
    }
    return "?";
  }

  std::string name() const {
    return kind_name() + (kind_ == ModelKind::MatrixGroup ? " k=" : " N=") + std::to_string(param_);
  }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Model(ModelKind kind, int param) : kind_(kind), param_(param) {
    if (param < 0 || (kind != ModelKind::FormalSpace && param < 1))
      fail(ErrorKind::ConfigInvalid, "model parameter must be >= 1");
    if (param > 16)
      fail(ErrorKind::ConfigInvalid, "model dimension too large");
  }

  ModelKind kind_ = ModelKind::FormalSpace;
  int param_ = 1;
};

/// A point of A^D: K Weil coordinates over D.
template <Coefficient S>
class Element {
 public:
  using Coord = WeilElement<S>;

  Element() = default;

  Element(Model model, SimplicialSpace space, std::vector<Coord> coords)
      : model_(model), space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(model_.coordinates()))
      fail(ErrorKind::DimensionMismatch, model_.name() + " needs " + std::to_string(model_.coordinates()) +
                                             " coordinates, got " + std::to_string(coords_.size()));
    for (const auto& c : coords_)
      if (!(c.space() == space_))
        fail(ErrorKind::SpaceMismatch, "coordinate over " + c.space().to_string() + " in element over " +
                                           space_.to_string());
    if (model_.kind() == ModelKind::MatrixGroup) {
      const int k = model_.matrix_size();
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const S& a = coords_[static_cast<std::size_t>(i * k + j)].augmentation();
          if (!(a == S(Rational(i == j ? 1 : 0))))
            fail(ErrorKind::BaseIncompatible, "matrix-group element must reduce to the identity at 0");
        }
    }
  }

  const Model& model() const { return model_; }
  const SimplicialSpace& space() const { return space_; }
  const std::vector<Coord>& coords() const { return coords_; }
  const Coord& coord(std::size_t i) const { return coords_[i]; }

  /// Matrix-group entry (i, j).
  const Coord& entry(int i, int j) const {
    return coords_[static_cast<std::size_t>(i * model_.matrix_size() + j)];
  }

  /// π(x): the augmentations (empty for the one-point base).
  std::vector<S> base() const {
    std::vector<S> b;
    if (model_.base_dim() == 0) return b;
    for (const auto& c : coords_) b.push_back(c.augmentation());
    return b;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.model_ == b.model_ && a.space_ == b.space_ && a.coords_ == b.coords_;
  }

 private:
  Model model_;
  SimplicialSpace space_;
  std::vector<Coord> coords_;
};

template <Coefficient S>
std::string to_string(const Element<S>& x) {
  std::string out = x.model().name() + " over " + x.space().to_string() + ": (";
  for (std::size_t i = 0; i < x.coords().size(); ++i) out += (i ? ", " : "") + to_string(x.coord(i));
  return out + ")";
}

using Point = Element<Rational>;
using PolyPoint = Element<Polynomial>;

/// ζ : D₁ → A^{D₂}, stored as its body over D₁ × D₂.
template <Coefficient S>
struct Family {
  SimplicialSpace index;
  SimplicialSpace value;
  Element<S> body;
};

template <Coefficient S>
void require_same_model(const Element<S>& a, const Element<S>& b) {
  if (!(a.model() == b.model()))
    fail(ErrorKind::WrongModel, "elements from " + a.model().name() + " and " + b.model().name());
}

template <Coefficient S>
void require_same_base(const Element<S>& a, const Element<S>& b) {
  require_same_model(a, b);
  if (a.base() != b.base()) fail(ErrorKind::BaseIncompatible, "elements lie over different base points");
}

/// Process-wide cache for structural morphisms that are rebuilt constantly.
inline const ProductMaps& product_maps(const SimplicialSpace& a, const SimplicialSpace& b) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::string>, std::shared_ptr<const ProductMaps>> cache;
  auto key = std::make_pair(a.to_string(), b.to_string());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto built = std::make_shared<const ProductMaps>(product_with_maps(a, b));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, built);
  return *it->second;
}

/// A^f(x): coordinatewise pullback; the base is untouched.
template <Coefficient S>
Element<S> apply(const SimpMorphism& f, const Element<S>& x) {
  if (!(x.space() == f.codomain()))
    fail(ErrorKind::SpaceMismatch, "element over " + x.space().to_string() + " but map goes into " +
                                       f.codomain().to_string());
  std::vector<WeilElement<S>> out;
  out.reserve(x.coords().size());
  for (const auto& c : x.coords()) out.push_back(f.pull(c));
  return Element<S>(x.model(), f.domain(), std::move(out));
}

/// 0_m^D.
template <Coefficient S>
Element<S> zero(const Model& model, const std::vector<S>& base, const SimplicialSpace& space) {
  std::vector<WeilElement<S>> coords;
  if (model.kind() == ModelKind::MatrixGroup) {
    const int k = model.matrix_size();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) coords.push_back(WeilElement<S>::constant(space, S(Rational(i == j ? 1 : 0))));
  } else {
    if (base.size() != static_cast<std::size_t>(model.base_dim()))
      fail(ErrorKind::DimensionMismatch, "base point has " + std::to_string(base.size()) + " coordinates, " +
                                             model.name() + " needs " + std::to_string(model.base_dim()));
    for (const auto& b : base) coords.push_back(WeilElement<S>::constant(space, b));
  }
  return Element<S>(model, space, std::move(coords));
}

inline Point zero(const Model& model, const std::vector<Rational>& base, const SimplicialSpace& space) {
  return zero<Rational>(model, base, space);
}

template <Coefficient S>
Element<S> zero_like(const Element<S>& x, const SimplicialSpace& space) {
  return zero(x.model(), x.base(), space);
}

/// a(x) ∈ M^D as an element of the standard model.
template <Coefficient S>
Element<S> anchor(const Element<S>& x) {
  switch (x.model().kind()) {
    case ModelKind::FormalSpace:
    case ModelKind::PairGroupoid:
      return Element<S>(x.model().anchor_target(), x.space(), x.coords());
    case ModelKind::MatrixGroup:
      return Element<S>(x.model().anchor_target(), x.space(), {});
  }
  return {};
}

template <Coefficient S>
bool in_anchor_kernel(const Element<S>& x) {
  auto a = anchor(x);
  return a == zero(a.model(), a.base(), a.space());
}

/// Fiber dimension of the inner subalgebroid (anchor kernel) at a point:
/// the number of free nilpotent coordinates killed by the anchor.
inline std::size_t inner_fiber_dimension(const Model& model, const SimplicialSpace& space) {
  const std::size_t nil = space.dimension() - 1;
  switch (model.kind()) {
    case ModelKind::FormalSpace:
    case ModelKind::PairGroupoid: return 0;
    case ModelKind::MatrixGroup: return nil * static_cast<std::size_t>(model.coordinates());
  }
  return 0;
}

template <Coefficient S>
Family<S> make_family(const SimplicialSpace& index, const SimplicialSpace& value, Element<S> body) {
  if (!(body.space() == product(index, value)))
    fail(ErrorKind::SpaceMismatch, "family body over " + body.space().to_string() + " is not over " +
                                       product(index, value).to_string());
  return Family<S>{index, value, std::move(body)};
}

/// ζ(0) ∈ A^{D₂}.
template <Coefficient S>
Element<S> family_at_zero(const Family<S>& z) {
  return apply(product_maps(z.index, z.value).i2, z.body);
}

/// π^{D₁}(ζ) ∈ M^{D₁}. For the matrix group this also checks that every
/// ζ(d) is based at the identity.
template <Coefficient S>
Element<S> base_path(const Family<S>& z) {
  auto restricted = apply(product_maps(z.index, z.value).i1, z.body);
  if (z.body.model().kind() == ModelKind::MatrixGroup) {
    auto id = zero(z.body.model(), std::vector<S>{}, z.index);
    if (!(restricted == id)) fail(ErrorKind::BaseIncompatible, "family values are not based at the identity");
    return Element<S>(z.body.model().anchor_target(), z.index, {});
  }
  return Element<S>(z.body.model().anchor_target(), z.index, restricted.coords());
}

/// a^{D₁}(ζ): apply the anchor fiberwise.
template <Coefficient S>
Family<S> anchor_family(const Family<S>& z) {
  return Family<S>{z.index, z.value, anchor(z.body)};
}

/// The constant family d ↦ y over `index`.
template <Coefficient S>
Family<S> constant_family(const SimplicialSpace& index, const Element<S>& y) {
  return Family<S>{index, y.space(), apply(product_maps(index, y.space()).p2, y)};
}

/// The family d ↦ 0^{value}_{a(y)(d)}.
template <Coefficient S>
Family<S> zero_family_along(const Element<S>& y, const SimplicialSpace& value) {
  const auto& pm = product_maps(y.space(), value);
  if (y.model().kind() == ModelKind::MatrixGroup) {
    return Family<S>{y.space(), value, zero(y.model(), std::vector<S>{}, pm.space)};
  }
  return Family<S>{y.space(), value, apply(pm.p1, y)};
}

template <Coefficient S>
Element<S> matmul(const Element<S>& a, const Element<S>& b) {
  require_same_model(a, b);
  if (a.model().kind() != ModelKind::MatrixGroup) fail(ErrorKind::WrongModel, "matrix product needs matrix-group");
  a.coord(0).same_space(b.coord(0));
  const int k = a.model().matrix_size();
  std::vector<WeilElement<S>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      WeilElement<S> acc(a.space());
      for (int l = 0; l < k; ++l) acc += a.entry(i, l) * b.entry(l, j);
      out.push_back(std::move(acc));
    }
  return Element<S>(a.model(), a.space(), std::move(out));
}

/// (I + N)^{-1} = Σ_{j ≤ g} (−N)^j, with g the generator count bounding the
/// nilpotency of N.
template <Coefficient S>
Element<S> matrix_inverse(const Element<S>& x) {
  if (x.model().kind() != ModelKind::MatrixGroup) fail(ErrorKind::WrongModel, "inverse needs matrix-group");
  const int k = x.model().matrix_size();
  std::vector<WeilElement<S>> neg;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      WeilElement<S> e = x.entry(i, j);
      if (i == j) e -= WeilElement<S>::constant(x.space(), S(Rational(1)));
      neg.push_back(-e);
    }
  // Powers of −N are not group elements; keep them as raw entry lists.
  auto mul = [k, &x](const std::vector<WeilElement<S>>& a, const std::vector<WeilElement<S>>& b) {
    std::vector<WeilElement<S>> r;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        WeilElement<S> acc(x.space());
        for (int l = 0; l < k; ++l)
          acc += a[static_cast<std::size_t>(i * k + l)] * b[static_cast<std::size_t>(l * k + j)];
        r.push_back(std::move(acc));
      }
    return r;
  };
  std::vector<WeilElement<S>> sum = zero(x.model(), std::vector<S>{}, x.space()).coords();
  std::vector<WeilElement<S>> power = sum;
  for (int j = 1; j <= x.space().generators(); ++j) {
    power = mul(power, neg);
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += power[t];
  }
  return Element<S>(x.model(), x.space(), std::move(sum));
}

namespace detail {

/// A pair-groupoid arrow (source, target) as Weil tuples.
template <Coefficient S>
struct PairArrow {
  std::vector<WeilElement<S>> source, target;
};

/// g·f: f first, then g; requires source(g) = target(f).
template <Coefficient S>
PairArrow<S> compose_arrows(const PairArrow<S>& g, const PairArrow<S>& f) {
  if (g.source != f.target) fail(ErrorKind::BaseIncompatible, "pair-groupoid arrows are not composable");
  return PairArrow<S>{f.source, g.target};
}

}  // namespace detail

/// ζ ∗ x ∈ A^{D₁ × D₂}.
template <Coefficient S>
Element<S> star(const Family<S>& z, const Element<S>& x) {
  require_same_model(z.body, x);
  if (!(x.space() == z.index))
    fail(ErrorKind::SpaceMismatch, "family indexed by " + z.index.to_string() + " applied to element over " +
                                       x.space().to_string());
  if (!(anchor(x) == base_path(z)))
    fail(ErrorKind::BaseIncompatible, "a(x) differs from the base path of the family");
  const auto& pm = product_maps(z.index, z.value);
  switch (x.model().kind()) {
    case ModelKind::FormalSpace:
      return z.body;
    case ModelKind::PairGroupoid: {
      Element<S> x_lift = apply(pm.p1, x);
      Element<S> z_source = apply(pm.p1, apply(pm.i1, z.body));
      auto base = x.base();
      detail::PairArrow<S> xa;
      for (std::size_t i = 0; i < base.size(); ++i) xa.source.push_back(WeilElement<S>::constant(pm.space, base[i]));
      xa.target = x_lift.coords();
      detail::PairArrow<S> za{z_source.coords(), z.body.coords()};
      auto composite = detail::compose_arrows(za, xa);
      return Element<S>(x.model(), pm.space, composite.target);
    }
    case ModelKind::MatrixGroup:
      return matmul(z.body, apply(pm.p1, x));
  }
  return {};
}

/// Inverse of ∗: splits y ∈ A^{D₁×D₂} into (ζ, x) with ζ ∗ x = y.
template <Coefficient S>
std::pair<Family<S>, Element<S>> unstar(const Element<S>& y, const SimplicialSpace& index,
                                        const SimplicialSpace& value) {
  const auto& pm = product_maps(index, value);
  if (!(y.space() == pm.space))
    fail(ErrorKind::SpaceMismatch, "element over " + y.space().to_string() + " is not over " + pm.space.to_string());
  Element<S> x = apply(pm.i1, y);
  if (y.model().kind() == ModelKind::MatrixGroup) {
    Element<S> body = matmul(y, matrix_inverse(apply(pm.p1, x)));
    return {Family<S>{index, value, body}, x};
  }
  return {Family<S>{index, value, y}, x};
}

/// Pointwise conjugation x(d₁)·y(d₂)·x(d₁)⁻¹ over D₁ × D₂.
template <Coefficient S>
Element<S> ad_conjugation(const Element<S>& x, const Element<S>& y) {
  require_same_model(x, y);
  if (x.model().kind() != ModelKind::MatrixGroup) fail(ErrorKind::WrongModel, "conjugation needs matrix-group");
  const auto& pm = product_maps(x.space(), y.space());
  Element<S> xl = apply(pm.p1, x);
  return matmul(matmul(xl, apply(pm.p2, y)), matrix_inverse(xl));
}

/// Reinterprets an element over a product whose bracketing changed, e.g.
/// (D₁×D₂)×D₃ versus D₁×(D₂×D₃): the presentations coincide.
template <Coefficient S>
Element<S> rebase(const Element<S>& x, const SimplicialSpace& space) {
  std::vector<WeilElement<S>> c;
  for (const auto& e : x.coords()) c.push_back(e.rebased(space));
  return Element<S>(x.model(), space, std::move(c));
}

template <Coefficient S>
Element<S> to_poly_element(const Element<S>& x) { return x; }

inline PolyPoint to_poly_element(const Point& x) {
  std::vector<PolyWeil> c;
  for (const auto& e : x.coords()) c.push_back(to_poly(e));
  return PolyPoint(x.model(), x.space(), std::move(c));
}

}  // namespace weilgroid
