#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "weilgroid/linalg.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/simp.hpp"
#include "weilgroid/weil.hpp"

namespace weilgroid {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Seed of one trial: depends on (base seed, property, trial index) only, so
/// results do not depend on scheduling.
inline std::uint64_t trial_seed(std::uint64_t base, std::string_view property, std::uint64_t trial) {
  return splitmix64(splitmix64(base ^ fnv1a(property)) + trial);
}

/// Uniform integers in [−B, B], optionally divided by a uniform denominator
/// in [1, den].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int bound = 5, int denominator_bound = 1)
      : engine_(seed), bound_(bound), den_(denominator_bound) {}

  std::mt19937_64& engine() { return engine_; }
  int bound() const { return bound_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Rational rational() {
    Rational q(integer(-bound_, bound_));
    if (den_ > 1) {
      q /= integer(1, den_);
      q.canonicalize();
    }
    return q;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational q = rational();
      if (!is_zero(q)) return q;
    }
  }

  /// Random coefficients on the basis monomials selected by `keep`.
  template <class Pred>
  Weil weil_where(const SimplicialSpace& s, Pred keep) {
    Weil e(s);
    const auto& basis = s.basis();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (keep(basis[k])) e[k] = rational();
    return e;
  }

  Weil nilpotent(const SimplicialSpace& s) {
    return weil_where(s, [](Mask m) { return m != 0; });
  }

  std::vector<Rational> base_point(const Model& model) {
    std::vector<Rational> b;
    for (int i = 0; i < model.base_dim(); ++i) b.push_back(rational());
    return b;
  }

  /// A random element of A^D_m.
  Point element(const Model& model, const SimplicialSpace& space, const std::vector<Rational>& base) {
    Point z = zero(model, base, space);
    std::vector<Weil> coords;
    for (const auto& c : z.coords()) coords.push_back(c + nilpotent(space));
    return Point(model, space, std::move(coords));
  }

  /// A random element of A^D whose restriction along r agrees with x.
  Point agreeing(const Point& x, const SimpMorphism& r) {
    if (!(r.codomain() == x.space())) fail(ErrorKind::SpaceMismatch, "restriction map does not land in x's space");
    auto kernel = nullspace(r.matrix());
    std::vector<Weil> coords;
    for (const auto& c : x.coords()) {
      Weil e = c;
      for (const auto& v : kernel) {
        Rational t = rational();
        for (std::size_t k = 0; k < v.size(); ++k) e[k] += t * v[k];
      }
      coords.push_back(std::move(e));
    }
    return Point(x.model(), x.space(), std::move(coords));
  }

  /// A random ζ: index → A^{value} whose base path is `path`, an element of
  /// the anchor model over `index` (ignored for one-point bases).
  Family<Rational> family(const Model& model, const SimplicialSpace& index, const SimplicialSpace& value,
                          const Point& path) {
    const auto& pm = product_maps(index, value);
    Point lifted = model.base_dim() == 0 ? zero(model, std::vector<Rational>{}, pm.space)
                                         : apply(pm.p1, Point(model, index, path.coords()));
    const Mask index_bits = (Mask{1} << index.generators()) - 1;
    std::vector<Weil> coords;
    for (const auto& c : lifted.coords())
      coords.push_back(c + weil_where(pm.space, [&](Mask m) { return (m & ~index_bits) != 0; }));
    return Family<Rational>{index, value, Point(model, pm.space, std::move(coords))};
  }

  /// A random ζ: index → A^{value}_m (constant base point m).
  Family<Rational> family_at(const Model& model, const SimplicialSpace& index, const SimplicialSpace& value,
                             const std::vector<Rational>& base) {
    return family(model, index, value, zero(model.anchor_target(), base, index));
  }

  /// A random x with a(x) = path: forced for the formal and pair models.
  Point element_over_path(const Model& model, const Point& path) {
    if (model.base_dim() == 0) return element(model, path.space(), {});
    return Point(model, path.space(), path.coords());
  }

 private:
  std::mt19937_64 engine_;
  int bound_;
  int den_;
};

}  // namespace weilgroid
