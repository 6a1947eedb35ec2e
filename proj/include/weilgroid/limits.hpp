#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/linalg.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/simp.hpp"

namespace weilgroid {

/// leg[a] ∘ g = leg[b] ∘ h: values v must satisfy A^g(v_a) = A^h(v_b).
struct Relation {
  std::size_t a = 0;
  SimpMorphism g;
  std::size_t b = 0;
  SimpMorphism h;
};

/// A cocone of Simp into `apex`. `relations` generate the compatibility
/// conditions a family of values has to meet.
struct Diagram {
  std::string name;
  std::string role;
  SimplicialSpace apex;
  std::vector<SimpMorphism> legs;
  std::vector<Relation> relations;

  std::string signature() const {
    std::string s = name + "|" + apex.to_string();
    for (const auto& l : legs) s += "|" + l.domain().to_string() + ":" + l.to_string();
    for (const auto& r : relations)
      s += "|" + std::to_string(r.a) + r.g.to_string() + "=" + std::to_string(r.b) + r.h.to_string();
    return s;
  }
};

inline void validate_diagram(const Diagram& d) {
  for (const auto& l : d.legs)
    if (!(l.codomain() == d.apex))
      fail(ErrorKind::DomainMismatch, "diagram '" + d.name + "': leg into " + l.codomain().to_string() +
                                          " but apex is " + d.apex.to_string());
  for (const auto& r : d.relations) {
    if (r.a >= d.legs.size() || r.b >= d.legs.size())
      fail(ErrorKind::ConfigInvalid, "diagram '" + d.name + "': relation refers to a missing leg");
    if (!(r.g.codomain() == d.legs[r.a].domain()) || !(r.h.codomain() == d.legs[r.b].domain()) ||
        !(r.g.domain() == r.h.domain()))
      fail(ErrorKind::DomainMismatch, "diagram '" + d.name + "': relation maps do not match the legs");
  }
}

/// Rows: the legs' pullback matrices stacked (one block per leg).
inline Matrix stacked_pullback(const Diagram& d) {
  std::size_t rows = 0;
  for (const auto& l : d.legs) rows += l.domain().dimension();
  Matrix p(rows, d.apex.dimension());
  std::size_t off = 0;
  for (const auto& l : d.legs) {
    Matrix m = l.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p(off + i, j) = m(i, j);
    off += m.rows();
  }
  return p;
}

/// Rows: one block per relation, A^g on leg a minus A^h on leg b.
inline Matrix relation_matrix(const Diagram& d) {
  std::vector<std::size_t> offset;
  std::size_t cols = 0;
  for (const auto& l : d.legs) {
    offset.push_back(cols);
    cols += l.domain().dimension();
  }
  std::size_t rows = 0;
  for (const auto& r : d.relations) rows += r.g.domain().dimension();
  Matrix rel(rows, cols);
  std::size_t off = 0;
  for (const auto& r : d.relations) {
    Matrix g = r.g.matrix(), h = r.h.matrix();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) rel(off + i, offset[r.a] + j) += g(i, j);
      for (std::size_t j = 0; j < h.cols(); ++j) rel(off + i, offset[r.b] + j) -= h(i, j);
    }
    off += g.rows();
  }
  return rel;
}

/// Witness that a model sends a diagram to a limit: the stacked pullback P
/// is injective and its image is exactly ker R.
struct LimitCertificate {
  std::string diagram;
  std::string model;
  std::size_t unknowns = 0;       // columns of P
  std::size_t equations = 0;      // rows of P
  std::size_t rank = 0;           // rank P
  std::size_t kernel_rank = 0;    // dim ker P
  std::size_t compatible_dim = 0; // dim ker R
  bool relations_hold = false;    // R·P = 0
  std::vector<std::vector<Rational>> kernel;  // basis of ker P (apex coordinates of one copy)

  bool perceived_limit() const { return kernel_rank == 0 && relations_hold && rank == compatible_dim; }
};

inline LimitCertificate certify(const Model& model, const Diagram& d) {
  validate_diagram(d);
  const std::size_t k = static_cast<std::size_t>(model.coordinates());
  Matrix p1 = stacked_pullback(d);
  Matrix r1 = relation_matrix(d);
  Matrix p = p1.block_diagonal(k);
  Matrix r = r1.block_diagonal(k);
  LimitCertificate c;
  c.diagram = d.name;
  c.model = model.name();
  c.unknowns = p.cols();
  c.equations = p.rows();
  c.rank = rank(p);
  c.kernel_rank = c.unknowns - c.rank;
  c.compatible_dim = r.cols() - (r.rows() ? rank(r) : 0);
  c.relations_hold = r.rows() == 0 || (r * p).is_zero();
  if (c.kernel_rank > 0) c.kernel = nullspace(p1);
  return c;
}

/// Exact solver for one diagram at the Weil level, shared by all models and
/// coefficient rings.
class DiagramSolver {
 public:
  explicit DiagramSolver(const Diagram& d) : diagram_(d), solver_(stacked_pullback(d)) {}

  const Diagram& diagram() const { return diagram_; }
  bool injective() const { return solver_.injective(); }

  template <Coefficient S>
  Element<S> solve(const std::vector<Element<S>>& values) const {
    const Diagram& d = diagram_;
    if (values.size() != d.legs.size())
      fail(ErrorKind::DimensionMismatch, "diagram '" + d.name + "' has " + std::to_string(d.legs.size()) +
                                             " legs, got " + std::to_string(values.size()) + " values");
    if (!solver_.injective())
      fail(ErrorKind::NotPerceivedLimit, "diagram '" + d.name + "' is not a perceived limit (kernel rank " +
                                             std::to_string(solver_.cols() - solver_.rank()) + ")");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i].space() == d.legs[i].domain()))
        fail(ErrorKind::SpaceMismatch, "value " + std::to_string(i + 1) + " of '" + d.name + "' is over " +
                                           values[i].space().to_string() + ", leg expects " +
                                           d.legs[i].domain().to_string());
      require_same_model(values[0], values[i]);
    }
    const Model& model = values[0].model();
    std::vector<WeilElement<S>> coords;
    std::vector<S> rhs, z;
    for (int k = 0; k < model.coordinates(); ++k) {
      rhs.clear();
      for (const auto& v : values)
        for (const auto& c : v.coord(static_cast<std::size_t>(k)).coefficients()) rhs.push_back(c);
      if (!solver_.solve(rhs, z))
        fail(ErrorKind::Incompatible, "values violate the compatibility conditions of '" + d.name + "'");
      coords.emplace_back(d.apex, z);
    }
    return Element<S>(model, d.apex, std::move(coords));
  }

 private:
  Diagram diagram_;
  FullRankSolver solver_;
};

/// Write-once cache of solvers keyed by diagram signature.
inline std::shared_ptr<const DiagramSolver> solver_for(const Diagram& d) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const DiagramSolver>> cache;
  std::string key = d.signature();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  validate_diagram(d);
  auto built = std::make_shared<const DiagramSolver>(d);
  std::lock_guard lock(mutex);
  return cache.emplace(key, built).first->second;
}

/// The unique z at the apex with A^{leg_i}(z) = values[i]. With no legs the
/// apex must be the point and `base` supplies the base point.
template <Coefficient S>
Element<S> solve_limit(const Diagram& d, const std::vector<Element<S>>& values,
                       const std::optional<std::pair<Model, std::vector<S>>>& base = std::nullopt) {
  if (d.legs.empty()) {
    if (d.apex.generators() != 0)
      fail(ErrorKind::NotPerceivedLimit, "diagram '" + d.name + "' has no legs into a non-trivial apex");
    if (!base) fail(ErrorKind::Incompatible, "empty diagram needs a base point");
    return zero(base->first, base->second, d.apex);
  }
  return solver_for(d)->solve(values);
}

/// P × diagram: apex P × apex, legs id_P × leg, relations id_P × g.
inline Diagram parametrize(const SimplicialSpace& p, const Diagram& d) {
  if (p.generators() == 0) return d;
  Diagram out;
  out.name = p.to_string() + "x" + d.name;
  out.role = d.role;
  const SimpMorphism id = identity(p);
  out.apex = product(p, d.apex);
  for (const auto& l : d.legs) out.legs.push_back(product_map(id, l));
  for (const auto& r : d.relations)
    out.relations.push_back(Relation{r.a, product_map(id, r.g), r.b, product_map(id, r.h)});
  return out;
}

}  // namespace weilgroid
