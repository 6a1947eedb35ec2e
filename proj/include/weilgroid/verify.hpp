#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "weilgroid/catalog.hpp"
#include "weilgroid/limits.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/ops.hpp"
#include "weilgroid/random.hpp"
#include "weilgroid/sections.hpp"
#include "weilgroid/serialize.hpp"

namespace weilgroid {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "weil",   "simp",   "diagrams", "models",       "module-axioms", "strong-diff",
      "jacobi-general", "star-axioms", "euclid", "bracket", "ad-condition", "sections"};
  return names;
}

inline std::string canonical_suite(const std::string& name) {
  if (name == "bracket-matrix") return "bracket";
  for (const auto& s : suite_names())
    if (s == name) return s;
  fail(ErrorKind::ConfigInvalid, "unknown suite '" + name + "'");
}

struct SuiteConfig {
  std::vector<std::string> suites;  // empty: every suite
  std::vector<Model> models;
  std::uint64_t seed = 1;
  int trials = 20;
  std::map<std::string, int> suite_trials;
  int bound = 5;
  int denominator_bound = 1;
  unsigned section_degree = 3;
  unsigned degree_cap = kDefaultDegreeCap;
  unsigned threads = 0;  // 0: hardware concurrency, capped by WEILGROID_THREADS

  int trials_for(const std::string& suite) const {
    auto it = suite_trials.find(suite);
    return it == suite_trials.end() ? trials : it->second;
  }

  void validate() const {
    if (trials < 1) fail(ErrorKind::ConfigInvalid, "trials must be >= 1");
    for (const auto& [s, n] : suite_trials) {
      canonical_suite(s);
      if (n < 1) fail(ErrorKind::ConfigInvalid, "trials for '" + s + "' must be >= 1");
    }
    if (bound < 1) fail(ErrorKind::ConfigInvalid, "bound must be >= 1");
    if (denominator_bound < 1) fail(ErrorKind::ConfigInvalid, "denominator_bound must be >= 1");
    if (section_degree < 1) fail(ErrorKind::ConfigInvalid, "section_degree must be >= 1");
    if (degree_cap < section_degree) fail(ErrorKind::ConfigInvalid, "degree_cap is below section_degree");
    if (models.empty()) fail(ErrorKind::ConfigInvalid, "config names no model");
    for (const auto& s : suites) canonical_suite(s);
  }
};

inline SuiteConfig config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ConfigInvalid, "config must be a JSON object");
  static const std::set<std::string> known = {"model",  "models",        "suites",            "seed",
                                              "trials", "suite_trials",  "bound",             "denominator_bound",
                                              "section_degree", "degree_cap", "threads"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) fail(ErrorKind::ConfigInvalid, "unknown config key '" + k + "'");
  auto integer = [&](const char* key, auto fallback) {
    using T = decltype(fallback);
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) fail(ErrorKind::ConfigInvalid, std::string("'") + key + "' must be an integer");
    if constexpr (std::is_unsigned_v<T>) {
      if (j[key].get<long long>() < 0) fail(ErrorKind::ConfigInvalid, std::string("'") + key + "' must be >= 0");
    }
    return j[key].get<T>();
  };
  SuiteConfig c;
  if (j.contains("model")) c.models.push_back(model_from_json(j["model"]));
  if (j.contains("models")) {
    if (!j["models"].is_array()) fail(ErrorKind::ConfigInvalid, "'models' must be a list");
    for (const auto& m : j["models"]) c.models.push_back(model_from_json(m));
  }
  if (j.contains("suites")) {
    if (!j["suites"].is_array()) fail(ErrorKind::ConfigInvalid, "'suites' must be a list");
    for (const auto& s : j["suites"]) {
      if (!s.is_string()) fail(ErrorKind::ConfigInvalid, "suite names are strings");
      c.suites.push_back(canonical_suite(s.get<std::string>()));
    }
  }
  c.seed = integer("seed", std::uint64_t{1});
  c.trials = integer("trials", 20);
  c.bound = integer("bound", 5);
  c.denominator_bound = integer("denominator_bound", 1);
  c.section_degree = integer("section_degree", 3u);
  c.degree_cap = integer("degree_cap", kDefaultDegreeCap);
  c.threads = integer("threads", 0u);
  if (j.contains("suite_trials")) {
    if (!j["suite_trials"].is_object()) fail(ErrorKind::ConfigInvalid, "'suite_trials' must be an object");
    for (const auto& [k, v] : j["suite_trials"].items()) {
      if (!v.is_number_integer()) fail(ErrorKind::ConfigInvalid, "trial counts are integers");
      c.suite_trials[canonical_suite(k)] = v.get<int>();
    }
  }
  c.validate();
  return c;
}

// ---- trials ------------------------------------------------------------------

/// One randomized trial: the sampler plus the serialized inputs drawn so far,
/// which become the counterexample when the check fails.
class Trial {
 public:
  Trial(const Model& model, std::uint64_t seed, const SuiteConfig& config)
      : model(model), config(config), rng(seed, config.bound, config.denominator_bound) {}

  const Model& model;
  const SuiteConfig& config;
  Sampler rng;

  template <class T>
  T input(const std::string& name, T value) {
    inputs_[name] = to_json(value);
    return value;
  }

  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  json counterexample(std::uint64_t trial, std::uint64_t seed) const {
    json c;
    c["trial"] = trial;
    c["seed"] = seed;
    c["inputs"] = inputs_;
    if (!notes_.empty()) c["notes"] = notes_;
    return c;
  }

 private:
  json inputs_ = json::object();
  json notes_ = json::object();
};

struct Property {
  std::string id;
  std::string citation;
  std::string suite;
  std::function<bool(const Model&)> applies;  // empty: model-independent, run once
  std::function<bool(Trial&)> check;
  int fixed_trials = 0;                       // 0: the configured count
};

struct Record {
  std::string id;
  std::string citation;
  std::string suite;
  std::string model;
  int trials = 0;
  int failures = 0;
  std::optional<json> counterexample;
  double wall_ms = 0;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<Record> records;

  bool pass() const {
    return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.failures == 0; });
  }
};

inline json to_json(const VerificationReport& r, bool timing = false) {
  json j;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  json recs = json::array();
  for (const auto& x : r.records) {
    json e;
    e["id"] = x.id;
    e["citation"] = x.citation;
    e["suite"] = x.suite;
    e["model"] = x.model;
    e["trials"] = x.trials;
    e["failures"] = x.failures;
    e["counterexample"] = x.counterexample ? *x.counterexample : json(nullptr);
    if (timing) e["wall_ms"] = x.wall_ms;
    recs.push_back(std::move(e));
  }
  j["records"] = std::move(recs);
  return j;
}

// ---- generators ------------------------------------------------------------------

namespace gen {

inline const SimplicialSpace& D() {
  static const SimplicialSpace s = SimplicialSpace::D();
  return s;
}
inline const SimplicialSpace& D2() {
  static const SimplicialSpace s = SimplicialSpace::cube(2);
  return s;
}
inline const SimplicialSpace& D3() {
  static const SimplicialSpace s = SimplicialSpace::cube(3);
  return s;
}

/// A random element over `s` at a fresh base point.
inline Point element(Trial& t, const std::string& name, const SimplicialSpace& s, const std::vector<Rational>& m) {
  return t.input(name, t.rng.element(t.model, s, m));
}

inline std::vector<Rational> base(Trial& t) { return t.rng.base_point(t.model); }

/// x and y over `s` agreeing along r.
inline std::pair<Point, Point> agreeing_pair(Trial& t, const SimplicialSpace& s, const SimpMorphism& r) {
  auto m = base(t);
  Point x = element(t, "x", s, m);
  Point y = t.input("y", t.rng.agreeing(x, r));
  return {x, y};
}

/// x over `index` and ζ: index → A^{value} with π(ζ) = a(x).
inline std::pair<Point, Family<Rational>> star_pair(Trial& t, const SimplicialSpace& index,
                                                     const SimplicialSpace& value) {
  auto m = base(t);
  Point x = element(t, "x", index, m);
  auto z = t.input("zeta", t.rng.family(t.model, index, value, anchor(x)));
  return {x, z};
}

inline void enumerate_exponents(int dim, unsigned degree, int i, Polynomial::Exponents& e,
                                std::vector<Polynomial::Exponents>& out) {
  if (i == dim) {
    out.push_back(e);
    return;
  }
  unsigned used = 0;
  for (int k = 0; k < i; ++k) used += e[k];
  for (unsigned p = 0; used + p <= degree; ++p) {
    e[i] = p;
    enumerate_exponents(dim, degree, i + 1, e, out);
  }
  e[i] = 0;
}

/// A sparse random polynomial of total degree ≤ degree in m1..m_dim.
inline Polynomial polynomial(Sampler& rng, int dim, unsigned degree) {
  std::vector<Polynomial::Exponents> exps;
  Polynomial::Exponents e{};
  enumerate_exponents(dim, degree, 0, e, exps);
  Polynomial p;
  for (const auto& x : exps)
    if (rng.integer(0, 1)) p += Polynomial::monomial(x, rng.rational());
  return p;
}

inline Section field(Trial& t, const std::string& name) {
  std::vector<Polynomial> v;
  for (int i = 0; i < t.model.base_dim(); ++i)
    v.push_back(polynomial(t.rng, t.model.base_dim(), t.config.section_degree));
  return t.input(name, Section::vector_field(t.model, v));
}

inline ScalarField function(Trial& t, const std::string& name) {
  unsigned deg = std::min(2u, t.config.section_degree);
  return t.input(name, ScalarField{t.model.base_dim(), polynomial(t.rng, t.model.base_dim(), deg)});
}

/// (d, d₁, …, dₙ) ↦ (d, …, f(d)·dᵢ, …) on D × value, for f ∈ W(D).
inline SimpMorphism rescale_by_function(const SimplicialSpace& value, int slot, const Weil& f) {
  const SimplicialSpace p = product(D(), value);
  const Weil d = Weil::generator(p, 1);
  const Weil fd = Weil::constant(p, f[0]) + Weil::constant(p, f[1]) * d;
  std::vector<Weil> c;
  for (int j = 1; j <= p.generators(); ++j) {
    Weil g = Weil::generator(p, j);
    c.push_back(j == slot + 1 ? fd * g : g);
  }
  return SimpMorphism(p, p, std::move(c));
}

/// Classical bracket (∂w)v − (∂v)w of polynomial vector fields.
inline std::vector<Polynomial> jacobian_bracket(const std::vector<Polynomial>& v, const std::vector<Polynomial>& w) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Polynomial acc;
    for (std::size_t j = 0; j < v.size(); ++j) {
      acc += w[i].derivative(static_cast<int>(j)) * v[j];
      acc -= v[i].derivative(static_cast<int>(j)) * w[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace gen

// ---- registry ------------------------------------------------------------------

namespace detail {

inline bool any_model(const Model&) { return true; }
inline bool matrix_model(const Model& m) { return m.kind() == ModelKind::MatrixGroup; }
inline bool formal_base(const Model& m) {
  return m.kind() != ModelKind::MatrixGroup && m.base_dim() >= 1 && m.base_dim() <= Polynomial::kMaxVariables;
}

struct RegistryBuilder {
  std::vector<Property>& out;
  std::string suite;

  void add(std::string id, std::string citation, std::function<bool(const Model&)> applies,
           std::function<bool(Trial&)> check, int fixed = 0) {
    out.push_back(Property{std::move(id), std::move(citation), suite, std::move(applies), std::move(check), fixed});
  }
};

inline Point zero_tangent(const Point& like) { return zero_like(like, SimplicialSpace::D()); }


inline SimpMorphism random_map(Sampler& rng, const SimplicialSpace* domain = nullptr) {
  std::vector<const SimpMorphism*> pool;
  for (const auto& [name, f] : std_maps())
    if (!domain || f.domain() == *domain) pool.push_back(&f);
  if (pool.empty()) return identity(*domain);
  return *pool[static_cast<std::size_t>(rng.integer(0, static_cast<int>(pool.size()) - 1))];
}

inline SimpMorphism random_map_into(Sampler& rng, const SimplicialSpace& codomain) {
  std::vector<const SimpMorphism*> pool;
  for (const auto& [name, f] : std_maps())
    if (f.codomain() == codomain) pool.push_back(&f);
  if (pool.empty()) return identity(codomain);
  return *pool[static_cast<std::size_t>(rng.integer(0, static_cast<int>(pool.size()) - 1))];
}

inline Weil random_weil(Trial& t, const std::string& name, const SimplicialSpace& s) {
  Weil e = t.rng.weil_where(s, [](Mask) { return true; });
  t.input(name, to_string(e));
  return e;
}

inline void weil_suite(RegistryBuilder r) {
  r.add("weil-dimension", "simplicial spaces", {}, [](Trial& t) {
    for (int m = 0; m <= 6; ++m) {
      if (SimplicialSpace::cube(m).dimension() != (std::size_t{1} << m)) {
        t.note("cube", m);
        return false;
      }
      if (SimplicialSpace::first_order(m).dimension() != static_cast<std::size_t>(m) + 1) {
        t.note("first_order", m);
        return false;
      }
    }
    return true;
  }, 1);
  r.add("weil-ring-axioms", "simplicial spaces", {}, [](Trial& t) {
    static const std::vector<std::string> spaces = {"D^3", "D(3)", "D^4{12,34}", "D^3{123}", "D^4{13,14,23,24,34}"};
    SimplicialSpace s = parse_space(spaces[static_cast<std::size_t>(t.rng.integer(0, 4))]);
    t.input("space", s);
    Weil a = random_weil(t, "a", s), b = random_weil(t, "b", s), c = random_weil(t, "c", s);
    return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
           (a + b) + c == a + (b + c);
  });
}

inline void simp_suite(RegistryBuilder r) {
  r.add("simp-composition", "category Simp", {}, [](Trial& t) {
    SimpMorphism f = t.input("f", random_map(t.rng));
    SimpMorphism g = t.input("g", random_map(t.rng, &f.codomain()));
    SimpMorphism h = t.input("h", random_map(t.rng, &g.codomain()));
    Weil e = random_weil(t, "e", g.codomain());
    return compose(h, compose(g, f)) == compose(compose(h, g), f) && compose(g, f).pull(e) == f.pull(g.pull(e)) &&
           compose(f, identity(f.domain())) == f && compose(identity(f.codomain()), f) == f;
  });
  r.add("simp-pullback-homomorphism", "category Simp", {}, [](Trial& t) {
    SimpMorphism f = t.input("f", random_map(t.rng));
    Weil a = random_weil(t, "a", f.codomain()), b = random_weil(t, "b", f.codomain());
    return f.pull(a * b) == f.pull(a) * f.pull(b) && f.pull(a + b) == f.pull(a) + f.pull(b);
  });
}

inline void models_suite(RegistryBuilder r) {
  r.add("functor-law", "functor A", any_model, [](Trial& t) {
    SimpMorphism f = t.input("f", random_map(t.rng));
    SimpMorphism g = t.input("g", random_map(t.rng, &f.codomain()));
    Point x = gen::element(t, "x", g.codomain(), gen::base(t));
    return apply(compose(g, f), x) == apply(f, apply(g, x)) && apply(identity(x.space()), x) == x;
  });
  r.add("anchor-naturality", "anchor natural transformation", any_model, [](Trial& t) {
    SimpMorphism f = t.input("f", random_map(t.rng));
    Point x = gen::element(t, "x", f.codomain(), gen::base(t));
    return anchor(apply(f, x)) == apply(f, anchor(x));
  });
  r.add("lemma-l2.1", "l2.1", any_model, [](Trial& t) {
    static const std::vector<std::string> spaces = {"D", "D^2", "D(2)", "D^3{123}"};
    auto pick = [&] { return parse_space(spaces[static_cast<std::size_t>(t.rng.integer(0, 3))]); };
    SimplicialSpace d1 = t.input("D1", pick()), d2 = t.input("D2", pick());
    auto m = gen::base(t);
    const auto& pm = product_maps(d1, d2);
    return apply(pm.p1, zero(t.model, m, d1)) == zero(t.model, m, pm.space) &&
           apply(pm.p2, zero(t.model, m, d2)) == zero(t.model, m, pm.space);
  });
  r.add("prop-finite-product", "finite coproducts to products", any_model, [](Trial& t) {
    auto m = gen::base(t);
    Point x = gen::element(t, "x", gen::D(), m), y = gen::element(t, "y", gen::D(), m);
    Point z = solve_limit(catalog_diagram("sum"), std::vector<Point>{x, y});
    return apply(std_map("oplus-i1"), z) == x && apply(std_map("oplus-i2"), z) == y;
  });
  r.add("prop-kernel", "kernel of a homomorphism", any_model, [](Trial& t) {
    SimpMorphism f = t.input("f", random_map(t.rng));
    auto m = gen::base(t);
    // The anchor kernel at m: everything for the matrix group, 0_m otherwise.
    Point x = t.input("x", t.model.totally_intransitive() ? t.rng.element(t.model, f.codomain(), m)
                                                          : zero(t.model, m, f.codomain()));
    if (!in_anchor_kernel(x) || !in_anchor_kernel(apply(f, x))) return false;
    auto z = t.rng.family(t.model, f.codomain(), gen::D(), anchor(x));
    if (t.model.totally_intransitive()) return in_anchor_kernel(star(z, x));
    return true;
  });
}

inline void module_suite(RegistryBuilder r) {
  auto three = [](Trial& t) {
    auto m = gen::base(t);
    return std::array<Point, 3>{gen::element(t, "x", gen::D(), m), gen::element(t, "y", gen::D(), m),
                                gen::element(t, "z", gen::D(), m)};
  };
  r.add("thm-tn2.1-add-assoc", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return add(add(x, y), z) == add(x, add(y, z));
  });
  r.add("thm-tn2.1-add-comm", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return add(x, y) == add(y, x);
  });
  r.add("thm-tn2.1-zero", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return add(x, zero_tangent(x)) == x && add(zero_tangent(x), x) == x;
  });
  r.add("thm-tn2.1-inverse", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return add(x, negate(x)) == zero_tangent(x);
  });
  r.add("thm-tn2.1-scalar-assoc", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Rational a = t.input("a", t.rng.rational()), b = t.input("b", t.rng.rational());
    return scalar(a, scalar(b, x)) == scalar(Rational(a * b), x);
  });
  r.add("thm-tn2.1-distrib-vector", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Rational a = t.input("a", t.rng.rational());
    return scalar(a, add(x, y)) == add(scalar(a, x), scalar(a, y));
  });
  r.add("thm-tn2.1-distrib-scalar", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Rational a = t.input("a", t.rng.rational()), b = t.input("b", t.rng.rational());
    return scalar(Rational(a + b), x) == add(scalar(a, x), scalar(b, x));
  });
  r.add("thm-tn2.1-unit", "tn2.1", any_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return scalar(Rational(1), x) == x && scalar(Rational(0), x) == zero_tangent(x);
  });
}

inline void strong_diff_suite(RegistryBuilder r) {
  const SimpMorphism incl = std_map("incl12");
  r.add("prop-tn2.2-twist", "tn2.2", any_model, [incl](Trial& t) {
    auto [x, y] = gen::agreeing_pair(t, gen::D2(), incl);
    const auto& tw = std_map("twist");
    return strong_diff(apply(tw, y), apply(tw, x)) == strong_diff(y, x);
  });
  r.add("prop-tn2.2-negation", "tn2.2", any_model, [incl](Trial& t) {
    auto [x, y] = gen::agreeing_pair(t, gen::D2(), incl);
    return strong_diff(x, y) == negate(strong_diff(y, x));
  });
  for (int slot : {1, 2}) {
    r.add("prop-tn2.2-slot-scaling-" + std::to_string(slot), "tn2.2", any_model, [incl, slot](Trial& t) {
      auto [x, y] = gen::agreeing_pair(t, gen::D2(), incl);
      Rational a = t.input("a", t.rng.rational());
      return strong_diff(slot_scale(a, slot, y), slot_scale(a, slot, x)) == scalar(a, strong_diff(y, x));
    });
  }
  r.add("prop-cocycle", "strong difference cocycle", any_model, [incl](Trial& t) {
    auto [x, y] = gen::agreeing_pair(t, gen::D2(), incl);
    Point z = t.input("z", t.rng.agreeing(x, incl));
    return add(add(strong_diff(y, x), strong_diff(z, y)), strong_diff(x, z)) == zero_tangent(x);
  });
  // y −̇ᵢ x transported along a permutation of D³ lands in another slot.
  static const std::map<int, std::vector<std::pair<std::string, int>>> transport = {
      {1, {{"213", 2}, {"321", 3}, {"132", 1}}},
      {2, {{"213", 1}, {"321", 2}, {"132", 3}}},
      {3, {{"213", 3}, {"321", 1}, {"132", 2}}}};
  for (const auto& [slot, targets] : transport)
    for (const auto& [perm, target] : targets) {
      r.add("prop-tn2.3-slot" + std::to_string(slot) + "-s" + perm, "tn2.3", any_model,
            [slot = slot, perm = perm, target = target](Trial& t) {
              auto [x, y] = gen::agreeing_pair(t, gen::D3(), agreement_map(slot));
              const auto& s = std_map("s" + perm);
              return strong_diff_slot(slot, y, x) == strong_diff_slot(target, apply(s, y), apply(s, x));
            });
    }
}

/// Six elements of A³ for which all three expressions of the general Jacobi
/// identity are defined: unit and first-order parts are shared, each
/// second-order coefficient takes one value per side of the relevant
/// pairing, and the top coefficient is free.
inline std::map<std::string, Point> jacobi_sextuple(Trial& t) {
  static const std::vector<std::string> names = {"123", "132", "213", "231", "312", "321"};
  static const std::set<std::string> d23 = {"123", "213", "231"}, d13 = {"123", "132", "213"},
                                     d12 = {"123", "132", "312"};
  const SimplicialSpace& s = gen::D3();
  auto m = gen::base(t);
  Point zero3 = zero(t.model, m, s);
  std::map<std::string, std::vector<Weil>> coords;
  for (const auto& c : zero3.coords()) {
    Weil shared = c + t.rng.weil_where(s, [](Mask k) { return std::popcount(k) == 1; });
    Rational a[2] = {t.rng.rational(), t.rng.rational()}, b[2] = {t.rng.rational(), t.rng.rational()},
             g[2] = {t.rng.rational(), t.rng.rational()};
    for (const auto& n : names) {
      Weil e = shared;
      e[static_cast<std::size_t>(s.index_of(0b110))] += a[d23.count(n) ? 0 : 1];
      e[static_cast<std::size_t>(s.index_of(0b101))] += b[d13.count(n) ? 0 : 1];
      e[static_cast<std::size_t>(s.index_of(0b011))] += g[d12.count(n) ? 0 : 1];
      e[static_cast<std::size_t>(s.index_of(0b111))] += t.rng.rational();
      coords[n].push_back(std::move(e));
    }
  }
  std::map<std::string, Point> out;
  for (const auto& n : names) out.emplace(n, t.input("x" + n, Point(t.model, s, coords[n])));
  return out;
}

inline void jacobi_general_suite(RegistryBuilder r) {
  r.add("thm-tn2.4", "tn2.4", any_model, [](Trial& t) {
    auto x = jacobi_sextuple(t);
    Point e1 = strong_diff(strong_diff_slot(1, x["123"], x["132"]), strong_diff_slot(1, x["231"], x["321"]));
    Point e2 = strong_diff(strong_diff_slot(2, x["231"], x["213"]), strong_diff_slot(2, x["312"], x["132"]));
    Point e3 = strong_diff(strong_diff_slot(3, x["312"], x["321"]), strong_diff_slot(3, x["123"], x["213"]));
    return add(add(e1, e2), e3) == zero_tangent(e1);
  });
}

inline void star_suite(RegistryBuilder r) {
  const SimplicialSpace D = gen::D();
  r.add("def-d2.4-cond1", "d2.4", any_model, [D](Trial& t) {
    auto [x, z] = gen::star_pair(t, D, gen::D2());
    Point s = star(z, x);
    return s.base() == x.base() && anchor(s) == anchor_family(z).body;
  });
  r.add("def-d2.4-cond2", "d2.4", any_model, [D](Trial& t) {
    auto [x, z] = gen::star_pair(t, D, gen::D2());
    const auto& pm = product_maps(D, gen::D2());
    Point s = star(z, x);
    Point y = t.input("y", t.rng.element(t.model, D, x.base()));
    Point w = t.input("w", t.rng.element(t.model, gen::D2(), x.base()));
    return apply(pm.i1, s) == x && apply(pm.i2, s) == family_at_zero(z) &&
           apply(pm.p1, y) == star(zero_family_along(y, gen::D2()), y) &&
           apply(pm.p2, w) == star(constant_family(D, w), zero_like(w, D));
  });
  for (int slot : {1, 2}) {
    r.add("def-d2.4-cond3-slot" + std::to_string(slot), "d2.4", any_model, [D, slot](Trial& t) {
      auto [x, z] = gen::star_pair(t, D, gen::D2());
      Weil f = random_weil(t, "f", D);
      SimpMorphism psi = gen::rescale_by_function(gen::D2(), slot, f);
      Family<Rational> rescaled{z.index, z.value, apply(psi, z.body)};
      return apply(psi, star(z, x)) == star(rescaled, x);
    });
  }
  r.add("def-d2.4-cond4", "d2.4", any_model, [D](Trial& t) {
    auto [x, z1] = gen::star_pair(t, D, D);
    auto z2 = t.input("zeta2", t.rng.family(t.model, product(D, D), D, anchor(z1.body)));
    return star(z2, star(z1, x)) == star(family_star(z2, z1), x);
  });
  r.add("def-anchor-homomorphism", "anchor homomorphism", any_model, [D](Trial& t) {
    auto [x, z] = gen::star_pair(t, D, gen::D2());
    return anchor(star(z, x)) == star(anchor_family(z), anchor(x));
  });
  r.add("prop-t2.4.2", "t2.4.2", any_model, [D](Trial& t) {
    auto m = gen::base(t);
    auto phi = t.input("phi", t.rng.family_at(t.model, D, D, m));
    Point zd = zero(t.model, m, D);
    Point x = star(phi, zd);
    auto [phi2, x2] = unstar(x, D, D);
    if (!(apply(std_map("first"), x) == zd) || !(phi2.body == phi.body) || !(x2 == zd)) return false;
    // The other direction: any x with trivial first restriction comes from some Φ.
    Point y = t.input("y", t.rng.agreeing(zero(t.model, m, gen::D2()), std_map("first")));
    auto [phi3, y0] = unstar(y, D, D);
    return y0 == zd && star(phi3, y0) == y;
  });
  r.add("prop-t2.6-part1", "t2.6", any_model, [D](Trial& t) {
    auto [x, z1] = gen::star_pair(t, D, gen::D2());
    auto z2 = t.input("zeta2", Family<Rational>{D, gen::D2(), t.rng.agreeing(z1.body, lifted_map(D, "incl12"))});
    return star(family_strong_diff(z2, z1), x) == strong_diff_slot(1, star(z2, x), star(z1, x));
  });
  r.add("prop-t2.6-part2", "t2.6", any_model, [](Trial& t) {
    auto [x, y] = gen::agreeing_pair(t, gen::D2(), std_map("incl12"));
    const Diagram& diff = catalog_diagram("diff");
    Point path = solve_limit(diff, std::vector<Point>{anchor(x), anchor(y)});
    auto z = t.input("zeta", t.rng.family(t.model, diff.apex, gen::D(), path));
    Point lhs = apply(std_map("twist"), star(reindex(z, std_map("diff-corner")), strong_diff(y, x)));
    Point rhs = strong_diff_slot(3, star(reindex(z, std_map("diff-leg1")), y), star(reindex(z, std_map("diff-leg0")), x));
    return lhs == rhs;
  });
}

inline void euclid_suite(RegistryBuilder r) {
  const SimplicialSpace D = gen::D();
  r.add("thm-t2.4.3-roundtrip", "t2.4.3", any_model, [D](Trial& t) {
    auto phi = t.input("phi", t.rng.family_at(t.model, D, D, gen::base(t)));
    Point y = euclid_derivative(phi);
    return euclid_family(family_at_zero(phi), y).body == phi.body;
  });
  r.add("thm-t2.4.3-inverse", "t2.4.3", any_model, [D](Trial& t) {
    auto m = gen::base(t);
    Point phi0 = gen::element(t, "phi0", D, m), y = gen::element(t, "y", D, m);
    return euclid_derivative(euclid_family(phi0, y)) == y;
  });
  r.add("thm-t2.4.3-uniqueness", "t2.4.3", any_model, [](Trial& t) {
    auto c = certify(t.model, catalog_diagram("kl"));
    t.note("kernel_rank", c.kernel_rank);
    return c.kernel_rank == 0 && c.perceived_limit();
  }, 1);
}

/// I + d·C for a k×k rational matrix C.
inline Point tangent_from_matrix(const Model& model, const std::vector<Rational>& c) {
  const int k = model.matrix_size();
  std::vector<Weil> coords;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Weil e = Weil::constant(gen::D(), Rational(i == j ? 1 : 0));
      e[1] = c[static_cast<std::size_t>(i * k + j)];
      coords.push_back(std::move(e));
    }
  return Point(model, gen::D(), std::move(coords));
}

inline std::vector<Rational> velocity(const Point& x) {
  std::vector<Rational> v;
  for (const auto& c : x.coords()) v.push_back(c[1]);
  return v;
}

inline std::vector<Rational> matrix_product(int k, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        out[static_cast<std::size_t>(i * k + j)] +=
            a[static_cast<std::size_t>(i * k + l)] * b[static_cast<std::size_t>(l * k + j)];
  return out;
}

inline void bracket_suite(RegistryBuilder r) {
  auto three = [](Trial& t) {
    return std::array<Point, 3>{gen::element(t, "x", gen::D(), {}), gen::element(t, "y", gen::D(), {}),
                                gen::element(t, "z", gen::D(), {})};
  };
  r.add("prop-tr1", "tr1", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Point xx = circledast(x, x);
    Point s = apply(std_map("sum-d1d2"), x);
    return s == apply(std_map("incl12"), xx) && s == apply(std_map("incl12-swapped"), xx);
  });
  r.add("prop-tr2", "tr2", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Point sum = add(x, y);
    const auto& diag = std_map("diag");
    return sum == apply(diag, circledast(y, x)) && sum == apply(diag, circledast(x, y)) &&
           apply(std_map("first"), circledast(y, x)) == x && apply(std_map("second"), circledast(y, x)) == y;
  });
  r.add("prop-tr3", "tr3", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Point w = commutator_square(x, y);
    Point zero_d = zero_tangent(x);
    if (!(apply(std_map("first"), w) == zero_d) || !(apply(std_map("second"), w) == zero_d)) return false;
    return apply(std_map("mult"), kl_solve(w)) == w;
  });
  r.add("prop-tr4", "tr4", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    const SimpMorphism incl = std_map("incl12");
    return apply(incl, circledast(y, x)) == apply(incl, apply(std_map("twist"), circledast(x, y))) &&
           bracket(x, y) == bracket_by_strong_diff(x, y);
  });
  r.add("prop-tr5", "tr5", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return bracket(y, x) == negate(bracket(x, y)) && bracket(x, x) == zero_tangent(x);
  });
  r.add("prop-circledast-assoc", "circledast associativity", matrix_model, [](Trial& t) {
    Point z = gen::element(t, "z", gen::D(), {});
    Point y = gen::element(t, "y", SimplicialSpace::first_order(2), {});
    Point x = gen::element(t, "x", gen::D2(), {});
    return circledast(x, circledast(y, z)) == circledast(circledast(x, y), z);
  });
  r.add("prop-circledast-strong-diff-1", "circledast and strong differences", matrix_model, [](Trial& t) {
    Point x = gen::element(t, "x", gen::D(), {});
    Point y = gen::element(t, "y", gen::D2(), {});
    Point z = t.input("z", t.rng.agreeing(y, std_map("incl12")));
    const auto& r1 = std_map("incl-slot1");
    return apply(r1, circledast(y, x)) == apply(r1, circledast(z, x)) &&
           strong_diff_slot(1, circledast(z, x), circledast(y, x)) == circledast(strong_diff(z, y), x);
  });
  r.add("prop-circledast-strong-diff-2", "circledast and strong differences", matrix_model, [](Trial& t) {
    Point x = gen::element(t, "x", gen::D2(), {});
    Point y = t.input("y", t.rng.agreeing(x, std_map("incl12")));
    Point z = gen::element(t, "z", gen::D(), {});
    const auto& r3 = std_map("incl-slot3");
    return apply(r3, circledast(z, x)) == apply(r3, circledast(z, y)) &&
           apply(std_map("twist"), strong_diff_slot(3, circledast(z, y), circledast(z, x))) ==
               circledast(z, strong_diff(y, x));
  });
  // u_σ from the ⊛-products of x, y, z.
  struct U {
    std::map<std::string, Point> u;
    explicit U(const Point& x, const Point& y, const Point& z) {
      auto cube = [](const Point& a, const Point& b, const Point& c) { return circledast(std::vector<Point>{a, b, c}); };
      u.emplace("123", cube(z, y, x));
      u.emplace("132", apply(std_map("s132"), cube(y, z, x)));
      u.emplace("213", apply(std_map("s213"), cube(z, x, y)));
      u.emplace("231", apply(std_map("s231"), cube(x, z, y)));
      u.emplace("312", apply(std_map("s312"), cube(y, x, z)));
      u.emplace("321", apply(std_map("s321"), cube(x, y, z)));
    }
    Point expr(int slot, const char* a, const char* b, const char* c, const char* d) {
      return strong_diff(strong_diff_slot(slot, u.at(a), u.at(b)), strong_diff_slot(slot, u.at(c), u.at(d)));
    }
  };
  r.add("prop-u123-x-yz", "u123", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return bracket(x, bracket(y, z)) == U(x, y, z).expr(1, "123", "132", "231", "321");
  });
  r.add("prop-u123-y-zx", "u123", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return bracket(y, bracket(z, x)) == U(x, y, z).expr(2, "231", "213", "312", "132");
  });
  r.add("prop-u123-z-xy", "u123", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    return bracket(z, bracket(x, y)) == U(x, y, z).expr(3, "312", "321", "123", "213");
  });
  r.add("thm-jacobi", "Jacobi identity", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Point s = add(add(bracket(x, bracket(y, z)), bracket(y, bracket(z, x))), bracket(z, bracket(x, y)));
    return s == zero_tangent(x);
  });
  r.add("bracket-matrix-oracle", "bracket of matrix tangents", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    const int k = t.model.matrix_size();
    auto a = velocity(x), b = velocity(y);
    auto ba = matrix_product(k, b, a), ab = matrix_product(k, a, b);
    for (std::size_t i = 0; i < ba.size(); ++i) ba[i] -= ab[i];
    return bracket(x, y) == tangent_from_matrix(t.model, ba);
  });
  r.add("bracket-matrix-fixture", "bracket of matrix tangents", [](const Model& m) { return m == Model::matrix_group(2); },
        [](Trial& t) {
          Point x = t.input("x", tangent_from_matrix(t.model, {0, 1, 0, 0}));
          Point y = t.input("y", tangent_from_matrix(t.model, {0, 0, 1, 0}));
          return bracket(x, y) == tangent_from_matrix(t.model, {-1, 0, 0, 1});
        }, 1);
  r.add("bracket-bilinearity", "open question: bilinearity", matrix_model, [three](Trial& t) {
    auto [x, y, z] = three(t);
    Rational a = t.input("a", t.rng.rational());
    return bracket(x, add(y, z)) == add(bracket(x, y), bracket(x, z)) &&
           bracket(scalar(a, x), y) == scalar(a, bracket(x, y));
  });
}

inline void ad_suite(RegistryBuilder r) {
  r.add("cond-ad-2", "ad condition 2", matrix_model, [](Trial& t) {
    Point x = gen::element(t, "x", gen::D(), {}), y = gen::element(t, "y", gen::D(), {});
    return ad_difference(x, y).body == scaled_family(bracket(x, y)).body;
  });
  r.add("cond-ad-2-sign-corrected", "ad condition 2 with [y,x]", matrix_model, [](Trial& t) {
    Point x = gen::element(t, "x", gen::D(), {}), y = gen::element(t, "y", gen::D(), {});
    return ad_difference(x, y).body == scaled_family(bracket(y, x)).body;
  });
}

inline void sections_suite(RegistryBuilder r) {
  r.add("prop-lt1", "lt1", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y"), z = gen::field(t, "Z");
    const unsigned cap = t.config.degree_cap;
    return circledcirc(circledcirc(z, y, cap), x, cap) == circledcirc(z, circledcirc(y, x, cap), cap);
  });
  r.add("prop-lt2", "lt2", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    Section yx = circledcirc(y, x, t.config.degree_cap);
    SimpMorphism g = t.input("g", random_map_into(t.rng, gen::D2()));
    SimpMorphism f = t.input("f", random_map_into(t.rng, g.domain()));
    std::vector<Polynomial> sum;
    for (std::size_t i = 0; i < x.vector_part().size(); ++i) sum.push_back(x.vector_part()[i] + y.vector_part()[i]);
    return apply(compose(g, f), yx) == apply(f, apply(g, yx)) && add(x, y) == add(y, x) &&
           add(x, y).vector_part() == sum;
  });
  r.add("prop-lt3", "lt3", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    const auto& pm = product_maps(gen::D(), gen::D());
    Section yx = circledcirc(y, x, t.config.degree_cap);
    return apply(pm.i1, yx) == x && apply(pm.i2, yx) == y;
  });
  r.add("thm-lt4-antisymmetry", "lt4", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    const unsigned cap = t.config.degree_cap;
    return section_bracket(y, x, cap) == negate(section_bracket(x, y, cap)) &&
           section_bracket(x, x, cap) == Section::zero(t.model, gen::D());
  });
  r.add("thm-lt4-jacobi", "lt4", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y"), z = gen::field(t, "Z");
    const unsigned cap = t.config.degree_cap;
    auto b = [cap](const Section& a, const Section& c) { return section_bracket(a, c, cap); };
    return add(add(b(x, b(y, z)), b(y, b(z, x))), b(z, b(x, y))) == Section::zero(t.model, gen::D());
  });
  r.add("thm-lt4-bilinearity", "lt4", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y"), z = gen::field(t, "Z");
    Rational a = t.input("a", t.rng.rational());
    const unsigned cap = t.config.degree_cap;
    return section_bracket(x, add(scalar(a, y), z), cap) ==
           add(scalar(a, section_bracket(x, y, cap)), section_bracket(x, z, cap));
  });
  r.add("prop-lt5", "lt5", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    ScalarField f = gen::function(t, "f");
    const unsigned cap = t.config.degree_cap;
    return circledcirc(y, scale(f, x), cap) == slot_scale(f, 1, circledcirc(y, x, cap));
  });
  r.add("prop-lt6", "lt6", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    ScalarField f = gen::function(t, "f");
    const unsigned cap = t.config.degree_cap;
    Section lhs = strong_diff(circledcirc(scale(f, y), x, cap), slot_scale(f, 2, circledcirc(y, x, cap)));
    return lhs == scale(lie_derivative(x, f), y);
  });
  r.add("prop-lt6-lie-derivative", "lt6", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X");
    ScalarField f = gen::function(t, "f");
    return lie_derivative(x, f) == lie_derivative_gradient(x, f);
  });
  r.add("prop-lt7", "lt7", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    ScalarField f = gen::function(t, "f");
    return leibniz_residual(x, y, f, t.config.degree_cap) == Section::zero(t.model, gen::D());
  });
  r.add("thm-lie-algebroid-anchor", "anchor compatibility", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    auto v_of = [](const PolyPoint& p) {
      const PolyPoint a = anchor(p);
      std::vector<Polynomial> v;
      for (const auto& c : a.coords()) v.push_back(c[1]);
      return v;
    };
    return v_of(section_bracket(x, y, t.config.degree_cap).body()) == gen::jacobian_bracket(v_of(x.body()), v_of(y.body()));
  });
  r.add("section-bracket-oracle", "vector field bracket", formal_base, [](Trial& t) {
    Section x = gen::field(t, "X"), y = gen::field(t, "Y");
    return section_bracket(x, y, t.config.degree_cap).vector_part() ==
           gen::jacobian_bracket(x.vector_part(), y.vector_part());
  });
}

inline Property certification_property(const Diagram& d) {
  return Property{"diagram-" + d.name, "quasi-colimit diagram", "diagrams", any_model,
                  [d](Trial& t) {
                    auto c = certify(t.model, d);
                    t.input("diagram", d.signature());
                    t.note("rank", c.rank);
                    t.note("kernel_rank", c.kernel_rank);
                    t.note("compatible_dim", c.compatible_dim);
                    t.note("relations_hold", c.relations_hold);
                    return c.perceived_limit();
                  },
                  1};
}

}  // namespace detail

inline const std::vector<Property>& registry() {
  static const std::vector<Property> props = [] {
    std::vector<Property> out;
    detail::weil_suite({out, "weil"});
    detail::simp_suite({out, "simp"});
    for (const auto& d : catalog_diagrams()) out.push_back(detail::certification_property(d));
    detail::models_suite({out, "models"});
    detail::module_suite({out, "module-axioms"});
    detail::strong_diff_suite({out, "strong-diff"});
    detail::jacobi_general_suite({out, "jacobi-general"});
    detail::star_suite({out, "star-axioms"});
    detail::euclid_suite({out, "euclid"});
    detail::bracket_suite({out, "bracket"});
    detail::ad_suite({out, "ad-condition"});
    detail::sections_suite({out, "sections"});
    return out;
  }();
  return props;
}

// ---- execution -------------------------------------------------------------------

inline unsigned thread_count(const SuiteConfig& c) {
  unsigned n = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WEILGROID_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

/// Runs every property on every applicable model. Trial seeds depend only on
/// (seed, property, model, trial), and records are sorted by id and model.
/// `blocked` maps a model name to the reason its properties cannot run.
inline VerificationReport run_properties(const std::vector<const Property*>& props, const SuiteConfig& cfg,
                                         const std::map<std::string, json>& blocked = {}) {
  static const Model placeholder = Model::formal_space(0);
  struct Job {
    const Property* p;
    const Model* model;
    std::string model_name;
    int trials;
    const json* blocked;
  };
  std::vector<Job> jobs;
  for (const Property* p : props) {
    const int n = p->fixed_trials ? p->fixed_trials : cfg.trials_for(p->suite);
    if (!p->applies) {
      jobs.push_back(Job{p, &placeholder, "any", n, nullptr});
      continue;
    }
    for (const auto& m : cfg.models) {
      if (!p->applies(m)) continue;
      auto it = blocked.find(m.name());
      jobs.push_back(Job{p, &m, m.name(), n, it == blocked.end() || p->suite == "diagrams" ? nullptr : &it->second});
    }
  }

  struct Outcome {
    bool ok = true;
    std::optional<json> counterexample;
    double ms = 0;
  };
  std::vector<std::vector<Outcome>> results(jobs.size());
  std::vector<std::pair<std::size_t, int>> tasks;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    results[j].resize(static_cast<std::size_t>(jobs[j].trials));
    for (int i = 0; i < jobs[j].trials; ++i) tasks.emplace_back(j, i);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      const auto [j, i] = tasks[k];
      const Job& job = jobs[j];
      Outcome& out = results[j][static_cast<std::size_t>(i)];
      if (job.blocked) {
        out.ok = false;
        out.counterexample = json{{"trial", i}, {"blocked", *job.blocked}};
        continue;
      }
      const std::uint64_t seed = trial_seed(cfg.seed, job.p->id + "@" + job.model_name, static_cast<std::uint64_t>(i));
      const auto start = std::chrono::steady_clock::now();
      Trial trial(*job.model, seed, cfg);
      try {
        out.ok = job.p->check(trial);
        if (!out.ok) out.counterexample = trial.counterexample(static_cast<std::uint64_t>(i), seed);
      } catch (const std::exception& e) {
        out.ok = false;
        trial.note("error", e.what());
        out.counterexample = trial.counterexample(static_cast<std::uint64_t>(i), seed);
      }
      out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::min<unsigned>(thread_count(cfg), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerificationReport report;
  report.seed = cfg.seed;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    Record rec{jobs[j].p->id, jobs[j].p->citation, jobs[j].p->suite, jobs[j].model_name, jobs[j].trials, 0, {}, 0};
    for (auto& o : results[j]) {
      rec.wall_ms += o.ms;
      if (o.ok) continue;
      if (rec.failures++ == 0) rec.counterexample = std::move(o.counterexample);
    }
    report.records.push_back(std::move(rec));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.id, a.model) < std::tie(b.id, b.model);
  });
  return report;
}

/// Catalog diagrams that fail to certify in each configured model.
inline std::map<std::string, json> uncertified(const SuiteConfig& cfg) {
  std::map<std::string, json> out;
  for (const auto& m : cfg.models) {
    json bad = json::array();
    for (const auto& d : catalog_diagrams())
      if (!certify(m, d).perceived_limit()) bad.push_back(d.name);
    if (!bad.empty()) out[m.name()] = json{{"uncertified_diagrams", bad}};
  }
  return out;
}

inline VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<const Property*> props;
  for (const auto& p : registry())
    if (cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), p.suite) != cfg.suites.end())
      props.push_back(&p);
  return run_properties(props, cfg, uncertified(cfg));
}

/// Certificates for `diagrams` (the catalog by default) in every configured model.
inline VerificationReport certify_diagrams(const SuiteConfig& cfg, const std::vector<Diagram>& diagrams) {
  cfg.validate();
  std::vector<Property> props;
  for (const auto& d : diagrams) props.push_back(detail::certification_property(d));
  std::vector<const Property*> ptrs;
  for (const auto& p : props) ptrs.push_back(&p);
  return run_properties(ptrs, cfg);
}

/// Labels the registry has to cover, one per in-scope result.
inline const std::vector<std::string>& required_citations() {
  static const std::vector<std::string> labels = {
      "tn2.1", "tn2.2", "strong difference cocycle", "tn2.3", "tn2.4", "d2.4", "t2.4.2", "l2.1", "t2.4.3", "t2.6",
      "anchor homomorphism", "kernel of a homomorphism", "finite coproducts to products", "anchor natural transformation",
      "tr1", "tr2", "tr3", "tr4", "tr5", "circledast associativity", "circledast and strong differences", "u123",
      "Jacobi identity", "ad condition 2", "lt1", "lt2", "lt3", "lt4", "lt5", "lt6", "lt7", "anchor compatibility",
      "quasi-colimit diagram"};
  return labels;
}

}  // namespace weilgroid
