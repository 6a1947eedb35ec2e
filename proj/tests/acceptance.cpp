// One line per acceptance criterion; exit status 1 if any line is FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "weilgroid/weilgroid.hpp"

using namespace weilgroid;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const Model F1 = Model::formal_space(1), F2 = Model::formal_space(2), P1 = Model::pair_groupoid(1),
            M2 = Model::matrix_group(2), M3 = Model::matrix_group(3);

SuiteConfig config(std::vector<std::string> suites, std::vector<Model> models, int trials, std::uint64_t seed) {
  SuiteConfig c;
  c.suites = std::move(suites);
  c.models = std::move(models);
  c.trials = trials;
  c.seed = seed;
  return c;
}

/// Every record ran `trials` times without failure, and `ids` all appear.
Outcome summarize(const VerificationReport& r, int trials, const std::set<std::string>& ids = {},
                  std::size_t expected_records = 0) {
  std::size_t failed = 0, runs = 0;
  std::string first;
  std::set<std::string> seen;
  for (const auto& x : r.records) {
    seen.insert(x.id);
    runs += static_cast<std::size_t>(x.trials);
    if (x.failures || (x.trials != trials && x.trials != 1)) {
      if (!failed++) first = x.id + " [" + x.model + "] " + std::to_string(x.failures) + "/" + std::to_string(x.trials);
    }
  }
  for (const auto& id : ids)
    if (!seen.count(id)) return {false, "missing property " + id};
  if (expected_records && r.records.size() != expected_records)
    return {false, std::to_string(r.records.size()) + " records, expected " + std::to_string(expected_records)};
  std::string d = std::to_string(r.records.size()) + " checks, " + std::to_string(runs) + " trials";
  if (failed) d += ", " + std::to_string(failed) + " failing, first " + first;
  return {failed == 0, d};
}

// ---- independent oracles ----------------------------------------------------------

/// a + b·d1 + c·d2 + e·d1d2 with d1² = d2² = 0.
using Dual2 = std::array<mpq_class, 4>;
using DualMatrix = std::vector<std::vector<Dual2>>;

Dual2 dual_mul(const Dual2& x, const Dual2& y) {
  return {x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0],
          x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0]};
}

DualMatrix dual_product(const DualMatrix& a, const DualMatrix& b) {
  const std::size_t k = a.size();
  DualMatrix out(k, std::vector<Dual2>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Dual2 t = dual_mul(a[i][l], b[l][j]);
        for (int c = 0; c < 4; ++c) out[i][j][c] += t[c];
      }
  return out;
}

/// I + s·e·M with e the nilpotent at index `slot` (1 for d1, 2 for d2).
DualMatrix perturbed(const std::vector<std::vector<long>>& m, int slot, int sign) {
  const std::size_t k = m.size();
  DualMatrix out(k, std::vector<Dual2>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out[i][j][0] = i == j ? 1 : 0;
      out[i][j][static_cast<std::size_t>(slot)] = sign * m[i][j];
    }
  return out;
}

/// Expands (I − d2B)(I − d1A)(I + d2B)(I + d1A); the group commutator is
/// I + d1d2·C, and C is the bracket of I + dA and I + dB.
std::optional<std::vector<std::vector<mpq_class>>> commutator_oracle(const std::vector<std::vector<long>>& a,
                                                                     const std::vector<std::vector<long>>& b) {
  DualMatrix p = dual_product(dual_product(perturbed(b, 2, -1), perturbed(a, 1, -1)),
                              dual_product(perturbed(b, 2, 1), perturbed(a, 1, 1)));
  std::vector<std::vector<mpq_class>> c(a.size(), std::vector<mpq_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (p[i][j][0] != (i == j ? 1 : 0) || p[i][j][1] != 0 || p[i][j][2] != 0) return std::nullopt;
      c[i][j] = p[i][j][3];
    }
  return c;
}

/// Dense polynomials in m1, m2 keyed by exponent pair.
using Poly2 = std::map<std::pair<int, int>, mpq_class>;

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return out;
}

Poly2 poly_diff(const Poly2& a, int var) {
  Poly2 out;
  for (const auto& [e, c] : a) {
    const int p = var == 0 ? e.first : e.second;
    if (p == 0) continue;
    out[var == 0 ? std::pair{e.first - 1, e.second} : std::pair{e.first, e.second - 1}] += c * p;
  }
  return out;
}

void poly_axpy(Poly2& acc, int sign, const Poly2& x) {
  for (const auto& [e, c] : x) acc[e] += sign * c;
}

Poly2 trimmed(Poly2 p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

std::string poly_text(const Poly2& p) {
  std::string s;
  for (const auto& [e, c] : p) {
    if (c == 0) continue;
    s += (s.empty() ? "" : " + ") + std::string("(") + c.get_str() + ")";
    for (int i = 0; i < e.first; ++i) s += "*m1";
    for (int i = 0; i < e.second; ++i) s += "*m2";
  }
  return s.empty() ? "0" : s;
}

Poly2 from_library(const Polynomial& p) {
  Poly2 out;
  for (const auto& [k, c] : p.terms()) {
    auto e = Polynomial::unpack(k);
    out[{static_cast<int>(e[0]), static_cast<int>(e[1])}] += c;
  }
  return trimmed(out);
}

/// (∂w)v − (∂v)w.
std::vector<Poly2> jacobian_oracle(const std::vector<Poly2>& v, const std::vector<Poly2>& w) {
  std::vector<Poly2> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      poly_axpy(out[i], 1, poly_mul(poly_diff(w[i], static_cast<int>(j)), v[j]));
      poly_axpy(out[i], -1, poly_mul(poly_diff(v[i], static_cast<int>(j)), w[j]));
    }
    out[i] = trimmed(out[i]);
  }
  return out;
}

std::vector<Poly2> random_field(std::mt19937_64& g, int dim, int degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<Poly2> v(static_cast<std::size_t>(dim));
  for (auto& p : v)
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree && (dim == 2 || b == 0); ++b) {
        int c = coeff(g);
        if (c) p[{a, b}] = c;
      }
  return v;
}

// ---- criteria -----------------------------------------------------------------------

Outcome weil_dimensions() {
  for (int m = 0; m <= 6; ++m) {
    if (SimplicialSpace::cube(m).dimension() != (std::size_t{1} << m)) return {false, "W(D^" + std::to_string(m) + ")"};
    if (SimplicialSpace::first_order(m).dimension() != static_cast<std::size_t>(m + 1))
      return {false, "W(D(" + std::to_string(m) + "))"};
  }
  return {true, "m, n = 0..6"};
}

Outcome diagram_certification() {
  const std::set<std::string> names = {"sum", "kl", "diff", "triple", "diff1", "diff2", "diff3"};
  std::set<std::string> seen;
  int ok = 0, total = 0;
  std::string bad;
  for (const auto& d : catalog_diagrams()) {
    seen.insert(d.name);
    for (const Model& m : {F1, F2, P1, M2, M3}) {
      ++total;
      if (certify(m, d).perceived_limit())
        ++ok;
      else if (bad.empty())
        bad = d.name + " in " + m.name();
    }
  }
  if (seen != names) return {false, "catalog does not hold exactly the seven diagrams"};
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " certified" + (bad.empty() ? "" : ", " + bad)};
}

Outcome module_axioms() {
  return summarize(run_suite(config({"module-axioms"}, {F1, F2, P1, M2, M3}, 100, 101)), 100, {}, 8 * 5);
}

Outcome strong_differences() {
  std::set<std::string> ids = {"prop-tn2.2-twist", "prop-tn2.2-negation", "prop-tn2.2-slot-scaling-1",
                               "prop-tn2.2-slot-scaling-2", "prop-cocycle"};
  for (int slot = 1; slot <= 3; ++slot)
    for (const char* s : {"213", "321", "132"}) ids.insert("prop-tn2.3-slot" + std::to_string(slot) + "-s" + s);
  return summarize(run_suite(config({"strong-diff"}, {F1, F2, M2}, 50, 102)), 50, ids, ids.size() * 3);
}

Outcome general_jacobi() {
  return summarize(run_suite(config({"jacobi-general"}, {F2, M2}, 25, 103)), 25, {"thm-tn2.4"}, 2);
}

Outcome star_axioms() {
  return summarize(run_suite(config({"star-axioms"}, {P1, M2}, 50, 104)), 50,
                   {"def-d2.4-cond1", "def-d2.4-cond2", "def-d2.4-cond3-slot1", "def-d2.4-cond3-slot2",
                    "def-d2.4-cond4", "def-anchor-homomorphism"});
}

Outcome euclid() {
  auto r = run_suite(config({"euclid"}, {F1, F2, P1, M2}, 50, 105));
  return summarize(r, 50, {"thm-t2.4.3-roundtrip", "thm-t2.4.3-inverse", "thm-t2.4.3-uniqueness"});
}

Outcome bracket_suite() {
  Outcome o = summarize(run_suite(config({"bracket"}, {M2, M3}, 50, 106)), 50,
                        {"prop-tr3", "prop-tr4", "prop-tr5", "prop-u123-x-yz", "thm-jacobi"});
  if (!o.pass) return o;
  std::mt19937_64 g(2024);
  std::uniform_int_distribution<long> entry(-6, 6);
  int agree = 0;
  for (int pair = 0; pair < 20; ++pair) {
    const int k = pair % 2 ? 3 : 2;
    std::vector<std::vector<long>> a(k, std::vector<long>(k)), b = a;
    std::vector<Weil> xa, xb;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        a[i][j] = entry(g);
        b[i][j] = entry(g);
        xa.push_back(parse_weil(SimplicialSpace::D(), (i == j ? "1 + " : "") + std::to_string(a[i][j]) + "*d1"));
        xb.push_back(parse_weil(SimplicialSpace::D(), (i == j ? "1 + " : "") + std::to_string(b[i][j]) + "*d1"));
      }
    const Model m = Model::matrix_group(k);
    Point got = bracket(Point(m, SimplicialSpace::D(), xa), Point(m, SimplicialSpace::D(), xb));
    auto c = commutator_oracle(a, b);
    if (!c) return {false, "oracle: commutator has first-order terms"};
    bool same = true;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const Weil& e = got.coord(static_cast<std::size_t>(i * k + j));
        same = same && e[0] == (i == j ? 1 : 0) && e[1] == (*c)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    agree += same;
  }
  o.detail += "; oracle agrees on " + std::to_string(agree) + "/20 matrix pairs";
  o.pass = agree == 20;
  return o;
}

Outcome ad_condition() {
  auto r = run_suite(config({"ad-condition"}, {M2, M3}, 50, 107));
  int failures = 0, trials = 0, corrected = 0;
  for (const auto& x : r.records) {
    if (x.id == "cond-ad-2") {
      failures += x.failures;
      trials += x.trials;
    } else if (x.id == "cond-ad-2-sign-corrected" && x.failures == 0) {
      corrected += x.trials;
    }
  }
  std::string d = std::to_string(trials - failures) + "/" + std::to_string(trials) +
                  " trials hold; the conjugation gives d[y,x], which holds in " + std::to_string(corrected) + "/" +
                  std::to_string(trials);
  return {trials == 100 && failures == 0, d};
}

Outcome sections() {
  Outcome o = summarize(run_suite(config({"sections"}, {F1, F2, P1}, 50, 108)), 50,
                        {"prop-lt1", "prop-lt5", "prop-lt6", "prop-lt7", "thm-lt4-antisymmetry", "thm-lt4-jacobi",
                         "thm-lt4-bilinearity"});
  if (!o.pass) return o;
  std::mt19937_64 g(2025);
  int agree = 0;
  for (int pair = 0; pair < 20; ++pair) {
    const int dim = pair % 2 ? 2 : 1;
    auto v = random_field(g, dim, 3), w = random_field(g, dim, 3);
    auto to_section = [&](const std::vector<Poly2>& f) {
      std::vector<Polynomial> comps;
      for (const auto& p : f) comps.push_back(parse_base_polynomial(poly_text(p), dim));
      return Section::vector_field(Model::formal_space(dim), comps);
    };
    auto got = section_bracket(to_section(v), to_section(w)).vector_part();
    auto want = jacobian_oracle(v, w);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) same = from_library(got[i]) == want[i];
    agree += same;
  }
  o.detail += "; Jacobian oracle agrees on " + std::to_string(agree) + "/20 field pairs";
  o.pass = agree == 20;
  return o;
}

Outcome determinism() {
  SuiteConfig c = config({"weil", "module-axioms", "strong-diff", "star-axioms", "bracket", "ad-condition", "sections"},
                         {F1, P1, M2}, 5, 109);
  c.threads = 1;
  const std::string a = to_json(run_suite(c)).dump(2);
  c.threads = 0;
  const std::string b = to_json(run_suite(c)).dump(2);
  const std::string b2 = to_json(run_suite(c)).dump(2);
  return {a == b && b == b2, std::to_string(a.size()) + " bytes, three runs identical: " + (a == b && b == b2 ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"weil dimensions", 1, weil_dimensions},
      {"diagram certification", 5, diagram_certification},
      {"module axioms tn2.1", 5, module_axioms},
      {"strong differences", 20, strong_differences},
      {"general Jacobi tn2.4", 30, general_jacobi},
      {"star axioms d2.4 and anchor homomorphism", 20, star_axioms},
      {"Euclidean property t2.4.3", 5, euclid},
      {"matrix bracket", 60, bracket_suite},
      {"ad condition 2", 10, ad_condition},
      {"sections", 60, sections},
      {"determinism", 60, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > c.budget_s) {
      o.pass = false;
      o.detail += "; over budget";
    }
    all = all && o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", s, c.budget_s);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " (" << timing << ")" << std::endl;
  }
  return all ? 0 : 1;
}
