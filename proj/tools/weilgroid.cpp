#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weilgroid/weilgroid.hpp"

namespace wg = weilgroid;
using wg::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) wg::fail(wg::ErrorKind::ConfigInvalid, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    wg::fail(wg::ErrorKind::Parse, path + ": " + e.what());
  }
}

/// A request given inline (--request) or as a file (--input).
json request_json(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty()) {
    try {
      return json::parse(inline_text);
    } catch (const json::parse_error& e) {
      wg::fail(wg::ErrorKind::Parse, std::string("request: ") + e.what());
    }
  }
  if (!path.empty()) return read_json_file(path);
  wg::fail(wg::ErrorKind::ConfigInvalid, "give the request with --request or --input");
}

void write_output(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) wg::fail(wg::ErrorKind::ConfigInvalid, "cannot write '" + path + "'");
  out << text;
}

void print_report(const wg::VerificationReport& r, bool timing) {
  for (const auto& x : r.records) {
    std::cout << (x.failures ? "FAIL " : "PASS ") << x.id << " [" << x.model << "] " << x.trials - x.failures << "/"
              << x.trials;
    if (timing) std::cout << " " << std::fixed << std::setprecision(1) << x.wall_ms << " ms";
    std::cout << "\n";
  }
  std::size_t failed = 0;
  for (const auto& x : r.records) failed += x.failures ? 1 : 0;
  std::cout << (r.pass() ? "PASS" : "FAIL") << ": " << r.records.size() - failed << "/" << r.records.size()
            << " properties hold\n";
}

wg::Point element_field(const json& req, const char* key, const wg::Model& model) {
  if (!req.contains(key)) wg::fail(wg::ErrorKind::ConfigInvalid, std::string("request needs '") + key + "'");
  return wg::point_from_json(req[key], &model);
}

wg::Model request_model(const json& req) {
  if (!req.contains("model")) wg::fail(wg::ErrorKind::ConfigInvalid, "request needs a 'model'");
  return wg::model_from_json(req["model"]);
}

void emit(const json& result, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << result.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string coords_text(const wg::Point& x) {
  std::string s;
  for (std::size_t i = 0; i < x.coords().size(); ++i) s += (i ? "\n" : "") + wg::to_string(x.coord(i));
  return s;
}

int run_basis(const std::string& space_text, bool as_json) {
  wg::SimplicialSpace s = wg::parse_space(space_text);
  json mons = json::array();
  std::string text;
  for (wg::Mask m : s.basis()) {
    mons.push_back(wg::monomial_name(m));
    text += wg::monomial_name(m) + "\n";
  }
  text += "dimension " + std::to_string(s.dimension());
  emit(json{{"space", s.to_string()}, {"dimension", s.dimension()}, {"basis", mons}}, as_json, text);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weil-algebra engine and verifier for synthetic algebroids"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run property suites with seeded randomized trials");
  std::string config_path, json_path;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  int trials = 0;
  bool timing = false;
  verify->add_option("--config", config_path, "Suite config (JSON)")->required();
  verify->add_option("--suite", suites, "Suite name (repeatable)");
  auto* seed_opt = verify->add_option("--seed", seed, "Override the base seed");
  auto* trials_opt = verify->add_option("--trials", trials, "Override the trial count");
  verify->add_option("--json", json_path, "Write the report as JSON ('-' for stdout)");
  verify->add_flag("--timing", timing, "Include wall time per property");

  // certify
  auto* cert = app.add_subcommand("certify", "Certify catalog diagrams as perceived limits");
  std::string cert_config, cert_catalog, cert_json;
  bool cert_timing = false;
  cert->add_option("--config", cert_config, "Config naming the models (JSON)")->required();
  cert->add_option("--catalog", cert_catalog, "Diagram catalog to certify instead of the built-in one");
  cert->add_option("--json", cert_json, "Write the report as JSON ('-' for stdout)");
  cert->add_flag("--timing", cert_timing, "Include wall time per diagram");

  // basis
  auto* basis = app.add_subcommand("basis", "List the monomial basis of a space");
  std::string basis_space;
  bool basis_json = false;
  basis->add_option("space", basis_space, "Space such as D(3) or D^3{12}")->required();
  basis->add_flag("--json", basis_json, "Print JSON");

  // compute
  auto* compute = app.add_subcommand("compute", "Evaluate one construction exactly");
  compute->require_subcommand(1);
  bool as_json = false;
  compute->add_flag("--json", as_json, "Print JSON");
  std::string request_text, request_path;
  auto add_request = [&](CLI::App* c) {
    c->add_option("--request", request_text, "Request as inline JSON");
    c->add_option("--input", request_path, "Request JSON file");
  };
  auto* c_basis = compute->add_subcommand("basis", "Monomial basis of a space");
  std::string c_space;
  c_basis->add_option("space", c_space, "Space")->required();
  auto* c_morph = compute->add_subcommand("morphism", "Validate a map and print its pullback matrix");
  std::string m_domain, m_codomain, m_map;
  c_morph->add_option("--domain", m_domain)->required();
  c_morph->add_option("--codomain", m_codomain)->required();
  c_morph->add_option("--map", m_map, "e.g. '(d1,d2) -> d1*d2'")->required();
  auto* c_apply = compute->add_subcommand("apply", "A^f(x): {model, map: {domain, codomain, map}, x}");
  add_request(c_apply);
  auto* c_add = compute->add_subcommand("add", "x + y in A^1: {model, x, y}");
  add_request(c_add);
  auto* c_sdiff = compute->add_subcommand("strong-diff", "y -. x (optionally in a slot): {model, x, y, slot?}");
  add_request(c_sdiff);
  auto* c_bracket = compute->add_subcommand("bracket", "[x, y] in the matrix-group model: {model, x, y}");
  add_request(c_bracket);
  auto* c_sbracket = compute->add_subcommand("section-bracket", "[X, Y] of polynomial vector fields");
  add_request(c_sbracket);
  std::string sx = "X", sy = "Y";
  unsigned cap = wg::kDefaultDegreeCap;
  c_sbracket->add_option("--x", sx, "Name of the first field");
  c_sbracket->add_option("--y", sy, "Name of the second field");
  c_sbracket->add_option("--degree-cap", cap, "Degree cap for intermediate sections");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      wg::SuiteConfig cfg = wg::config_from_json(read_json_file(config_path));
      if (!suites.empty()) {
        cfg.suites.clear();
        for (const auto& s : suites) cfg.suites.push_back(wg::canonical_suite(s));
      }
      if (*seed_opt) cfg.seed = seed;
      if (*trials_opt) {
        cfg.trials = trials;
        cfg.suite_trials.clear();
      }
      cfg.validate();
      wg::VerificationReport r = wg::run_suite(cfg);
      if (json_path != "-") print_report(r, timing);
      if (!json_path.empty()) write_output(wg::to_json(r, timing), json_path);
      return r.pass() ? kExitPass : kExitFail;
    }
    if (*cert) {
      wg::SuiteConfig cfg = wg::config_from_json(read_json_file(cert_config));
      std::vector<wg::Diagram> diagrams =
          cert_catalog.empty() ? wg::catalog_diagrams() : wg::parse_diagram_catalog(read_json_file(cert_catalog).dump());
      wg::VerificationReport r = wg::certify_diagrams(cfg, diagrams);
      if (cert_json != "-") print_report(r, cert_timing);
      if (!cert_json.empty()) write_output(wg::to_json(r, cert_timing), cert_json);
      return r.pass() ? kExitPass : kExitFail;
    }
    if (*basis) return run_basis(basis_space, basis_json);
    if (*c_basis) return run_basis(c_space, as_json);
    if (*c_morph) {
      auto f = wg::parse_morphism(wg::parse_space(m_domain), wg::parse_space(m_codomain), m_map);
      wg::Matrix mat = f.matrix();
      json rows = json::array();
      std::string text = f.domain().to_string() + " -> " + f.codomain().to_string() + ": " + f.to_string();
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        json row = json::array();
        text += "\n";
        for (std::size_t j = 0; j < mat.cols(); ++j) {
          row.push_back(mat(i, j).get_str());
          text += (j ? " " : "") + mat(i, j).get_str();
        }
        rows.push_back(row);
      }
      emit(json{{"map", wg::to_json(f)}, {"pullback", rows}}, as_json, text);
      return kExitPass;
    }
    if (*c_apply) {
      json req = request_json(request_text, request_path);
      wg::Model model = request_model(req);
      if (!req.contains("map") || !req["map"].is_object())
        wg::fail(wg::ErrorKind::ConfigInvalid, "request needs a 'map' object");
      const json& m = req["map"];
      auto f = wg::parse_morphism(wg::parse_space(m.value("domain", "")), wg::parse_space(m.value("codomain", "")),
                                  m.value("map", ""));
      wg::Point r = wg::apply(f, element_field(req, "x", model));
      emit(wg::to_json(r), as_json, coords_text(r));
      return kExitPass;
    }
    if (*c_add || *c_sdiff || *c_bracket) {
      json req = request_json(request_text, request_path);
      wg::Model model = request_model(req);
      wg::Point x = element_field(req, "x", model), y = element_field(req, "y", model);
      wg::Point r;
      if (*c_add) {
        r = wg::add(x, y);
      } else if (*c_bracket) {
        r = wg::bracket(x, y);
      } else {
        int slot = req.value("slot", 0);
        r = slot == 0 ? wg::strong_diff(y, x) : wg::strong_diff_slot(slot, y, x);
      }
      emit(wg::to_json(r), as_json, coords_text(r));
      return kExitPass;
    }
    if (*c_sbracket) {
      wg::SectionsInput in = wg::sections_from_json(request_json(request_text, request_path));
      auto field = [&](const std::string& n) {
        auto it = in.fields.find(n);
        if (it == in.fields.end()) wg::fail(wg::ErrorKind::ConfigInvalid, "no field named '" + n + "'");
        return it->second;
      };
      wg::Section b = wg::section_bracket(field(sx), field(sy), cap);
      json comps = json::array();
      std::string text;
      for (const auto& p : b.vector_part()) {
        comps.push_back(p.to_string());
        text += (text.empty() ? "" : "\n") + p.to_string();
      }
      emit(json{{"bracket", comps}, {"section", wg::to_json(b)}}, as_json, text);
      return kExitPass;
    }
  } catch (const wg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
