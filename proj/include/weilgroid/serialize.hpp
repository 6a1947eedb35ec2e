#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weilgroid/error.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/sections.hpp"
#include "weilgroid/weil.hpp"

namespace weilgroid {

using json = nlohmann::ordered_json;

inline json to_json(const Model& m) {
  json j;
  j["kind"] = m.kind_name();
  if (m.kind() == ModelKind::MatrixGroup)
    j["size"] = m.parameter();
  else
    j["dim"] = m.parameter();
  return j;
}

namespace detail {

inline int positive_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(ErrorKind::ConfigInvalid, std::string("model config needs an integer '") + key + "'");
  return j[key].get<int>();
}

}  // namespace detail

/// {"kind":"formal-space","dim":2}, {"kind":"pair-groupoid","dim":1},
/// {"kind":"matrix-group","size":3}.
inline Model model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(ErrorKind::ConfigInvalid, "model config needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "formal-space") return Model::formal_space(detail::positive_field(j, "dim"));
  if (kind == "pair-groupoid") return Model::pair_groupoid(detail::positive_field(j, "dim"));
  if (kind == "matrix-group") return Model::matrix_group(detail::positive_field(j, "size"));
  fail(ErrorKind::ConfigInvalid, "unknown model kind '" + kind + "'");
}

template <Coefficient S>
json to_json(const Element<S>& x) {
  json j;
  j["model"] = to_json(x.model());
  j["space"] = x.space().to_string();
  json c = json::array();
  for (const auto& e : x.coords()) c.push_back(to_string(e));
  j["coords"] = std::move(c);
  return j;
}

template <Coefficient S>
json to_json(const Family<S>& z) {
  json j;
  j["index"] = z.index.to_string();
  j["value"] = z.value.to_string();
  j["body"] = to_json(z.body);
  return j;
}

inline json to_json(const Section& x) {
  json j;
  j["model"] = to_json(x.model());
  j["space"] = x.space().to_string();
  json c = json::array();
  for (const auto& e : x.body().coords()) c.push_back(to_string(e));
  j["coords"] = std::move(c);
  return j;
}

inline json to_json(const ScalarField& f) { return f.f.to_string(); }
inline json to_json(const std::string& s) { return s; }
inline json to_json(const SimplicialSpace& s) { return s.to_string(); }
inline json to_json(const Rational& q) { return q.get_str(); }
inline json to_json(const SimpMorphism& f) {
  return json{{"domain", f.domain().to_string()}, {"codomain", f.codomain().to_string()}, {"map", f.to_string()}};
}

/// {"model": {...}, "space": "D^2", "coords": ["1 + 2*d1", ...]}; the model
/// may be supplied separately.
inline Point point_from_json(const json& j, const Model* model = nullptr) {
  if (!j.is_object()) fail(ErrorKind::ConfigInvalid, "element must be a JSON object");
  Model m = model ? *model : model_from_json(j.value("model", json::object()));
  if (!j.contains("space") || !j["space"].is_string()) fail(ErrorKind::ConfigInvalid, "element needs a 'space'");
  SimplicialSpace s = parse_space(j["space"].get<std::string>());
  if (!j.contains("coords") || !j["coords"].is_array()) fail(ErrorKind::ConfigInvalid, "element needs 'coords'");
  std::vector<Weil> coords;
  for (const auto& c : j["coords"]) {
    if (!c.is_string()) fail(ErrorKind::ConfigInvalid, "coordinates are polynomial strings in d1..dn");
    coords.push_back(parse_weil(s, c.get<std::string>()));
  }
  return Point(m, s, std::move(coords));
}

/// Vector fields and scalar functions over the formal base, e.g.
/// {"dim":1, "fields":{"X":["1"],"Y":["m1^2"]}, "functions":{"f":"m1"}}.
/// An optional "model" object selects the pair groupoid instead.
struct SectionsInput {
  Model model = Model::formal_space(1);
  std::map<std::string, Section> fields;
  std::map<std::string, ScalarField> functions;
};

inline SectionsInput sections_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    fail(ErrorKind::ConfigInvalid, "sections input needs an integer 'dim'");
  const int dim = j["dim"].get<int>();
  SectionsInput in;
  in.model = j.contains("model") ? model_from_json(j["model"]) : Model::formal_space(dim);
  if (in.model.base_dim() != dim) fail(ErrorKind::ConfigInvalid, "model dimension differs from 'dim'");
  const json fields = j.value("fields", json::object()), functions = j.value("functions", json::object());
  if (!fields.is_object() || !functions.is_object())
    fail(ErrorKind::ConfigInvalid, "'fields' and 'functions' must be objects");
  for (const auto& [name, comps] : fields.items()) {
    if (!comps.is_array()) fail(ErrorKind::ConfigInvalid, "field '" + name + "' must be a list of polynomials");
    std::vector<Polynomial> v;
    for (const auto& c : comps) {
      if (!c.is_string()) fail(ErrorKind::ConfigInvalid, "field '" + name + "' components must be strings");
      v.push_back(parse_base_polynomial(c.get<std::string>(), dim));
    }
    in.fields.emplace(name, Section::vector_field(in.model, v));
  }
  for (const auto& [name, p] : functions.items()) {
    if (!p.is_string()) fail(ErrorKind::ConfigInvalid, "function '" + name + "' must be a polynomial string");
    in.functions.emplace(name, ScalarField{dim, parse_base_polynomial(p.get<std::string>(), dim)});
  }
  return in;
}

}  // namespace weilgroid
