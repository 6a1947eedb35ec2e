#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weilgroid/error.hpp"
#include "weilgroid/limits.hpp"
#include "weilgroid/simp.hpp"

namespace weilgroid {

/// Built-in copies of data/maps.std and data/diagrams.json.
inline constexpr std::string_view kMapCatalog = R"~(# Named maps of Simp, one per line: name | domain | codomain | map
# Structural maps and the R-module structure on A^1
to-point        | D              | 1              | d -> ()
neg             | D              | D              | d -> (-d)
diag            | D              | D^2            | d -> (d, d)
first           | D              | D^2            | d -> (d, 0)
second          | D              | D^2            | d -> (0, d)
antidiag        | D              | D^2            | d -> (d, -d)
oplus-i1        | D              | D(2)           | d -> (d, 0)
oplus-i2        | D              | D(2)           | d -> (0, d)
oplus-diag      | D              | D(2)           | d -> (d, d)
incl12          | D(2)           | D^2            | (d1,d2) -> (d1, d2)
incl12-swapped  | D(2)           | D^2            | (d1,d2) -> (d2, d1)
sum-d1d2        | D(2)           | D              | (d1,d2) -> d1 + d2
twist           | D^2            | D^2            | (d1,d2) -> (d2, d1)
p1              | D^2            | D              | (d1,d2) -> d1
p2              | D^2            | D              | (d1,d2) -> d2
mult            | D^2            | D              | (d1,d2) -> d1*d2
shear           | D^2            | D^2            | (d1,d2) -> (d1, d1*d2)
mult-diag       | D^2            | D^2            | (d1,d2) -> (d1*d2, d1*d2)
pair-mult       | D^4            | D^2            | (d1,d2,d3,d4) -> (d1*d2, d3*d4)
# Strong difference on A^2 and the cocycle identity
diff-leg0       | D^2            | D^3{13,23}     | (d1,d2) -> (d1, d2, 0)
diff-leg1       | D^2            | D^3{13,23}     | (d1,d2) -> (d1, d2, d1*d2)
diff-corner     | D              | D^3{13,23}     | d -> (0, 0, d)
diff-twist      | D^3{13,23}     | D^3{13,23}     | (d1,d2,d3) -> (d2, d1, d3)
diff-reflect    | D^3{13,23}     | D^3{13,23}     | (d1,d2,d3) -> (d1, d2, d1*d2 - d3)
phi1            | D^2            | D^4{13,14,23,24,34} | (d1,d2) -> (d1, d2, 0, 0)
phi2            | D^2            | D^4{13,14,23,24,34} | (d1,d2) -> (d1, d2, d1*d2, 0)
phi3            | D^2            | D^4{13,14,23,24,34} | (d1,d2) -> (d1, d2, 0, d1*d2)
triple-lift     | D^3{13,23}     | D^4{13,14,23,24,34} | (d1,d2,d3) -> (d1, d2, d3, 0)
triple-shift    | D^3{13,23}     | D^4{13,14,23,24,34} | (d1,d2,d3) -> (d1, d2, d1*d2 - d3, d3)
triple-corner3  | D              | D^4{13,14,23,24,34} | d -> (0, 0, d, 0)
triple-corner4  | D              | D^4{13,14,23,24,34} | d -> (0, 0, 0, d)
triple-oplus    | D(2)           | D^4{13,14,23,24,34} | (d1,d2) -> (0, 0, d1 - d2, d2)
# Strong differences on A^3
incl-slot1      | D^3{23}        | D^3            | (d1,d2,d3) -> (d1, d2, d3)
incl-slot2      | D^3{13}        | D^3            | (d1,d2,d3) -> (d1, d2, d3)
incl-slot3      | D^3{12}        | D^3            | (d1,d2,d3) -> (d1, d2, d3)
diff1-leg0      | D^3            | D^4{24,34}     | (d1,d2,d3) -> (d1, d2, d3, 0)
diff1-leg1      | D^3            | D^4{24,34}     | (d1,d2,d3) -> (d1, d2, d3, d2*d3)
diff1-corner    | D^2            | D^4{24,34}     | (d1,d2) -> (d1, 0, 0, d2)
diff2-leg0      | D^3            | D^4{14,34}     | (d1,d2,d3) -> (d1, d2, d3, 0)
diff2-leg1      | D^3            | D^4{14,34}     | (d1,d2,d3) -> (d1, d2, d3, d1*d3)
diff2-corner    | D^2            | D^4{14,34}     | (d1,d2) -> (0, d1, 0, d2)
diff3-leg0      | D^3            | D^4{14,24}     | (d1,d2,d3) -> (d1, d2, d3, 0)
diff3-leg1      | D^3            | D^4{14,24}     | (d1,d2,d3) -> (d1, d2, d3, d1*d2)
diff3-corner    | D^2            | D^4{14,24}     | (d1,d2) -> (0, 0, d1, d2)
s213            | D^3            | D^3            | (d1,d2,d3) -> (d2, d1, d3)
s321            | D^3            | D^3            | (d1,d2,d3) -> (d3, d2, d1)
s132            | D^3            | D^3            | (d1,d2,d3) -> (d1, d3, d2)
s231            | D^3            | D^3            | (d1,d2,d3) -> (d2, d3, d1)
s312            | D^3            | D^3            | (d1,d2,d3) -> (d3, d1, d2)
# Totally intransitive algebroids: the bracket
bracket-restrict | D^2           | D^4            | (d1,d2) -> (d1, d2, -d1, -d2)
bracket-x       | D^2            | D^4            | (d1,d2) -> (d1, 0, -d2, 0)
bracket-y       | D^2            | D^4            | (d1,d2) -> (0, d1, 0, -d2)
bracket-twin    | D^2            | D^4            | (d1,d2) -> (d1, d2, d1, d2)
tr4-rotate      | D^3{13,23}     | D^3            | (d1,d2,d3) -> (d2, d3, d1)
)~";

inline constexpr std::string_view kDiagramCatalog = R"~([
  {
    "name": "sum",
    "role": "two tangents at one point glue to a tangent over D(2); defines addition",
    "apex": "D(2)",
    "legs": [
      {"domain": "D", "components": "d -> (d, 0)"},
      {"domain": "D", "components": "d -> (0, d)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "1", "components": ["() -> (0)", "() -> (0)"]}
    ]
  },
  {
    "name": "kl",
    "role": "microsquares trivial on both axes come from a unique tangent through d1*d2",
    "apex": "D",
    "legs": [
      {"domain": "D^2", "components": "(d1,d2) -> d1*d2"}
    ],
    "relations": [
      {"between": [0, 0], "domain": "D", "components": ["d -> (d, 0)", "d -> (0, 0)"]},
      {"between": [0, 0], "domain": "D", "components": ["d -> (0, d)", "d -> (0, 0)"]}
    ]
  },
  {
    "name": "diff",
    "role": "two microsquares agreeing on D(2) glue over D^2+D; defines the strong difference",
    "apex": "D^3{13,23}",
    "legs": [
      {"domain": "D^2", "components": "(d1,d2) -> (d1, d2, 0)"},
      {"domain": "D^2", "components": "(d1,d2) -> (d1, d2, d1*d2)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "D(2)", "components": ["(d1,d2) -> (d1, d2)", "(d1,d2) -> (d1, d2)"]}
    ]
  },
  {
    "name": "triple",
    "role": "three microsquares agreeing on D(2) glue over D^2+D+D; yields the cocycle identity",
    "apex": "D^4{13,14,23,24,34}",
    "legs": [
      {"domain": "D^2", "components": "(d1,d2) -> (d1, d2, 0, 0)"},
      {"domain": "D^2", "components": "(d1,d2) -> (d1, d2, d1*d2, 0)"},
      {"domain": "D^2", "components": "(d1,d2) -> (d1, d2, 0, d1*d2)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "D(2)", "components": ["(d1,d2) -> (d1, d2)", "(d1,d2) -> (d1, d2)"]},
      {"between": [1, 2], "domain": "D(2)", "components": ["(d1,d2) -> (d1, d2)", "(d1,d2) -> (d1, d2)"]},
      {"between": [0, 2], "domain": "D(2)", "components": ["(d1,d2) -> (d1, d2)", "(d1,d2) -> (d1, d2)"]}
    ]
  },
  {
    "name": "diff1",
    "role": "microcubes agreeing on D x (D+D) glue over D^4{24,34}; defines the first slot strong difference",
    "apex": "D^4{24,34}",
    "legs": [
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, 0)"},
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, d2*d3)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "D^3{23}", "components": ["(d1,d2,d3) -> (d1, d2, d3)", "(d1,d2,d3) -> (d1, d2, d3)"]}
    ]
  },
  {
    "name": "diff2",
    "role": "microcubes agreeing on D^3{13} glue over D^4{14,34}; defines the second slot strong difference",
    "apex": "D^4{14,34}",
    "legs": [
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, 0)"},
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, d1*d3)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "D^3{13}", "components": ["(d1,d2,d3) -> (d1, d2, d3)", "(d1,d2,d3) -> (d1, d2, d3)"]}
    ]
  },
  {
    "name": "diff3",
    "role": "microcubes agreeing on (D+D) x D glue over D^4{14,24}; defines the third slot strong difference",
    "apex": "D^4{14,24}",
    "legs": [
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, 0)"},
      {"domain": "D^3", "components": "(d1,d2,d3) -> (d1, d2, d3, d1*d2)"}
    ],
    "relations": [
      {"between": [0, 1], "domain": "D^3{12}", "components": ["(d1,d2,d3) -> (d1, d2, d3)", "(d1,d2,d3) -> (d1, d2, d3)"]}
    ]
  }
]
)~";

struct NamedMap {
  std::string name;
  SimpMorphism map;
};

/// Parses `name | domain | codomain | map` lines; `#` starts a comment.
inline std::vector<NamedMap> parse_map_catalog(std::string_view text) {
  std::vector<NamedMap> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string::npos; start = bar + 1)
      fields.push_back(line.substr(start, bar - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 4) fail(ErrorKind::ConfigInvalid, "map catalog line " + std::to_string(lineno) + ": expected 4 fields");
    for (auto& f : fields) {
      f.erase(0, f.find_first_not_of(" \t\r"));
      f.erase(f.find_last_not_of(" \t\r") + 1);
    }
    try {
      out.push_back({fields[0], parse_morphism(parse_space(fields[1]), parse_space(fields[2]), fields[3])});
    } catch (const Error& e) {
      fail(e.kind(), "map catalog line " + std::to_string(lineno) + " (" + fields[0] + "): " + e.what());
    }
  }
  return out;
}

inline std::vector<Diagram> parse_diagram_catalog(std::string_view text) {
  std::vector<Diagram> out;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ConfigInvalid, std::string("diagram catalog: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorKind::ConfigInvalid, "diagram catalog must be a JSON list");
  try {
    for (const auto& entry : doc) {
      Diagram d;
      d.name = entry.at("name").get<std::string>();
      d.role = entry.value("role", "");
      d.apex = parse_space(entry.at("apex").get<std::string>());
      for (const auto& leg : entry.at("legs"))
        d.legs.push_back(parse_morphism(parse_space(leg.at("domain").get<std::string>()), d.apex,
                                        leg.at("components").get<std::string>()));
      for (const auto& rel : entry.value("relations", nlohmann::json::array())) {
        auto between = rel.at("between").get<std::vector<std::size_t>>();
        auto maps = rel.at("components").get<std::vector<std::string>>();
        if (between.size() != 2 || maps.size() != 2)
          fail(ErrorKind::ConfigInvalid, "diagram '" + d.name + "': a relation joins exactly two legs");
        if (between[0] >= d.legs.size() || between[1] >= d.legs.size())
          fail(ErrorKind::ConfigInvalid, "diagram '" + d.name + "': relation refers to a missing leg");
        SimplicialSpace dom = parse_space(rel.at("domain").get<std::string>());
        d.relations.push_back(Relation{between[0], parse_morphism(dom, d.legs[between[0]].domain(), maps[0]),
                                       between[1], parse_morphism(dom, d.legs[between[1]].domain(), maps[1])});
      }
      validate_diagram(d);
      out.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ConfigInvalid, std::string("diagram catalog: ") + e.what());
  }
  return out;
}

inline const std::map<std::string, SimpMorphism>& std_maps() {
  static const std::map<std::string, SimpMorphism> maps = [] {
    std::map<std::string, SimpMorphism> m;
    for (auto& [name, f] : parse_map_catalog(kMapCatalog))
      if (!m.emplace(name, f).second) fail(ErrorKind::ConfigInvalid, "duplicate map '" + name + "'");
    return m;
  }();
  return maps;
}

inline const SimpMorphism& std_map(const std::string& name) {
  const auto& m = std_maps();
  auto it = m.find(name);
  if (it == m.end()) fail(ErrorKind::ConfigInvalid, "unknown catalog map '" + name + "'");
  return it->second;
}

inline const std::vector<Diagram>& catalog_diagrams() {
  static const std::vector<Diagram> diagrams = parse_diagram_catalog(kDiagramCatalog);
  return diagrams;
}

inline const Diagram& catalog_diagram(const std::string& name) {
  for (const auto& d : catalog_diagrams())
    if (d.name == name) return d;
  fail(ErrorKind::ConfigInvalid, "unknown diagram '" + name + "'");
}

/// Apex D², one leg d ↦ (d,0): the d₂ and d₁d₂ directions are unconstrained.
inline Diagram broken_diagram() {
  Diagram d;
  d.name = "broken";
  d.role = "underdetermined fixture";
  d.apex = SimplicialSpace::cube(2);
  d.legs.push_back(std_map("first"));
  return d;
}

}  // namespace weilgroid
