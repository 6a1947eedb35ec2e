#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "weilgroid/weilgroid.hpp"

namespace weilgroid {

template <Coefficient S>
void PrintTo(const Element<S>& x, std::ostream* os) { *os << to_string(x); }

inline void PrintTo(const SimplicialSpace& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace weilgroid

namespace support {

using namespace weilgroid;

inline Point pt(const Model& model, const char* space, const std::vector<std::string>& coords) {
  auto s = parse_space(space);
  std::vector<Weil> c;
  for (const auto& t : coords) c.push_back(parse_weil(s, t));
  return Point(model, s, std::move(c));
}

/// Matrix-group element I + (entries) with each entry given as text.
inline Point mat(int k, const char* space, const std::vector<std::string>& entries) {
  std::vector<std::string> full;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) full.push_back((i == j ? "1 + " : "0 + ") + entries[static_cast<std::size_t>(i * k + j)]);
  return pt(Model::matrix_group(k), space, full);
}

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ConfigInvalid;
}

}  // namespace support
