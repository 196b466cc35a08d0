#pragma once

#include "staymap/geom_core.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace staymap::test {

inline Rational R(const std::string& text) {
  auto v = parse_rational(text);
  if (!v) throw std::invalid_argument("bad literal in test: " + text);
  return *v;
}

/// 1D trajectory from (t, x) literals.
inline Trajectory<Rational> line(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<Vertex<Rational>> vs;
  for (const auto& [t, x] : rows) vs.push_back({R(t), {R(x), Rational(0)}});
  return Trajectory<Rational>(std::move(vs), 1);
}

struct Row2 {
  const char* t;
  const char* x;
  const char* y;
};

inline Trajectory<Rational> plane(std::initializer_list<Row2> rows) {
  std::vector<Vertex<Rational>> vs;
  for (const auto& r : rows) vs.push_back({R(r.t), {R(r.x), R(r.y)}});
  return Trajectory<Rational>(std::move(vs), 2);
}

inline Trajectory<Rational> tent() { return line({{"0", "0"}, {"4", "4"}, {"8", "0"}}); }

inline StayParams<Rational> params(const char* s, const char* g, const char* eps = "0") {
  return {R(s), R(g), R(eps)};
}

}  // namespace staymap::test
