#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/graph.hpp"
#include "tropos/rational.hpp"

namespace testing {

using tropos::Divisor;
using tropos::GraphPtr;
using tropos::Point;
using tropos::Rational;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

/// Graph from (id, from, to, length) tuples; vertices in the order given.
struct EdgeRow {
  std::string id, from, to;
  Rational length = Rational(1);
};

inline GraphPtr make_graph(const std::vector<std::string>& vertices, const std::vector<EdgeRow>& edges) {
  tropos::GraphSpec spec;
  for (const auto& v : vertices) spec.vertices.push_back({v, 0});
  for (const auto& e : edges) spec.edges.push_back({e.id, e.from, e.to, e.length});
  return tropos::build_graph(spec);
}

inline GraphPtr path_graph(int n) {
  std::vector<std::string> vs;
  std::vector<EdgeRow> es;
  for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) es.push_back({"e" + std::to_string(i), vs[i - 1], vs[i]});
  return make_graph(vs, es);
}

inline GraphPtr star_graph(int leaves) {
  std::vector<std::string> vs{"c"};
  std::vector<EdgeRow> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.push_back({"s" + std::to_string(i), "c", vs.back()});
  }
  return make_graph(vs, es);
}

/// Divisor with chips at named vertices.
inline Divisor at_vertices(const GraphPtr& g, const std::vector<std::pair<std::string, std::int64_t>>& chips) {
  Divisor d(g);
  for (const auto& [id, c] : chips) d.add(Point::vertex(g->vertex_index(id)), c);
  return d;
}

inline Point on_edge(const GraphPtr& g, const std::string& edge, const Rational& offset) {
  return g->point_on_edge(edge, offset);
}

}  // namespace testing
