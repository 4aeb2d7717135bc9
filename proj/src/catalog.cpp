#include "tropos/catalog.hpp"

#include <charconv>

#include "tropos/error.hpp"

namespace tropos {

namespace {

EdgeSpec edge(std::string id, std::string from, std::string to, int length = 1) {
  return {std::move(id), std::move(from), std::move(to), Rational(length)};
}

std::string indexed(const char* prefix, int i, int n) {
  // zero padding keeps id order equal to numeric order
  std::string digits = std::to_string(i);
  std::string width = std::to_string(n);
  return prefix + std::string(width.size() - digits.size(), '0') + digits;
}

}  // namespace

GraphPtr theta_graph() {
  return build_graph({{{"v1"}, {"v2"}}, {edge("e1", "v1", "v2"), edge("e2", "v1", "v2"), edge("e3", "v1", "v2")}});
}

GraphPtr dumbbell_graph() {
  return build_graph({{{"v1"}, {"v2"}}, {edge("b", "v1", "v2"), edge("l1", "v1", "v1", 2), edge("l2", "v2", "v2", 2)}});
}

GraphPtr banana_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "banana graph needs at least one edge");
  GraphSpec spec{{{"v1"}, {"v2"}}, {}};
  for (int i = 1; i <= n; ++i) spec.edges.push_back(edge(indexed("e", i, n), "v1", "v2"));
  return build_graph(spec);
}

GraphPtr complete_graph_k4() {
  GraphSpec spec{{{"v1"}, {"v2"}, {"v3"}, {"v4"}}, {}};
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      spec.edges.push_back(edge("e" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i), "v" + std::to_string(j)));
    }
  }
  return build_graph(spec);
}

GraphPtr complete_bipartite_k33() {
  GraphSpec spec{{{"a1"}, {"a2"}, {"a3"}, {"b1"}, {"b2"}, {"b3"}}, {}};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      spec.edges.push_back(edge("e" + std::to_string(i) + std::to_string(j), "a" + std::to_string(i), "b" + std::to_string(j)));
    }
  }
  return build_graph(spec);
}

GraphPtr cycle_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cycle graph needs at least one vertex");
  GraphSpec spec;
  for (int i = 1; i <= n; ++i) spec.vertices.push_back({indexed("v", i, n)});
  for (int i = 1; i <= n; ++i) {
    spec.edges.push_back(edge(indexed("e", i, n), indexed("v", i, n), indexed("v", i % n + 1, n)));
  }
  return build_graph(spec);
}

GraphPtr two_cycles_two_bridges() {
  return build_graph({{{"a"}, {"b"}, {"c"}, {"d"}},
                      {edge("ab1", "a", "b"), edge("ab2", "a", "b"), edge("ac", "a", "c"), edge("bd", "b", "d"),
                       edge("cd1", "c", "d"), edge("cd2", "c", "d")}});
}

GraphPtr genus4_span_graph() {
  return build_graph({{{"a"}, {"b"}, {"c"}, {"d"}, {"e"}, {"f"}},
                      {edge("ab", "a", "b"), edge("ac", "a", "c"), edge("ad", "a", "d"), edge("bc", "b", "c"),
                       edge("be", "b", "e"), edge("cd", "c", "d"), edge("de", "d", "e"), edge("ef", "e", "f"),
                       edge("ff", "f", "f", 2)}});
}

GraphPtr catalog_graph(std::string_view name) {
  auto parametrized = [&](std::string_view family) -> std::optional<int> {
    if (name.size() < family.size() + 3 || name.substr(0, family.size()) != family) return std::nullopt;
    if (name[family.size()] != '(' || name.back() != ')') return std::nullopt;
    std::string_view digits = name.substr(family.size() + 1, name.size() - family.size() - 2);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return n;
  };
  if (name == "theta") return theta_graph();
  if (name == "dumbbell") return dumbbell_graph();
  if (name == "K4") return complete_graph_k4();
  if (name == "K33") return complete_bipartite_k33();
  if (name == "two-cycles-two-bridges") return two_cycles_two_bridges();
  if (name == "genus4-span") return genus4_span_graph();
  if (auto n = parametrized("banana")) return banana_graph(*n);
  if (auto n = parametrized("cycle")) return cycle_graph(*n);
  throw Error(ErrorCode::UnknownId, "no catalog graph named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"theta", "dumbbell", "banana(4)", "K4", "K33", "cycle(4)", "two-cycles-two-bridges", "genus4-span"};
}

}  // namespace tropos
