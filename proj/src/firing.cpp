#include "tropos/firing.hpp"

#include <algorithm>

#include "tropos/error.hpp"

namespace tropos {

LevelMap LevelMap::zero(GraphPtr g) {
  std::size_t n = g->vertex_count();
  return {std::move(g), std::vector<std::int64_t>(n, 0)};
}

LevelMap LevelMap::indicator(GraphPtr g, const std::vector<bool>& set) {
  LevelMap f = zero(std::move(g));
  for (std::size_t v = 0; v < f.values.size(); ++v) f.values[v] = set[v] ? 1 : 0;
  return f;
}

std::int64_t LevelMap::max_value() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::int64_t LevelMap::min_value() const {
  return values.empty() ? 0 : *std::min_element(values.begin(), values.end());
}

LevelMap LevelMap::normalized() const {
  LevelMap f = *this;
  std::int64_t low = min_value();
  for (auto& v : f.values) v -= low;
  return f;
}

LevelMap& LevelMap::operator+=(const LevelMap& other) {
  require_same_graph(graph, other.graph);
  for (std::size_t v = 0; v < values.size(); ++v) values[v] += other.values[v];
  return *this;
}

std::vector<std::int64_t> FiringMatrix::apply(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> out(entries.size(), 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += entries[i][j] * x[j];
  }
  return out;
}

void require_uniform(const MetricGraph& g) {
  if (!g.is_uniform()) throw Error(ErrorCode::NonUniformModel, "operation needs a model with equal edge lengths");
}

FiringMatrix firing_matrix(const MetricGraph& g) {
  require_uniform(g);
  const std::size_t n = g.vertex_count();
  FiringMatrix f{std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (const Edge& e : g.edges()) {
    // a loop adds 2 to Adj(v,v) and 2 to val(v), leaving the row balanced
    f.entries[e.from][e.to] += 1;
    f.entries[e.to][e.from] += 1;
  }
  for (std::size_t v = 0; v < n; ++v) f.entries[v][v] -= g.valence(v);
  return f;
}

Divisor div_of_level_map(const LevelMap& f) {
  return Divisor::from_vertex_vector(f.graph, firing_matrix(*f.graph).apply(f.values));
}

Divisor fire(const Divisor& d, const std::vector<bool>& set, std::int64_t multiplier) {
  const MetricGraph& g = *d.graph();
  Divisor out = d;
  for (const Edge& e : g.edges()) {
    if (set[e.from] == set[e.to]) continue;
    // chips move from the fired side across the edge
    std::size_t inside = set[e.from] ? e.from : e.to;
    std::size_t outside = set[e.from] ? e.to : e.from;
    out.add(Point::vertex(inside), -multiplier);
    out.add(Point::vertex(outside), multiplier);
  }
  return out;
}

bool can_fire(const MetricGraph& g, const Divisor& d, const std::vector<bool>& set) {
  std::vector<std::int64_t> out(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (set[e.from] != set[e.to]) ++out[set[e.from] ? e.from : e.to];
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (set[v] && d.at_vertex(v) < out[v]) return false;
  }
  return true;
}

namespace {

IntMatrix laplacian(const MetricGraph& g) {
  FiringMatrix f = firing_matrix(g);
  IntMatrix a;
  for (const auto& row : f.entries) {
    std::vector<BigInt> r;
    for (auto x : row) r.emplace_back(static_cast<long>(x));
    a.push_back(std::move(r));
  }
  return a;
}

}  // namespace

PrincipalSolver::PrincipalSolver(GraphPtr g) : graph_(std::move(g)), solver_(laplacian(*graph_)) {
  if (!graph_->is_connected()) throw Error(ErrorCode::DisconnectedInput, "principality test needs a connected graph");
}

std::optional<LevelMap> PrincipalSolver::solve(const Divisor& d) const {
  require_same_graph(graph_, d.graph());
  std::vector<BigInt> b;
  for (auto x : d.vertex_vector()) b.emplace_back(static_cast<long>(x));
  auto x = solver_.solve(b);
  if (!x) return std::nullopt;
  LevelMap f = LevelMap::zero(graph_);
  BigInt low = (*x).empty() ? BigInt(0) : (*x)[0];
  for (const auto& v : *x) low = std::min(low, v);
  for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = to_int64(BigInt((*x)[i] - low));
  return f;
}

std::optional<LevelMap> is_principal(const GraphPtr& g, const Divisor& d) {
  require_uniform(*g);
  return PrincipalSolver(g).solve(d);
}

std::optional<LevelMap> linear_equivalence_witness(const GraphPtr& g, const Divisor& d1, const Divisor& d2) {
  return is_principal(g, d2 - d1);
}

PLFunction level_map_to_pl(const Refinement& model, const Rational& step, const LevelMap& f) {
  require_same_graph(model.fine, f.graph);
  std::vector<Rational> values;
  values.reserve(f.values.size());
  for (auto v : f.values) values.push_back(step * static_cast<long>(v));
  return PLFunction::from_model_values(model, values);
}

}  // namespace tropos
