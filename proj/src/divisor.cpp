#include "tropos/divisor.hpp"

#include "tropos/error.hpp"

namespace tropos {

Divisor::Divisor(GraphPtr g, const std::map<Point, std::int64_t>& entries) : graph_(std::move(g)) {
  for (const auto& [p, m] : entries) add(p, m);
}

std::int64_t Divisor::operator[](const Point& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, std::int64_t mult) {
  graph_->validate(p);
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(p, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, m] : entries_) d += m;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, m] : entries_) {
    if (m < 0) return false;
  }
  return true;
}

bool Divisor::is_effective_away(const Point& base) const {
  for (const auto& [p, m] : entries_) {
    if (m < 0 && !(p == base)) return false;
  }
  return true;
}

bool Divisor::supported_on_vertices() const {
  for (const auto& [p, m] : entries_) {
    if (!p.is_vertex()) return false;
  }
  return true;
}

std::vector<Point> Divisor::support() const {
  std::vector<Point> out;
  for (const auto& [p, m] : entries_) out.push_back(p);
  return out;
}

Divisor Divisor::vertex_part() const {
  Divisor d(graph_);
  for (const auto& [p, m] : entries_) {
    if (p.is_vertex()) d.entries_.emplace(p, m);
  }
  return d;
}

Divisor Divisor::edge_part() const {
  Divisor d(graph_);
  for (const auto& [p, m] : entries_) {
    if (!p.is_vertex()) d.entries_.emplace(p, m);
  }
  return d;
}

std::vector<std::int64_t> Divisor::vertex_vector() const {
  std::vector<std::int64_t> v(graph_->vertex_count(), 0);
  for (const auto& [p, m] : entries_) {
    if (!p.is_vertex()) {
      throw Error(ErrorCode::NotOnGrid, "chip at " + graph_->describe(p) + " is not on a model vertex");
    }
    v[p.vertex_index()] = m;
  }
  return v;
}

Divisor Divisor::from_vertex_vector(GraphPtr g, const std::vector<std::int64_t>& values) {
  if (values.size() != g->vertex_count()) throw Error(ErrorCode::InvalidArgument, "vector length differs from vertex count");
  Divisor d(std::move(g));
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] != 0) d.entries_.emplace(Point::vertex(v), values[v]);
  }
  return d;
}

Divisor Divisor::to_fine(const Refinement& r) const {
  require_same_graph(graph_, r.coarse);
  Divisor d(r.fine);
  for (const auto& [p, m] : entries_) d.add(r.to_fine(p), m);
  return d;
}

Divisor Divisor::to_coarse(const Refinement& r) const {
  require_same_graph(graph_, r.fine);
  Divisor d(r.coarse);
  for (const auto& [p, m] : entries_) d.add(r.to_coarse(p), m);
  return d;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  if (!graph_) graph_ = other.graph_;
  require_same_graph(graph_, other.graph_);
  for (const auto& [p, m] : other.entries_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  if (!graph_) graph_ = other.graph_;
  require_same_graph(graph_, other.graph_);
  for (const auto& [p, m] : other.entries_) add(p, -m);
  return *this;
}

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::scaled(std::int64_t c) const {
  Divisor d(graph_);
  if (c == 0) return d;
  for (const auto& [p, m] : entries_) d.entries_.emplace(p, m * c);
  return d;
}

std::string Divisor::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : entries_) {
    if (!out.empty()) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    std::int64_t a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += graph_->describe(p);
  }
  return out;
}

Divisor canonical_divisor(const GraphPtr& g) {
  Divisor k(g);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    k.add(Point::vertex(v), 2 * g->vertex(v).weight - 2 + g->valence(v));
  }
  return k;
}

}  // namespace tropos
