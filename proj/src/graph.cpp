#include "tropos/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tropos/error.hpp"

namespace tropos {

MetricGraph MetricGraph::build(const GraphSpec& spec) {
  MetricGraph g;
  std::vector<VertexSpec> vs = spec.vertices;
  std::sort(vs.begin(), vs.end(), [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].id.empty()) throw Error(ErrorCode::ParseError, "vertex with empty id");
    if (i > 0 && vs[i].id == vs[i - 1].id) throw Error(ErrorCode::DuplicateId, "duplicate vertex id '" + vs[i].id + "'");
    if (vs[i].weight < 0) throw Error(ErrorCode::InvalidArgument, "negative weight on vertex '" + vs[i].id + "'");
    g.vertex_lookup_.emplace(vs[i].id, i);
    g.vertices_.push_back({vs[i].id, vs[i].weight});
  }

  std::vector<EdgeSpec> es = spec.edges;
  std::sort(es.begin(), es.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < es.size(); ++i) {
    const EdgeSpec& e = es[i];
    if (e.id.empty()) throw Error(ErrorCode::ParseError, "edge with empty id");
    if (i > 0 && e.id == es[i - 1].id) throw Error(ErrorCode::DuplicateId, "duplicate edge id '" + e.id + "'");
    if (e.length <= 0) throw Error(ErrorCode::NonPositiveLength, "edge '" + e.id + "' has nonpositive length");
    auto from = g.vertex_lookup_.find(e.from);
    auto to = g.vertex_lookup_.find(e.to);
    if (from == g.vertex_lookup_.end() || to == g.vertex_lookup_.end()) {
      throw Error(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' references an unknown vertex");
    }
    g.edge_lookup_.emplace(e.id, i);
    g.edges_.push_back({e.id, from->second, to->second, e.length});
  }

  g.incidence_.assign(g.vertices_.size(), {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.incidence_[g.edges_[i].from].push_back({i, true});
    g.incidence_[g.edges_[i].to].push_back({i, false});
  }
  return g;
}

std::optional<std::size_t> MetricGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MetricGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MetricGraph::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw Error(ErrorCode::UnknownId, "unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::size_t MetricGraph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw Error(ErrorCode::UnknownId, "unknown edge '" + std::string(id) + "'");
  return *e;
}

std::size_t MetricGraph::base_of(const HalfEdge& h) const {
  const Edge& e = edges_.at(h.edge);
  return h.at_origin ? e.from : e.to;
}

std::size_t MetricGraph::other_end(const HalfEdge& h) const {
  const Edge& e = edges_.at(h.edge);
  return h.at_origin ? e.to : e.from;
}

bool MetricGraph::has_self_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::vector<std::size_t> MetricGraph::component_labels() const {
  const std::size_t none = vertices_.size();
  std::vector<std::size_t> label(vertices_.size(), none);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (label[s] != none) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const HalfEdge& h : incidence_[v]) {
        std::size_t w = other_end(h);
        if (label[w] == none) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t MetricGraph::component_count() const {
  auto labels = component_labels();
  if (labels.empty()) return 0;
  return *std::max_element(labels.begin(), labels.end()) + 1;
}

bool MetricGraph::is_uniform() const {
  for (const Edge& e : edges_) {
    if (e.length != edges_.front().length) return false;
  }
  return true;
}

Point MetricGraph::point_on_edge(std::size_t e, const Rational& offset) const {
  if (e >= edges_.size()) throw Error(ErrorCode::InvalidPoint, "edge index out of range");
  const Edge& edge = edges_[e];
  if (offset < 0 || offset > edge.length) {
    throw Error(ErrorCode::InvalidPoint, "offset " + to_string(offset) + " outside edge '" + edge.id + "'");
  }
  if (offset == 0) return Point::vertex(edge.from);
  if (offset == edge.length) return Point::vertex(edge.to);
  return Point::on_edge(e, offset);
}

Point MetricGraph::point_on_edge(std::string_view edge_id, const Rational& offset) const {
  return point_on_edge(edge_index(edge_id), offset);
}

void MetricGraph::validate(const Point& p) const {
  if (p.is_vertex()) {
    if (p.vertex_index() >= vertices_.size()) throw Error(ErrorCode::InvalidPoint, "vertex index out of range");
    return;
  }
  if (p.edge_index() >= edges_.size()) throw Error(ErrorCode::InvalidPoint, "edge index out of range");
  if (p.offset() <= 0 || p.offset() >= edges_[p.edge_index()].length) {
    throw Error(ErrorCode::InvalidPoint, "offset not interior to edge '" + edges_[p.edge_index()].id + "'");
  }
}

std::string MetricGraph::describe(const Point& p) const {
  if (p.is_vertex()) return vertices_.at(p.vertex_index()).id;
  return edges_.at(p.edge_index()).id + "+" + to_string(p.offset());
}

GraphSpec MetricGraph::spec() const {
  GraphSpec s;
  for (const Vertex& v : vertices_) s.vertices.push_back({v.id, v.weight});
  for (const Edge& e : edges_) s.edges.push_back({e.id, vertices_[e.from].id, vertices_[e.to].id, e.length});
  return s;
}

GraphPtr build_graph(const GraphSpec& spec) {
  return std::make_shared<const MetricGraph>(MetricGraph::build(spec));
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (!same_graph(a, b)) throw Error(ErrorCode::GraphMismatch, "operands live on different graphs");
}

int genus(const MetricGraph& g) {
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + static_cast<int>(g.component_count());
}

int weighted_genus(const MetricGraph& g) {
  int h = 0;
  for (const Vertex& v : g.vertices()) h += v.weight;
  return genus(g) + h;
}

Subgraph Subgraph::whole(const MetricGraph& g) {
  return {std::vector<bool>(g.vertex_count(), true), std::vector<bool>(g.edge_count(), true)};
}

Subgraph Subgraph::empty(const MetricGraph& g) {
  return {std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false)};
}

Subgraph Subgraph::spanned(const MetricGraph& g, const std::vector<bool>& members) {
  Subgraph z{members, std::vector<bool>(g.edge_count(), false)};
  z.vertices.resize(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    z.edges[i] = z.vertices[e.from] && z.vertices[e.to];
  }
  return z;
}

bool Subgraph::is_closed(const MetricGraph& g) const {
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (edges[i] && !(vertices[g.edge(i).from] && vertices[g.edge(i).to])) return false;
  }
  return true;
}

std::size_t Subgraph::vertex_count() const { return std::count(vertices.begin(), vertices.end(), true); }
std::size_t Subgraph::edge_count() const { return std::count(edges.begin(), edges.end(), true); }

int out_degree(const MetricGraph& g, const Subgraph& z, std::size_t v) {
  int out = 0;
  for (const HalfEdge& h : g.half_edges(v)) {
    if (!z.edges[h.edge]) ++out;
  }
  return out;
}

}  // namespace tropos
