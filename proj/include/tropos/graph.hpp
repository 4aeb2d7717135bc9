#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tropos/rational.hpp"

namespace tropos {

struct Vertex {
  std::string id;
  int weight = 0;  // genus decoration h(v)

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;
  Rational length;

  bool is_loop() const { return from == to; }
  bool operator==(const Edge& other) const {
    return id == other.id && from == other.from && to == other.to && length == other.length;
  }
};

/// Tangent direction at a vertex: the start of `edge` seen from its origin
/// (`at_origin`) or from its target.
struct HalfEdge {
  std::size_t edge = 0;
  bool at_origin = true;

  bool operator==(const HalfEdge&) const = default;
};

struct VertexSpec {
  std::string id;
  int weight = 0;
};

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  Rational length;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

/// A location on a metric graph: a vertex, or a strictly interior offset along
/// an edge measured from the edge's stored origin.
class Point {
 public:
  Point() = default;

  static Point vertex(std::size_t index) { return Point(index, Rational(0), false); }
  static Point on_edge(std::size_t edge, Rational offset) { return Point(edge, std::move(offset), true); }

  bool is_vertex() const { return !on_edge_; }
  std::size_t vertex_index() const { return index_; }
  std::size_t edge_index() const { return index_; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.on_edge_ == b.on_edge_ && a.index_ == b.index_ && a.offset_ == b.offset_;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.on_edge_ != b.on_edge_) return !a.on_edge_;
    if (a.index_ != b.index_) return a.index_ < b.index_;
    return a.offset_ < b.offset_;
  }

 private:
  Point(std::size_t index, Rational offset, bool on_edge)
      : index_(index), offset_(std::move(offset)), on_edge_(on_edge) {}

  std::size_t index_ = 0;
  Rational offset_;
  bool on_edge_ = false;
};

/// Immutable metric graph given by a model: vertices with genus weights and
/// edges with positive rational lengths. Multi-edges and self-loops are allowed.
/// Vertices and edges are stored sorted by id.
class MetricGraph {
 public:
  /// Validates the description and builds the adjacency index.
  static MetricGraph build(const GraphSpec& spec);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  /// Half-edges incident to v; a self-loop contributes both of its ends.
  const std::vector<HalfEdge>& half_edges(std::size_t v) const { return incidence_.at(v); }
  int valence(std::size_t v) const { return static_cast<int>(incidence_.at(v).size()); }
  int valence(const Point& p) const { return p.is_vertex() ? valence(p.vertex_index()) : 2; }
  std::size_t base_of(const HalfEdge& h) const;
  std::size_t other_end(const HalfEdge& h) const;

  bool has_self_loops() const;
  std::size_t component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  /// Component label for every vertex.
  std::vector<std::size_t> component_labels() const;

  /// All edges share one length.
  bool is_uniform() const;

  /// Point at `offset` along edge `e` from its origin. Offsets 0 and the
  /// edge length resolve to the endpoint vertices.
  Point point_on_edge(std::size_t e, const Rational& offset) const;
  Point point_on_edge(std::string_view edge_id, const Rational& offset) const;
  /// Checks that the point refers to this graph with a strictly interior offset.
  void validate(const Point& p) const;
  std::string describe(const Point& p) const;

  GraphSpec spec() const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incidence_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

using GraphPtr = std::shared_ptr<const MetricGraph>;

GraphPtr build_graph(const GraphSpec& spec);
bool same_graph(const GraphPtr& a, const GraphPtr& b);
/// Throws GraphMismatch unless both pointers describe the same graph.
void require_same_graph(const GraphPtr& a, const GraphPtr& b);

/// First Betti number |E| - |V| + #components.
int genus(const MetricGraph& g);
/// Betti number plus the sum of vertex weights.
int weighted_genus(const MetricGraph& g);

/// A subset of the vertices and edges of a model.
struct Subgraph {
  std::vector<bool> vertices;
  std::vector<bool> edges;

  static Subgraph whole(const MetricGraph& g);
  static Subgraph empty(const MetricGraph& g);
  /// Vertices of `members` plus every edge with both endpoints among them.
  static Subgraph spanned(const MetricGraph& g, const std::vector<bool>& members);

  /// Every included edge has both endpoints included.
  bool is_closed(const MetricGraph& g) const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
};

/// Valence of vertex v inside the closed complement of the interior of Z,
/// i.e. the number of half-edges at v whose edge is not in Z.
int out_degree(const MetricGraph& g, const Subgraph& z, std::size_t v);

}  // namespace tropos
