#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropos/graph.hpp"
#include "tropos/refinement.hpp"

namespace tropos {

/// Finitely supported integer combination of points of a metric graph.
/// Zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(GraphPtr g) : graph_(std::move(g)) {}
  Divisor(GraphPtr g, const std::map<Point, std::int64_t>& entries);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Point, std::int64_t>& entries() const { return entries_; }

  std::int64_t operator[](const Point& p) const;
  std::int64_t at_vertex(std::size_t v) const { return (*this)[Point::vertex(v)]; }
  void add(const Point& p, std::int64_t mult);

  std::int64_t degree() const;
  bool is_zero() const { return entries_.empty(); }
  bool is_effective() const;
  /// D(x) >= 0 for every x other than `base`.
  bool is_effective_away(const Point& base) const;
  bool supported_on_vertices() const;
  std::vector<Point> support() const;

  Divisor vertex_part() const;
  Divisor edge_part() const;

  /// Coefficients on the vertices of the model, in vertex order. Throws
  /// InvalidPoint if the divisor has a chip interior to an edge.
  std::vector<std::int64_t> vertex_vector() const;
  static Divisor from_vertex_vector(GraphPtr g, const std::vector<std::int64_t>& values);

  /// Same divisor expressed on the finer (or coarser) model.
  Divisor to_fine(const Refinement& r) const;
  Divisor to_coarse(const Refinement& r) const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  Divisor operator-() const;
  Divisor scaled(std::int64_t c) const;

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return same_graph(a.graph_, b.graph_) && a.entries_ == b.entries_;
  }
  friend bool operator<(const Divisor& a, const Divisor& b) { return a.entries_ < b.entries_; }

  std::string to_string() const;

 private:
  GraphPtr graph_;
  std::map<Point, std::int64_t> entries_;
};

/// K(x) = 2h(x) - 2 + val(x) at every vertex of the model.
Divisor canonical_divisor(const GraphPtr& g);

}  // namespace tropos
