#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/graph.hpp"
#include "tropos/refinement.hpp"

namespace tropos {

/// Continuous piecewise-linear function with integral slopes. Values are
/// kept at the model vertices plus interior knots on each edge; between
/// consecutive knots the function is linear. Knots where the slope does not
/// change are dropped, so two equal functions have equal representations.
class PLFunction {
 public:
  struct Knot {
    Rational offset;
    Rational value;
    bool operator==(const Knot& other) const { return offset == other.offset && value == other.value; }
  };

  PLFunction() = default;
  /// Throws NonIntegralSlope if some segment has a non-integral slope.
  PLFunction(GraphPtr g, std::vector<Rational> vertex_values, std::vector<std::vector<Knot>> interior);

  static PLFunction constant(GraphPtr g, const Rational& c);
  /// Function on the coarse graph of `r` given by its values at the vertices
  /// of the fine model, interpolated linearly along fine edges.
  static PLFunction from_model_values(const Refinement& r, const std::vector<Rational>& fine_values);

  const GraphPtr& graph() const { return graph_; }
  const Rational& vertex_value(std::size_t v) const { return vertex_values_.at(v); }
  const std::vector<Rational>& vertex_values() const { return vertex_values_; }
  const std::vector<Knot>& interior(std::size_t e) const { return interior_.at(e); }

  /// Knots of edge e including both endpoints.
  std::vector<Knot> knots(std::size_t e) const;
  Rational value_at(const Point& p) const;
  /// Slope leaving the base of the half-edge.
  std::int64_t outgoing_slope(const HalfEdge& h) const;
  /// Outgoing slopes at an interior point of an edge: toward the origin, toward the target.
  std::pair<std::int64_t, std::int64_t> slopes_at(std::size_t e, const Rational& offset) const;
  /// Every vertex and every interior knot.
  std::vector<Point> knot_points() const;

  Rational max_value() const;
  Rational min_value() const;
  PLFunction shifted(const Rational& c) const;
  /// Values at the vertices of the fine model of `r`.
  std::vector<Rational> values_on(const Refinement& r) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return same_graph(a.graph_, b.graph_) && a.vertex_values_ == b.vertex_values_ && a.interior_ == b.interior_;
  }

 private:
  void normalize();

  GraphPtr graph_;
  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Knot>> interior_;
};

/// Union of the knot offsets of all functions on each edge, optionally with
/// every pairwise crossing point added.
std::vector<std::vector<Rational>> common_offsets(std::span<const PLFunction* const> fns, bool with_crossings);

PLFunction trop_max(const PLFunction& f, const PLFunction& g);
PLFunction trop_min(const PLFunction& f, const PLFunction& g);
PLFunction trop_shift(const Rational& c, const PLFunction& f);
/// max f - min f.
Rational norm_inf(const PLFunction& f);
/// Sum of outgoing slopes at every point.
Divisor div_of_pl(const PLFunction& f);

/// -min(dist(x, Z), eps). Throws InvalidFiringDistance when the eps
/// neighbourhood of Z is not a disjoint union of half-open intervals.
PLFunction chip_firing_pl(const GraphPtr& g, const Subgraph& z, const Rational& eps);

/// Shortest-path distance from the marked vertices to every vertex; -1 when
/// unreachable.
std::vector<Rational> distances_from(const MetricGraph& g, const std::vector<bool>& sources);

}  // namespace tropos
