#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/integer_linalg.hpp"
#include "tropos/pl_function.hpp"

namespace tropos {

/// Integer values on the vertices of a unit model.
struct LevelMap {
  GraphPtr graph;
  std::vector<std::int64_t> values;

  static LevelMap zero(GraphPtr g);
  /// Indicator of a vertex set.
  static LevelMap indicator(GraphPtr g, const std::vector<bool>& set);

  /// Shifted so that the minimum value is 0.
  LevelMap normalized() const;
  std::int64_t max_value() const;
  std::int64_t min_value() const;
  LevelMap& operator+=(const LevelMap& other);
  friend bool operator==(const LevelMap& a, const LevelMap& b) {
    return same_graph(a.graph, b.graph) && a.values == b.values;
  }
};

/// Adj(G) - diag(val), on a model whose edges all have one length.
struct FiringMatrix {
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;
};

/// Throws NonUniformModel unless every edge has the same length.
void require_uniform(const MetricGraph& g);

FiringMatrix firing_matrix(const MetricGraph& g);
Divisor div_of_level_map(const LevelMap& f);

/// D + m * div(indicator of A).
Divisor fire(const Divisor& d, const std::vector<bool>& set, std::int64_t multiplier = 1);
/// Boundary vertices of the subgraph spanned by A hold at least their
/// outgoing degree.
bool can_fire(const MetricGraph& g, const Divisor& d, const std::vector<bool>& set);

/// Reusable principality test on one unit model.
class PrincipalSolver {
 public:
  explicit PrincipalSolver(GraphPtr g);
  const GraphPtr& graph() const { return graph_; }
  /// Level map f (min 0) with div(f) = D, if any.
  std::optional<LevelMap> solve(const Divisor& d) const;

 private:
  GraphPtr graph_;
  IntegerSolver solver_;
};

std::optional<LevelMap> is_principal(const GraphPtr& g, const Divisor& d);
/// f with D2 = D1 + div(f), if any.
std::optional<LevelMap> linear_equivalence_witness(const GraphPtr& g, const Divisor& d1, const Divisor& d2);

/// The PL function on the model's host graph whose grid values are
/// step * f.
PLFunction level_map_to_pl(const Refinement& model, const Rational& step, const LevelMap& f);

}  // namespace tropos
