#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/firing.hpp"
#include "tropos/pl_function.hpp"
#include "tropos/refinement.hpp"

namespace tropos {

/// State cap for enumeration: TROPOS_STATE_CAP when set, else 10^6.
std::size_t default_state_cap();

struct EnumerationOptions {
  std::size_t state_cap = default_state_cap();
};

/// One effective divisor of |D| on the grid, with its witness.
struct LinearSystemElement {
  Divisor divisor;       // on the host graph
  Divisor grid_divisor;  // on the grid model
  LevelMap witness;      // grid_divisor = base + div(witness), min value 0
};

/// All effective divisors linearly equivalent to D whose support lies on
/// the vertices of the k-subdivided unit model.
struct LinearSystem {
  GridModel grid;
  Divisor base;       // host
  Divisor base_grid;  // grid
  std::vector<LinearSystemElement> elements;  // sorted by host divisor

  int subdivision() const { return grid.k; }
  /// Witness of element i as a function on the host graph.
  PLFunction function(std::size_t i) const;
};

/// Calls `visit` for every connected vertex set A (A != V) that can fire
/// with respect to D.
void for_each_connected_firable_set(const MetricGraph& g, const Divisor& d,
                                    const std::function<void(const std::vector<bool>&)>& visit);

LinearSystem enumerate_linear_system(const GraphPtr& host, const Divisor& d, int k,
                                     const EnumerationOptions& options = {});

/// Extremality in the tropical module generated by the model's level
/// functions: false iff the maximal firable sets of D' avoiding single
/// vertices cover every vertex and every edge of the model.
bool is_extremal_on_model(const MetricGraph& g, const Divisor& d_prime);

/// Extremality of f in R(D) on the metric graph, with D + div(f) effective.
bool is_extremal(const Divisor& d, const PLFunction& f);

/// Indices of the elements of the system that are extremal at its grid.
std::vector<std::size_t> extremal_indices(const LinearSystem& system);

/// Span membership for functions given by level maps on one grid model.
/// Equivalent to in_span on the corresponding PL functions.
bool grid_in_span(const MetricGraph& grid, const LevelMap& f, const std::vector<const LevelMap*>& generators);

}  // namespace tropos
