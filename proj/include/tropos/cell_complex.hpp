#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/linear_system.hpp"
#include "tropos/pl_function.hpp"
#include "tropos/refinement.hpp"

namespace tropos {

/// Cells are described on the loopless model of the host graph, with each
/// model edge read from its endpoint with the smaller id.
struct CellModel {
  Refinement base;                   // host -> loopless model
  std::vector<bool> reversed;        // model edge read against its stored orientation
};

CellModel cell_model(const GraphPtr& host);

struct CombinatorialType {
  std::vector<std::int64_t> vertex_multiplicity;               // m_V per model vertex
  std::vector<std::vector<std::int64_t>> edge_multiplicities;  // m_E per model edge, in reading order
  std::vector<std::int64_t> origin_slope;                      // s per model edge

  auto operator<=>(const CombinatorialType&) const = default;
};

CombinatorialType combinatorial_type(const CellModel& model, const Divisor& d, const PLFunction& f);
CombinatorialType combinatorial_type(const Divisor& d, const PLFunction& f);

/// Components of the graph minus the edge part of D, minus one.
int cell_dimension(const Divisor& d);

/// deg D - g + sum over components C of (g(C) - deg D|C). Throws NotGeneric.
int dim_via_genus_formula(const Divisor& d);

bool is_generic(const Divisor& d);

struct CellReport {
  CombinatorialType type;
  int dimension = 0;
  Divisor representative;        // first element of the system with this type
  std::size_t representative_index = 0;
  std::size_t witnessed = 0;     // grid elements of this type
  bool is_maximal = false;

  bool operator==(const CellReport&) const = default;
};

/// Cells of |D| met by the grid at subdivision k. Cells whose relative
/// interior misses the grid do not appear.
struct CellSurvey {
  int subdivision = 1;
  std::vector<CellReport> cells;  // ordered by representative

  bool operator==(const CellSurvey&) const = default;

  std::string label() const { return "grid survey at subdivision " + std::to_string(subdivision); }
};

CellSurvey maximal_cells(const LinearSystem& system);
CellSurvey maximal_cells(const GraphPtr& host, const Divisor& d, int k, const EnumerationOptions& options = {});

}  // namespace tropos
