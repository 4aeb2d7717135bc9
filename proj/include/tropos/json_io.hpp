#pragma once

#include <json.hpp>

#include "tropos/cell_complex.hpp"
#include "tropos/divisor.hpp"
#include "tropos/firing.hpp"
#include "tropos/graph.hpp"
#include "tropos/linear_system.hpp"
#include "tropos/pl_function.hpp"
#include "tropos/realizability.hpp"
#include "tropos/reduction.hpp"

namespace tropos {

using Json = nlohmann::json;

/// Rationals are written as "p/q" strings ("n" when integral); integers are
/// accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json graph_to_json(const MetricGraph& g);
GraphPtr graph_from_json(const Json& j);

/// A vertex id, or {"edge": id, "offset": "p/q"}.
Json point_to_json(const MetricGraph& g, const Point& p);
Point point_from_json(const MetricGraph& g, const Json& j);

Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const GraphPtr& g, const Json& j);

/// {"breakpoints": [...]} listing every vertex and interior knot.
Json function_to_json(const PLFunction& f);
PLFunction function_from_json(const GraphPtr& g, const Json& j);

/// {vertex id: value}.
Json level_map_to_json(const LevelMap& f);
LevelMap level_map_from_json(const GraphPtr& g, const Json& j);

/// `model` carries the reduction: host divisors are reported on its coarse
/// graph and fired sets by grid vertex id.
Json reduction_to_json(const GridModel& model, std::size_t base, const ReductionResult& r);

Json linear_system_to_json(const LinearSystem& system, const std::vector<std::size_t>& indices);

Json combinatorial_type_to_json(const CellModel& model, const CombinatorialType& t);
CombinatorialType combinatorial_type_from_json(const CellModel& model, const Json& j);
Json cell_survey_to_json(const CellSurvey& survey);
CellSurvey cell_survey_from_json(const GraphPtr& host, const Json& j);

Json realizability_to_json(const RealizabilityReport& report);
RealizabilityReport realizability_from_json(const Json& j);

}  // namespace tropos
