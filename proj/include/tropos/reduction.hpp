#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropos/divisor.hpp"
#include "tropos/firing.hpp"

namespace tropos {

struct FiringStep {
  std::vector<bool> set;
  std::int64_t multiplier = 0;
};

struct ReductionResult {
  Divisor reduced;
  LevelMap witness;                     // reduced = input + div(witness)
  std::vector<FiringStep> fired_sequence;
};

/// Largest subset of V \ {v} that can fire (the vertices Dhar's fire does
/// not reach). Requires D effective away from v.
std::vector<bool> dhar_unburned(const MetricGraph& g, const Divisor& d, std::size_t v);

/// Fires the distance layers around v outward, outermost first, until the
/// divisor is effective away from v.
std::pair<Divisor, LevelMap> make_effective_away(const GraphPtr& g, const Divisor& d, std::size_t v);
ReductionResult make_effective_away_steps(const GraphPtr& g, const Divisor& d, std::size_t v);

ReductionResult reduce(const GraphPtr& g, const Divisor& d, std::size_t v);
bool is_v_reduced(const MetricGraph& g, const Divisor& d, std::size_t v);
bool has_effective_representative(const GraphPtr& g, const Divisor& d);

/// Rank over effective divisors supported on the vertices of the unit model
/// `g`; D must be supported on those vertices.
int rank_on_model(const GraphPtr& g, const Divisor& d);

struct RankResult {
  int rank = -1;
  int subdivision = 1;
};

/// Rank of a divisor on `host`, testing effective divisors on the grid of
/// the k-subdivided unit model.
RankResult rank(const GraphPtr& host, const Divisor& d, int k);

/// r(D) - r(K - D) - deg D + g - 1 at subdivision k.
int riemann_roch_residual(const GraphPtr& host, const Divisor& d, int k);

}  // namespace tropos
