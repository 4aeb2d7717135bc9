#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropos/pl_function.hpp"

namespace tropos {

/// <f, g> = min (f - g).
Rational inner(const PLFunction& f, const PLFunction& g);
/// <f, g> + g, the largest shift of g lying below f.
PLFunction project(const PLFunction& f, const PLFunction& g);

/// Max over the generators of their projections onto f.
PLFunction span_envelope(const PLFunction& f, std::span<const PLFunction> generators);
/// f lies in the tropical span of the generators.
bool in_span(const PLFunction& f, std::span<const PLFunction> generators);

/// At every point the minimum of f_i + a_i is attained by at least two indices.
bool verify_tropical_dependence(std::span<const PLFunction> fns, std::span<const Rational> coeffs);

struct DependenceSearch {
  std::size_t budget = 1'000'000;  // candidate assignments examined
};

/// Coefficients certifying tropical dependence, or nothing once the
/// candidate set is exhausted. Throws BudgetExceeded when the budget runs out.
std::optional<std::vector<Rational>> find_tropical_dependence(std::span<const PLFunction> fns,
                                                              const DependenceSearch& options = {});

}  // namespace tropos
