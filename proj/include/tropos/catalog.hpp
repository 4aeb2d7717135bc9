#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropos/graph.hpp"

namespace tropos {

GraphPtr theta_graph();
GraphPtr dumbbell_graph();
GraphPtr banana_graph(int n);
GraphPtr complete_graph_k4();
GraphPtr complete_bipartite_k33();
GraphPtr cycle_graph(int n);
/// Two 2-cycles joined by a pair of edges.
GraphPtr two_cycles_two_bridges();
/// Genus 4 graph whose canonical system has a realizable element outside
/// the span of the realizable extremals.
GraphPtr genus4_span_graph();

/// Looks up "theta", "dumbbell", "banana(n)", "K4", "K33", "cycle(n)",
/// "two-cycles-two-bridges" or "genus4-span". Throws UnknownId.
GraphPtr catalog_graph(std::string_view name);

/// One instance of every catalog family, in a fixed order.
std::vector<std::string> catalog_names();

}  // namespace tropos
