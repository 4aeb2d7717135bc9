#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropos/graph.hpp"

namespace tropos {

struct Block {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool is_bridge = false;  // a single edge that is not a loop
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<bool> edge_is_bridge;
  std::vector<int> edge_block;                     // -1 for edges outside the subgraph
  std::vector<std::vector<std::size_t>> vertex_blocks;
};

/// Biconnected components of the multigraph restricted to `h` (the whole
/// graph when omitted). A self-loop forms its own block.
BlockDecomposition blocks_and_bridges(const MetricGraph& g, const Subgraph& h);
BlockDecomposition blocks_and_bridges(const MetricGraph& g);

/// Index of a non-bridge block containing v, or -1.
int cycle_block_of_vertex(const BlockDecomposition& b, std::size_t v);

bool vertex_on_simple_cycle(const MetricGraph& g, const Subgraph& h, std::size_t v);
bool edge_on_simple_cycle(const MetricGraph& g, const Subgraph& h, std::size_t e);

}  // namespace tropos

namespace tropos {

struct Cycle {
  std::vector<std::size_t> vertices;  // sorted
  std::vector<std::size_t> edges;     // sorted
};

/// Every simple cycle of the subgraph h. Throws BudgetExceeded when the
/// subgraph has more than `max_branch_edges` edges after suppressing
/// vertices of valence two.
std::vector<Cycle> simple_cycles(const MetricGraph& g, const Subgraph& h, std::size_t max_branch_edges = 24);

/// Two vertex-disjoint simple cycles of h, if any.
std::optional<std::pair<Cycle, Cycle>> disjoint_cycles(const MetricGraph& g, const Subgraph& h);

}  // namespace tropos
