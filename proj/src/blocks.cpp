#include "tropos/blocks.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>

#include "tropos/error.hpp"

namespace tropos {

namespace {

struct Frame {
  std::size_t vertex;
  std::size_t parent_edge;  // edge used to enter, npos at a root
  std::size_t next = 0;     // next half-edge to scan
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

BlockDecomposition blocks_and_bridges(const MetricGraph& g, const Subgraph& h) {
  if (!h.is_closed(g)) throw Error(ErrorCode::InvalidArgument, "block decomposition needs a closed subgraph");
  const std::size_t n = g.vertex_count();
  BlockDecomposition out;
  out.edge_is_bridge.assign(g.edge_count(), false);
  out.edge_block.assign(g.edge_count(), -1);
  out.vertex_blocks.assign(n, {});

  auto emit = [&](std::vector<std::size_t> edges) {
    Block b;
    std::sort(edges.begin(), edges.end());
    b.edges = std::move(edges);
    for (std::size_t e : b.edges) {
      b.vertices.push_back(g.edge(e).from);
      b.vertices.push_back(g.edge(e).to);
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.is_bridge = b.edges.size() == 1 && !g.edge(b.edges.front()).is_loop();
    int index = static_cast<int>(out.blocks.size());
    for (std::size_t e : b.edges) {
      out.edge_block[e] = index;
      out.edge_is_bridge[e] = b.is_bridge;
    }
    for (std::size_t v : b.vertices) out.vertex_blocks[v].push_back(index);
    out.blocks.push_back(std::move(b));
  };

  // loops never take part in the DFS
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (h.edges[e] && g.edge(e).is_loop()) emit({e});
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  int counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (!h.vertices[root] || disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, npos}};
    disc[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.half_edges(f.vertex);
      if (f.next < inc.size()) {
        const HalfEdge he = inc[f.next++];
        const Edge& e = g.edge(he.edge);
        if (!h.edges[he.edge] || e.is_loop() || he.edge == f.parent_edge) continue;
        std::size_t w = g.other_end(he);
        if (disc[w] < 0) {
          edge_stack.push_back(he.edge);
          disc[w] = low[w] = counter++;
          stack.push_back({w, he.edge});
        } else if (disc[w] < disc[f.vertex]) {
          // back edge (or a parallel copy of the tree edge)
          edge_stack.push_back(he.edge);
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
        continue;
      }
      const std::size_t v = f.vertex;
      const std::size_t via = f.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const std::size_t u = stack.back().vertex;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        std::vector<std::size_t> edges;
        while (true) {
          std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          edges.push_back(e);
          if (e == via) break;
        }
        emit(std::move(edges));
      }
    }
  }
  return out;
}

BlockDecomposition blocks_and_bridges(const MetricGraph& g) { return blocks_and_bridges(g, Subgraph::whole(g)); }

int cycle_block_of_vertex(const BlockDecomposition& b, std::size_t v) {
  for (std::size_t i : b.vertex_blocks.at(v)) {
    if (!b.blocks[i].is_bridge) return static_cast<int>(i);
  }
  return -1;
}

bool vertex_on_simple_cycle(const MetricGraph& g, const Subgraph& h, std::size_t v) {
  if (!h.vertices.at(v)) return false;
  return cycle_block_of_vertex(blocks_and_bridges(g, h), v) >= 0;
}

bool edge_on_simple_cycle(const MetricGraph& g, const Subgraph& h, std::size_t e) {
  if (!h.edges.at(e)) return false;
  return !blocks_and_bridges(g, h).edge_is_bridge[e];
}

namespace {

struct Chain {
  std::size_t a = 0, b = 0;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> inner;  // vertices of valence two along the chain
};

}  // namespace

std::vector<Cycle> simple_cycles(const MetricGraph& g, const Subgraph& h, std::size_t max_branch_edges) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> active = h.edges;
  std::vector<int> degree(n, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!active[e]) continue;
    ++degree[g.edge(e).from];
    ++degree[g.edge(e).to];
  }
  // trees hanging off the cycles carry no cycle
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    std::size_t v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    for (const HalfEdge& he : g.half_edges(v)) {
      if (!active[he.edge]) continue;
      active[he.edge] = false;
      std::size_t w = g.other_end(he);
      --degree[v];
      if (--degree[w] == 1) leaves.push_back(w);
      break;
    }
  }

  std::vector<bool> branch(n, false);
  for (std::size_t v = 0; v < n; ++v) branch[v] = degree[v] > 2;
  std::vector<bool> used(g.edge_count(), false);
  std::vector<Chain> chains;
  auto walk_from = [&](std::size_t start) {
    for (const HalfEdge& first : g.half_edges(start)) {
      if (!active[first.edge] || used[first.edge]) continue;
      Chain c;
      c.a = start;
      std::size_t e = first.edge;
      std::size_t at = g.other_end(first);
      used[e] = true;
      c.edges.push_back(e);
      while (!branch[at]) {
        c.inner.push_back(at);
        std::size_t next = g.edge_count();
        for (const HalfEdge& he : g.half_edges(at)) {
          if (active[he.edge] && !used[he.edge]) {
            next = he.edge;
            at = g.other_end(he);
            break;
          }
        }
        if (next == g.edge_count()) throw std::logic_error("chain walk lost its way");
        used[next] = true;
        c.edges.push_back(next);
      }
      c.b = at;
      chains.push_back(std::move(c));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (branch[v]) walk_from(v);
  }
  // what is left are components that are plain cycles
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!active[e] || used[e]) continue;
    branch[g.edge(e).from] = true;
    walk_from(g.edge(e).from);
  }
  if (chains.size() > max_branch_edges) {
    throw Error(ErrorCode::BudgetExceeded, "cycle search over " + std::to_string(chains.size()) + " branch edges");
  }

  std::vector<Cycle> out;
  const std::size_t m = chains.size();
  std::vector<int> node_degree(n, 0);
  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> touched;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t x : {chains[i].a, chains[i].b}) {
        if (node_degree[x] == 0) {
          touched.push_back(x);
          parent[x] = x;
        }
        if (++node_degree[x] > 2) ok = false;
      }
    }
    for (std::size_t x : touched) ok = ok && node_degree[x] == 2;
    if (ok) {
      std::size_t pieces = touched.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask >> i & 1u)) continue;
        std::size_t ra = find(chains[i].a), rb = find(chains[i].b);
        if (ra != rb) {
          parent[ra] = rb;
          --pieces;
        }
      }
      if (pieces == 1) {
        Cycle c;
        c.vertices = touched;
        for (std::size_t i = 0; i < m; ++i) {
          if (!(mask >> i & 1u)) continue;
          c.edges.insert(c.edges.end(), chains[i].edges.begin(), chains[i].edges.end());
          c.vertices.insert(c.vertices.end(), chains[i].inner.begin(), chains[i].inner.end());
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
      }
    }
    for (std::size_t x : touched) node_degree[x] = 0;
  }
  return out;
}

std::optional<std::pair<Cycle, Cycle>> disjoint_cycles(const MetricGraph& g, const Subgraph& h) {
  auto cycles = simple_cycles(g, h);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(cycles[i].vertices.begin(), cycles[i].vertices.end(), cycles[j].vertices.begin(),
                            cycles[j].vertices.end(), std::back_inserter(common));
      if (common.empty()) return std::make_pair(cycles[i], cycles[j]);
    }
  }
  return std::nullopt;
}

}  // namespace tropos
