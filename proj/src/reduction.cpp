#include "tropos/reduction.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "tropos/error.hpp"

namespace tropos {

namespace {

void require_connected(const MetricGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedInput, "operation needs a connected graph");
}

}  // namespace

std::vector<bool> dhar_unburned(const MetricGraph& g, const Divisor& d, std::size_t v) {
  if (!d.is_effective_away(Point::vertex(v))) {
    throw Error(ErrorCode::NotEffectiveAway, "divisor is not effective away from '" + g.vertex(v).id + "'");
  }
  const std::size_t n = g.vertex_count();
  std::vector<bool> burnt(n, false);
  std::vector<std::int64_t> burning(n, 0);
  std::deque<std::size_t> queue{v};
  burnt[v] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    // incidence lists follow edge id order, so the burn order is reproducible
    for (const HalfEdge& h : g.half_edges(x)) {
      std::size_t w = g.other_end(h);
      if (burnt[w]) continue;
      // each chip at w holds back the fire along one edge
      if (++burning[w] > d.at_vertex(w)) {
        burnt[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<bool> unburnt(n);
  for (std::size_t x = 0; x < n; ++x) unburnt[x] = !burnt[x];
  return unburnt;
}

ReductionResult make_effective_away_steps(const GraphPtr& gp, const Divisor& d, std::size_t v) {
  const MetricGraph& g = *gp;
  require_connected(g);
  require_same_graph(gp, d.graph());
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> layer(n, n);
  std::deque<std::size_t> queue{v};
  layer[v] = 0;
  std::size_t depth = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    depth = std::max(depth, layer[x]);
    for (const HalfEdge& h : g.half_edges(x)) {
      std::size_t w = g.other_end(h);
      if (layer[w] == n) {
        layer[w] = layer[x] + 1;
        queue.push_back(w);
      }
    }
  }

  ReductionResult r{d, LevelMap::zero(gp), {}};
  for (std::size_t i = depth; i-- > 0;) {
    // firing A_i hands at least one chip to every vertex of the next shell
    std::int64_t m = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (layer[x] == i + 1) m = std::max(m, -r.reduced.at_vertex(x));
    }
    if (m == 0) continue;
    std::vector<bool> ball(n);
    for (std::size_t x = 0; x < n; ++x) ball[x] = layer[x] <= i;
    r.reduced = fire(r.reduced, ball, m);
    for (std::size_t x = 0; x < n; ++x) {
      if (ball[x]) r.witness.values[x] += m;
    }
    r.fired_sequence.push_back({ball, m});
  }
  if (!r.reduced.is_effective_away(Point::vertex(v))) {
    throw std::logic_error("layer sweep left a negative coefficient away from the base");
  }
  return r;
}

std::pair<Divisor, LevelMap> make_effective_away(const GraphPtr& g, const Divisor& d, std::size_t v) {
  ReductionResult r = make_effective_away_steps(g, d, v);
  return {std::move(r.reduced), std::move(r.witness)};
}

ReductionResult reduce(const GraphPtr& gp, const Divisor& d, std::size_t v) {
  const MetricGraph& g = *gp;
  require_uniform(g);
  ReductionResult r = make_effective_away_steps(gp, d, v);
  while (true) {
    std::vector<bool> set = dhar_unburned(g, r.reduced, v);
    if (std::none_of(set.begin(), set.end(), [](bool b) { return b; })) break;
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> out(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
      if (set[e.from] != set[e.to]) ++out[set[e.from] ? e.from : e.to];
    }
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (set[x] && out[x] > 0) m = std::min(m, r.reduced.at_vertex(x) / out[x]);
    }
    r.reduced = fire(r.reduced, set, m);
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (set[x]) r.witness.values[x] += m;
    }
    r.fired_sequence.push_back({set, m});
  }
  return r;
}

bool is_v_reduced(const MetricGraph& g, const Divisor& d, std::size_t v) {
  if (!d.is_effective_away(Point::vertex(v))) return false;
  auto set = dhar_unburned(g, d, v);
  return std::none_of(set.begin(), set.end(), [](bool b) { return b; });
}

bool has_effective_representative(const GraphPtr& g, const Divisor& d) {
  if (d.degree() < 0) return false;
  if (g->vertex_count() == 0) return d.is_zero();
  return reduce(g, d, 0).reduced.is_effective();
}

namespace {

class RankSearch {
 public:
  explicit RankSearch(GraphPtr g) : graph_(std::move(g)) {}

  // r(D) = -1 when |D| is empty, else 1 + min over vertices x of r(D - x).
  int rank_of(const Divisor& d) {
    if (d.degree() < 0) return -1;
    Divisor reduced = reduce(graph_, d, 0).reduced;
    if (!reduced.is_effective()) return -1;
    auto key = reduced.vertex_vector();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    for (std::size_t x = 0; x < graph_->vertex_count() && best > 0; ++x) {
      Divisor less = reduced;
      less.add(Point::vertex(x), -1);
      best = std::min(best, rank_of(less) + 1);
    }
    if (graph_->vertex_count() == 0) best = 0;
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  GraphPtr graph_;
  std::map<std::vector<std::int64_t>, int> memo_;
};

}  // namespace

int rank_on_model(const GraphPtr& g, const Divisor& d) {
  require_connected(*g);
  require_uniform(*g);
  require_same_graph(g, d.graph());
  for (const Vertex& v : g->vertices()) {
    if (v.weight != 0) throw Error(ErrorCode::InvalidArgument, "rank is computed on graphs without vertex weights");
  }
  RankSearch search(g);
  return search.rank_of(d);
}

RankResult rank(const GraphPtr& host, const Divisor& d, int k) {
  require_connected(*host);
  require_same_graph(host, d.graph());
  GridModel grid = unit_model(host, k);
  Divisor on_grid = d.to_fine(grid.grid);
  if (!on_grid.supported_on_vertices()) {
    throw Error(ErrorCode::NotOnGrid, "divisor is not supported on the subdivision-" + std::to_string(k) + " grid");
  }
  return {rank_on_model(grid.graph(), on_grid), k};
}

int riemann_roch_residual(const GraphPtr& host, const Divisor& d, int k) {
  Divisor canonical = canonical_divisor(host);
  int r = rank(host, d, k).rank;
  int r_dual = rank(host, canonical - d, k).rank;
  return r - r_dual - static_cast<int>(d.degree()) + weighted_genus(*host) - 1;
}

}  // namespace tropos
