#include "tropos/linear_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "tropos/error.hpp"
#include "tropos/reduction.hpp"

namespace tropos {

std::size_t default_state_cap() {
  if (const char* env = std::getenv("TROPOS_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

PLFunction LinearSystem::function(std::size_t i) const {
  return level_map_to_pl(grid.grid, grid.step, elements.at(i).witness);
}

namespace {

enum class Mark : char { Undecided, In, Out };

// Include/exclude search over connected sets whose smallest vertex is the
// root. A vertex inside the set that already has more edges to excluded
// vertices than chips can never lie on the boundary of a firable set.
class FirableSetSearch {
 public:
  FirableSetSearch(const MetricGraph& g, const std::vector<std::int64_t>& chips,
                   const std::function<void(const std::vector<bool>&)>& visit)
      : g_(g), chips_(chips), visit_(visit), mark_(g.vertex_count()), dead_(g.vertex_count(), 0) {}

  void run() {
    const std::size_t n = g_.vertex_count();
    for (std::size_t root = 0; root < n; ++root) {
      std::fill(mark_.begin(), mark_.end(), Mark::Undecided);
      std::fill(dead_.begin(), dead_.end(), 0);
      for (std::size_t v = 0; v < root; ++v) mark_[v] = Mark::Out;
      include(root);
      if (alive()) recurse();
      uninclude(root);
    }
  }

 private:
  void include(std::size_t v) {
    mark_[v] = Mark::In;
    in_.push_back(v);
    dead_[v] = 0;
    for (const HalfEdge& h : g_.half_edges(v)) {
      if (mark_[g_.other_end(h)] == Mark::Out) ++dead_[v];
    }
  }

  void uninclude(std::size_t v) {
    mark_[v] = Mark::Undecided;
    in_.pop_back();
  }

  void exclude(std::size_t v) {
    mark_[v] = Mark::Out;
    for (const HalfEdge& h : g_.half_edges(v)) {
      std::size_t w = g_.other_end(h);
      if (w != v && mark_[w] == Mark::In) ++dead_[w];
    }
  }

  void unexclude(std::size_t v) {
    for (const HalfEdge& h : g_.half_edges(v)) {
      std::size_t w = g_.other_end(h);
      if (w != v && mark_[w] == Mark::In) --dead_[w];
    }
    mark_[v] = Mark::Undecided;
  }

  bool alive() const {
    for (std::size_t x : in_) {
      if (dead_[x] > chips_[x]) return false;
    }
    return true;
  }

  // Undecided neighbour of the set member with the least spare chips.
  std::size_t pick() const {
    std::size_t best = g_.vertex_count();
    std::int64_t best_slack = 0;
    for (std::size_t x : in_) {
      std::int64_t slack = chips_[x] - dead_[x];
      if (best != g_.vertex_count() && slack >= best_slack) continue;
      for (const HalfEdge& h : g_.half_edges(x)) {
        std::size_t w = g_.other_end(h);
        if (mark_[w] == Mark::Undecided) {
          best = w;
          best_slack = slack;
          break;
        }
      }
    }
    return best;
  }

  void recurse() {
    std::size_t u = pick();
    if (u == g_.vertex_count()) {
      if (in_.size() == g_.vertex_count()) return;
      std::vector<bool> set(g_.vertex_count(), false);
      for (std::size_t x : in_) set[x] = true;
      visit_(set);
      return;
    }
    include(u);
    if (alive()) recurse();
    uninclude(u);
    exclude(u);
    if (alive()) recurse();
    unexclude(u);
  }

  const MetricGraph& g_;
  const std::vector<std::int64_t>& chips_;
  const std::function<void(const std::vector<bool>&)>& visit_;
  std::vector<Mark> mark_;
  std::vector<std::int64_t> dead_;
  std::vector<std::size_t> in_;
};

std::vector<std::int64_t> fire_vector(const MetricGraph& g, std::vector<std::int64_t> chips, const std::vector<bool>& set) {
  for (const Edge& e : g.edges()) {
    if (set[e.from] == set[e.to]) continue;
    std::size_t inside = set[e.from] ? e.from : e.to;
    std::size_t outside = set[e.from] ? e.to : e.from;
    --chips[inside];
    ++chips[outside];
  }
  return chips;
}

}  // namespace

void for_each_connected_firable_set(const MetricGraph& g, const Divisor& d,
                                    const std::function<void(const std::vector<bool>&)>& visit) {
  auto chips = d.vertex_vector();
  FirableSetSearch(g, chips, visit).run();
}

LinearSystem enumerate_linear_system(const GraphPtr& host, const Divisor& d, int k, const EnumerationOptions& options) {
  require_same_graph(host, d.graph());
  if (!host->is_connected()) throw Error(ErrorCode::DisconnectedInput, "enumeration needs a connected graph");
  if (!d.is_effective()) throw Error(ErrorCode::NotEffective, "enumeration needs an effective divisor");
  LinearSystem sys{unit_model(host, k), d, Divisor(), {}};
  const GraphPtr& gp = sys.grid.graph();
  const MetricGraph& g = *gp;
  sys.base_grid = d.to_fine(sys.grid.grid);
  if (!sys.base_grid.supported_on_vertices()) {
    throw Error(ErrorCode::NotOnGrid, "divisor is not supported on the subdivision-" + std::to_string(k) + " grid");
  }

  std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> seen;  // state -> witness
  std::deque<std::vector<std::int64_t>> queue;
  if (d.is_zero()) {
    seen.emplace(std::vector<std::int64_t>(g.vertex_count(), 0), std::vector<std::int64_t>(g.vertex_count(), 0));
  } else {
    ReductionResult start = reduce(gp, sys.base_grid, 0);
    auto key = start.reduced.vertex_vector();
    seen.emplace(key, start.witness.values);
    queue.push_back(key);
  }
  while (!queue.empty()) {
    std::vector<std::int64_t> state = std::move(queue.front());
    queue.pop_front();
    const std::vector<std::int64_t> witness = seen.at(state);
    FirableSetSearch(g, state, [&](const std::vector<bool>& set) {
      auto next = fire_vector(g, state, set);
      if (seen.count(next)) return;
      auto w = witness;
      for (std::size_t v = 0; v < w.size(); ++v) {
        if (set[v]) ++w[v];
      }
      seen.emplace(next, std::move(w));
      if (seen.size() > options.state_cap) {
        throw Error(ErrorCode::BudgetExceeded,
                    "linear system exceeds the state cap of " + std::to_string(options.state_cap));
      }
      queue.push_back(std::move(next));
    }).run();
  }

  for (const auto& [state, witness] : seen) {
    LinearSystemElement el;
    el.grid_divisor = Divisor::from_vertex_vector(gp, state);
    el.divisor = el.grid_divisor.to_coarse(sys.grid.grid);
    el.witness = LevelMap{gp, witness}.normalized();
    sys.elements.push_back(std::move(el));
  }
  std::sort(sys.elements.begin(), sys.elements.end(),
            [](const LinearSystemElement& a, const LinearSystemElement& b) { return a.divisor < b.divisor; });
  return sys;
}

bool is_extremal_on_model(const MetricGraph& g, const Divisor& d_prime) {
  if (!d_prime.is_effective()) throw Error(ErrorCode::NotEffective, "extremality needs D + div(f) effective");
  std::vector<bool> vertex_covered(g.vertex_count(), false);
  std::vector<bool> edge_covered(g.edge_count(), false);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto set = dhar_unburned(g, d_prime, u);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (set[v]) vertex_covered[v] = true;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (set[g.edge(e).from] && set[g.edge(e).to]) edge_covered[e] = true;
    }
  }
  bool all = std::all_of(vertex_covered.begin(), vertex_covered.end(), [](bool b) { return b; }) &&
             std::all_of(edge_covered.begin(), edge_covered.end(), [](bool b) { return b; });
  return !all;
}

bool is_extremal(const Divisor& d, const PLFunction& f) {
  require_same_graph(d.graph(), f.graph());
  Divisor d_prime = d + div_of_pl(f);
  if (!d_prime.is_effective()) throw Error(ErrorCode::NotEffective, "function is not in R(D)");
  // with the support as vertices and every edge halved, each firable closed
  // subgraph is spanned by its vertices
  auto support = d_prime.support();
  Refinement breaks = model_with_breakpoints(d.graph(), support);
  Refinement model = compose(breaks, subdivide(breaks.fine, 2));
  return is_extremal_on_model(*model.fine, d_prime.to_fine(model));
}

std::vector<std::size_t> extremal_indices(const LinearSystem& system) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.elements.size(); ++i) {
    if (is_extremal_on_model(*system.grid.graph(), system.elements[i].grid_divisor)) out.push_back(i);
  }
  return out;
}

bool grid_in_span(const MetricGraph& grid, const LevelMap& f, const std::vector<const LevelMap*>& generators) {
  std::vector<std::vector<std::int64_t>> projections;
  for (const LevelMap* g : generators) {
    std::int64_t c = f.values[0] - g->values[0];
    for (std::size_t v = 0; v < f.values.size(); ++v) c = std::min(c, f.values[v] - g->values[v]);
    std::vector<std::int64_t> p = g->values;
    for (auto& x : p) x += c;
    projections.push_back(std::move(p));
  }
  // each edge needs one projection agreeing with f along the whole edge
  for (std::size_t v = 0; v < grid.vertex_count(); ++v) {
    bool ok = std::any_of(projections.begin(), projections.end(), [&](const auto& p) { return p[v] == f.values[v]; });
    if (!ok) return false;
  }
  for (const Edge& e : grid.edges()) {
    bool ok = std::any_of(projections.begin(), projections.end(),
                          [&](const auto& p) { return p[e.from] == f.values[e.from] && p[e.to] == f.values[e.to]; });
    if (!ok) return false;
  }
  return true;
}

}  // namespace tropos
