#include "tropos/realizability.hpp"

#include <algorithm>
#include <map>

#include "tropos/error.hpp"
#include "tropos/firing.hpp"

namespace tropos {

SlopeProfile slope_profile(const PLFunction& f) {
  std::vector<Point> bends;
  for (const Point& p : f.knot_points()) {
    if (!p.is_vertex()) bends.push_back(p);
  }
  SlopeProfile profile{model_with_breakpoints(f.graph(), bends), {}, {}};
  const MetricGraph& g = profile.graph();
  profile.level = f.values_on(profile.model);
  PLFunction on_model(profile.model.fine, profile.level, std::vector<std::vector<PLFunction::Knot>>(g.edge_count()));
  profile.slopes.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const HalfEdge& h : g.half_edges(v)) profile.slopes[v].emplace_back(h, on_model.outgoing_slope(h));
  }
  return profile;
}

bool is_inconvenient(const SlopeProfile& profile, std::size_t v) {
  if (profile.graph().vertex(v).weight > 0) return false;
  const auto& slopes = profile.slopes.at(v);
  std::int64_t rising = 0;
  std::int64_t steepest_fall = 0;
  for (const auto& [h, s] : slopes) {
    if (s == 0) return false;
    if (s > 0) rising += s;
    else steepest_fall = std::max(steepest_fall, -s);
  }
  return steepest_fall > rising;
}

std::vector<bool> horizontal_edges(const SlopeProfile& profile) {
  const MetricGraph& g = profile.graph();
  std::vector<bool> out(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) out[e] = profile.level[g.edge(e).from] == profile.level[g.edge(e).to];
  return out;
}

Subgraph superlevel_subgraph(const SlopeProfile& profile, const Rational& t) {
  std::vector<bool> members(profile.level.size());
  for (std::size_t v = 0; v < members.size(); ++v) members[v] = profile.level[v] >= t;
  return Subgraph::spanned(profile.graph(), members);
}

std::string kind_name(Violation::Kind kind) {
  return kind == Violation::Kind::InconvenientVertex ? "InconvenientVertex" : "HorizontalEdge";
}

RealizabilityReport realizability_of(const PLFunction& f) {
  const GraphPtr& host = f.graph();
  if (!host->is_connected()) throw Error(ErrorCode::DisconnectedInput, "realizability needs a connected graph");
  Divisor d = canonical_divisor(host) + div_of_pl(f);
  if (!d.is_effective()) throw Error(ErrorCode::NotInCanonicalSystem, "K + div(f) is not effective");

  SlopeProfile profile = slope_profile(f);
  const MetricGraph& g = profile.graph();
  std::map<Rational, std::pair<Subgraph, BlockDecomposition>> above;
  auto blocks_above = [&](const Rational& t) -> const BlockDecomposition& {
    auto it = above.find(t);
    if (it == above.end()) {
      Subgraph sub = superlevel_subgraph(profile, t);
      BlockDecomposition b = blocks_and_bridges(g, sub);
      it = above.emplace(t, std::make_pair(std::move(sub), std::move(b))).first;
    }
    return it->second.second;
  };
  auto block_edge_ids = [&](const Block& block) {
    std::vector<std::string> ids;
    for (std::size_t e : block.edges) ids.push_back(g.edge(e).id);
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  RealizabilityReport report;
  for (const Vertex& v : g.vertices()) report.model_vertices.push_back(v.id);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!is_inconvenient(profile, v)) continue;
    const Rational& t = profile.level[v];
    const BlockDecomposition& b = blocks_above(t);
    int block = cycle_block_of_vertex(b, v);
    if (block < 0) {
      report.violations.push_back({Violation::Kind::InconvenientVertex, g.vertex(v).id, t,
                                   "inconvenient vertex lies on no simple cycle at or above its level"});
    } else {
      report.witnesses.push_back({Violation::Kind::InconvenientVertex, g.vertex(v).id, t, block_edge_ids(b.blocks[block])});
    }
  }
  auto flat = horizontal_edges(profile);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!flat[e]) continue;
    const Rational& t = profile.level[g.edge(e).from];
    const BlockDecomposition& b = blocks_above(t);
    int block = b.edge_block[e];
    if (block < 0 || b.edge_is_bridge[e]) {
      report.violations.push_back({Violation::Kind::HorizontalEdge, g.edge(e).id, t,
                                   "horizontal edge is a bridge of the subgraph at or above its level"});
    } else {
      report.witnesses.push_back({Violation::Kind::HorizontalEdge, g.edge(e).id, t, block_edge_ids(b.blocks[block])});
    }
  }
  report.realizable = report.violations.empty();
  return report;
}

PLFunction canonical_witness(const Divisor& d) {
  const GraphPtr& host = d.graph();
  if (!host->is_connected()) throw Error(ErrorCode::DisconnectedInput, "realizability needs a connected graph");
  Divisor k = canonical_divisor(host);
  if (!d.is_effective() || d.degree() != k.degree()) {
    throw Error(ErrorCode::NotInCanonicalSystem, "divisor is not an effective divisor of canonical degree");
  }
  auto support = d.support();
  Refinement breaks = model_with_breakpoints(host, support);
  GridModel grid = unit_model(breaks.fine, 1);
  Refinement full = compose(breaks, grid.grid);
  auto level = is_principal(grid.graph(), (d - k).to_fine(full));
  if (!level) throw Error(ErrorCode::NotInCanonicalSystem, "divisor is not linearly equivalent to K");
  return level_map_to_pl(full, grid.step, *level);
}

RealizabilityReport is_realizable_canonical(const Divisor& d) { return realizability_of(canonical_witness(d)); }

bool has_disjoint_horizontal_cycles(const PLFunction& f) {
  SlopeProfile profile = slope_profile(f);
  const MetricGraph& g = profile.graph();
  Subgraph flat{std::vector<bool>(g.vertex_count(), true), horizontal_edges(profile)};
  return disjoint_cycles(g, flat).has_value();
}

bool convexity_probe(const PLFunction& f1, const PLFunction& f2) {
  return realizability_of(trop_max(f1, f2)).realizable;
}

bool convexity_probe(const Divisor& d1, const Divisor& d2) {
  return convexity_probe(canonical_witness(d1), canonical_witness(d2));
}

namespace {

// Shortest path from the vertex set `from` to the vertex set `to`, as edges.
std::vector<std::size_t> shortest_connection(const MetricGraph& g, const std::vector<bool>& from,
                                             const std::vector<bool>& to) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::size_t> via(n, g.edge_count());
  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (from[v]) dist[v] = Rational(0);
  }
  while (true) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (best == n || *dist[v] < *dist[best])) best = v;
    }
    if (best == n) return {};
    done[best] = true;
    if (to[best]) {
      std::vector<std::size_t> path;
      for (std::size_t v = best; !from[v];) {
        std::size_t e = via[v];
        path.push_back(e);
        v = g.edge(e).from == v ? g.edge(e).to : g.edge(e).from;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const HalfEdge& h : g.half_edges(best)) {
      std::size_t w = g.other_end(h);
      Rational alt = *dist[best] + g.edge(h.edge).length;
      if (!done[w] && (!dist[w] || alt < *dist[w])) {
        dist[w] = alt;
        via[w] = h.edge;
      }
    }
  }
}

}  // namespace

std::optional<DisjointCycleConstruction> disjoint_cycle_construction(const GraphPtr& host) {
  if (!host->is_connected()) throw Error(ErrorCode::DisconnectedInput, "construction needs a connected graph");
  Refinement model = loopless_model(host);
  const MetricGraph& g = *model.fine;
  auto pair = disjoint_cycles(g, Subgraph::whole(g));
  if (!pair) return std::nullopt;

  Subgraph z = Subgraph::empty(g);
  std::vector<bool> first(g.vertex_count(), false), second(g.vertex_count(), false);
  for (const Cycle* c : {&pair->first, &pair->second}) {
    for (std::size_t v : c->vertices) z.vertices[v] = true;
    for (std::size_t e : c->edges) z.edges[e] = true;
  }
  for (std::size_t v : pair->first.vertices) first[v] = true;
  for (std::size_t v : pair->second.vertices) second[v] = true;
  for (std::size_t e : shortest_connection(g, first, second)) {
    z.edges[e] = true;
    z.vertices[g.edge(e).from] = true;
    z.vertices[g.edge(e).to] = true;
  }

  GridModel half = unit_model(host, 2);
  PLFunction on_model = chip_firing_pl(model.fine, z, half.step);
  std::vector<Rational> values;
  for (const Point& p : half.grid.vertex_origin) values.push_back(on_model.value_at(model.to_fine(p)));
  PLFunction f = PLFunction::from_model_values(half.grid, values);
  Divisor d = canonical_divisor(host) + div_of_pl(f);
  return DisjointCycleConstruction{std::move(z), std::move(model), std::move(f), std::move(d)};
}

}  // namespace tropos
