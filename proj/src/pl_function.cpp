#include "tropos/pl_function.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "tropos/error.hpp"

namespace tropos {

namespace {

Rational slope_of(const PLFunction::Knot& a, const PLFunction::Knot& b) {
  return (b.value - a.value) / (b.offset - a.offset);
}

std::int64_t integral_slope(const Rational& s, const std::string& where) {
  if (!is_integer(s)) throw Error(ErrorCode::NonIntegralSlope, "slope " + to_string(s) + " on " + where);
  return to_int64(s);
}

// Linear interpolation through the knots of one edge.
Rational interpolate(const std::vector<PLFunction::Knot>& ks, const Rational& t) {
  auto it = std::lower_bound(ks.begin(), ks.end(), t,
                             [](const PLFunction::Knot& k, const Rational& x) { return k.offset < x; });
  if (it != ks.end() && it->offset == t) return it->value;
  const auto& b = *it;
  const auto& a = *(it - 1);
  return a.value + (b.value - a.value) * (t - a.offset) / (b.offset - a.offset);
}

}  // namespace

PLFunction::PLFunction(GraphPtr g, std::vector<Rational> vertex_values, std::vector<std::vector<Knot>> interior)
    : graph_(std::move(g)), vertex_values_(std::move(vertex_values)), interior_(std::move(interior)) {
  if (vertex_values_.size() != graph_->vertex_count() || interior_.size() != graph_->edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "function data does not match the graph");
  }
  for (std::size_t e = 0; e < interior_.size(); ++e) {
    auto& ks = interior_[e];
    std::sort(ks.begin(), ks.end(), [](const Knot& a, const Knot& b) { return a.offset < b.offset; });
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i].offset <= 0 || ks[i].offset >= graph_->edge(e).length) {
        throw Error(ErrorCode::InvalidPoint, "knot offset outside edge '" + graph_->edge(e).id + "'");
      }
      if (i > 0 && ks[i].offset == ks[i - 1].offset) {
        if (ks[i].value != ks[i - 1].value) {
          throw Error(ErrorCode::InvalidArgument, "two values at one point of edge '" + graph_->edge(e).id + "'");
        }
      }
    }
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  }
  normalize();
}

void PLFunction::normalize() {
  for (std::size_t e = 0; e < interior_.size(); ++e) {
    std::vector<Knot> all = knots(e);
    std::vector<std::int64_t> slopes;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      slopes.push_back(integral_slope(slope_of(all[i], all[i + 1]), "edge '" + graph_->edge(e).id + "'"));
    }
    std::vector<Knot> kept;
    for (std::size_t i = 1; i + 1 < all.size(); ++i) {
      if (slopes[i - 1] != slopes[i]) kept.push_back(all[i]);
    }
    interior_[e] = std::move(kept);
  }
}

PLFunction PLFunction::constant(GraphPtr g, const Rational& c) {
  std::size_t nv = g->vertex_count(), ne = g->edge_count();
  return PLFunction(std::move(g), std::vector<Rational>(nv, c), std::vector<std::vector<Knot>>(ne));
}

PLFunction PLFunction::from_model_values(const Refinement& r, const std::vector<Rational>& fine_values) {
  const MetricGraph& fine = *r.fine;
  if (fine_values.size() != fine.vertex_count()) throw Error(ErrorCode::InvalidArgument, "value count differs from model");
  std::vector<Rational> vertex_values(r.coarse->vertex_count());
  for (std::size_t v = 0; v < vertex_values.size(); ++v) vertex_values[v] = fine_values[r.vertex_image[v]];
  std::vector<std::vector<Knot>> interior(r.coarse->edge_count());
  for (std::size_t e = 0; e < interior.size(); ++e) {
    const auto& list = r.pieces[e];
    for (std::size_t j = 1; j < list.size(); ++j) {
      interior[e].push_back({r.edge_origin[list[j]].start, fine_values[fine.edge(list[j]).from]});
    }
  }
  return PLFunction(r.coarse, std::move(vertex_values), std::move(interior));
}

std::vector<PLFunction::Knot> PLFunction::knots(std::size_t e) const {
  const Edge& edge = graph_->edge(e);
  std::vector<Knot> all;
  all.reserve(interior_[e].size() + 2);
  all.push_back({Rational(0), vertex_values_[edge.from]});
  all.insert(all.end(), interior_[e].begin(), interior_[e].end());
  all.push_back({edge.length, vertex_values_[edge.to]});
  return all;
}

Rational PLFunction::value_at(const Point& p) const {
  graph_->validate(p);
  if (p.is_vertex()) return vertex_values_[p.vertex_index()];
  return interpolate(knots(p.edge_index()), p.offset());
}

std::int64_t PLFunction::outgoing_slope(const HalfEdge& h) const {
  auto all = knots(h.edge);
  Rational s = h.at_origin ? slope_of(all[0], all[1]) : -slope_of(all[all.size() - 2], all.back());
  return to_int64(s);
}

std::pair<std::int64_t, std::int64_t> PLFunction::slopes_at(std::size_t e, const Rational& offset) const {
  auto all = knots(e);
  // segment i spans all[i]..all[i+1]
  std::size_t i = 0;
  while (all[i + 1].offset <= offset) ++i;
  Rational after = slope_of(all[i], all[i + 1]);
  Rational before = all[i].offset == offset ? slope_of(all[i - 1], all[i]) : after;
  return {to_int64(Rational(-before)), to_int64(after)};
}

std::vector<Point> PLFunction::knot_points() const {
  std::vector<Point> out;
  for (std::size_t v = 0; v < vertex_values_.size(); ++v) out.push_back(Point::vertex(v));
  for (std::size_t e = 0; e < interior_.size(); ++e) {
    for (const Knot& k : interior_[e]) out.push_back(Point::on_edge(e, k.offset));
  }
  return out;
}

Rational PLFunction::max_value() const {
  Rational best = vertex_values_.empty() ? Rational(0) : vertex_values_.front();
  for (const Rational& v : vertex_values_) best = std::max(best, v);
  for (const auto& ks : interior_) {
    for (const Knot& k : ks) best = std::max(best, k.value);
  }
  return best;
}

Rational PLFunction::min_value() const {
  Rational best = vertex_values_.empty() ? Rational(0) : vertex_values_.front();
  for (const Rational& v : vertex_values_) best = std::min(best, v);
  for (const auto& ks : interior_) {
    for (const Knot& k : ks) best = std::min(best, k.value);
  }
  return best;
}

PLFunction PLFunction::shifted(const Rational& c) const {
  PLFunction f = *this;
  for (Rational& v : f.vertex_values_) v += c;
  for (auto& ks : f.interior_) {
    for (Knot& k : ks) k.value += c;
  }
  return f;
}

std::vector<Rational> PLFunction::values_on(const Refinement& r) const {
  require_same_graph(graph_, r.coarse);
  std::vector<Rational> out;
  out.reserve(r.fine->vertex_count());
  for (const Point& p : r.vertex_origin) out.push_back(value_at(p));
  return out;
}

std::vector<std::vector<Rational>> common_offsets(std::span<const PLFunction* const> fns, bool with_crossings) {
  if (fns.empty()) return {};
  const GraphPtr& g = fns.front()->graph();
  for (const PLFunction* f : fns) require_same_graph(g, f->graph());
  std::vector<std::vector<Rational>> out(g->edge_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    std::set<Rational> offsets{Rational(0), g->edge(e).length};
    for (const PLFunction* f : fns) {
      for (const auto& k : f->interior(e)) offsets.insert(k.offset);
    }
    if (with_crossings && fns.size() > 1) {
      std::vector<Rational> base(offsets.begin(), offsets.end());
      std::vector<std::vector<Rational>> values;
      for (const PLFunction* f : fns) {
        auto ks = f->knots(e);
        std::vector<Rational> row;
        for (const Rational& t : base) row.push_back(interpolate(ks, t));
        values.push_back(std::move(row));
      }
      for (std::size_t a = 0; a < fns.size(); ++a) {
        for (std::size_t b = a + 1; b < fns.size(); ++b) {
          for (std::size_t i = 0; i + 1 < base.size(); ++i) {
            Rational d0 = values[a][i] - values[b][i];
            Rational d1 = values[a][i + 1] - values[b][i + 1];
            if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
              offsets.insert(base[i] + d0 * (base[i + 1] - base[i]) / (d0 - d1));
            }
          }
        }
      }
    }
    offsets.erase(Rational(0));
    offsets.erase(g->edge(e).length);
    out[e].assign(offsets.begin(), offsets.end());
  }
  return out;
}

namespace {

template <typename Pick>
PLFunction combine(const PLFunction& f, const PLFunction& g, Pick pick) {
  const PLFunction* both[] = {&f, &g};
  auto offsets = common_offsets(both, true);
  const GraphPtr& graph = f.graph();
  std::vector<Rational> vertex_values(graph->vertex_count());
  for (std::size_t v = 0; v < vertex_values.size(); ++v) vertex_values[v] = pick(f.vertex_value(v), g.vertex_value(v));
  std::vector<std::vector<PLFunction::Knot>> interior(graph->edge_count());
  for (std::size_t e = 0; e < interior.size(); ++e) {
    auto kf = f.knots(e), kg = g.knots(e);
    for (const Rational& t : offsets[e]) interior[e].push_back({t, pick(interpolate(kf, t), interpolate(kg, t))});
  }
  return PLFunction(graph, std::move(vertex_values), std::move(interior));
}

}  // namespace

PLFunction trop_max(const PLFunction& f, const PLFunction& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}

PLFunction trop_min(const PLFunction& f, const PLFunction& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

PLFunction trop_shift(const Rational& c, const PLFunction& f) { return f.shifted(c); }

Rational norm_inf(const PLFunction& f) { return f.max_value() - f.min_value(); }

Divisor div_of_pl(const PLFunction& f) {
  const MetricGraph& g = *f.graph();
  Divisor d(f.graph());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::int64_t ord = 0;
    for (const HalfEdge& h : g.half_edges(v)) ord += f.outgoing_slope(h);
    d.add(Point::vertex(v), ord);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (const auto& k : f.interior(e)) {
      auto [back, forward] = f.slopes_at(e, k.offset);
      d.add(Point::on_edge(e, k.offset), back + forward);
    }
  }
  return d;
}

std::vector<Rational> distances_from(const MetricGraph& g, const std::vector<bool>& sources) {
  // -1 marks unreachable vertices
  std::vector<Rational> dist(g.vertex_count(), Rational(-1));
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (sources[v]) {
      dist[v] = 0;
      queue.push({Rational(0), v});
    }
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (const HalfEdge& h : g.half_edges(v)) {
      std::size_t w = g.other_end(h);
      Rational nd = d + g.edge(h.edge).length;
      if (dist[w] < 0 || nd < dist[w]) {
        dist[w] = nd;
        queue.push({nd, w});
      }
    }
  }
  return dist;
}

PLFunction chip_firing_pl(const GraphPtr& g, const Subgraph& z, const Rational& eps) {
  if (!z.is_closed(*g)) throw Error(ErrorCode::InvalidArgument, "chip firing needs a closed subgraph");
  if (eps <= 0) throw Error(ErrorCode::InvalidFiringDistance, "firing distance must be positive");
  if (z.vertex_count() == 0) throw Error(ErrorCode::InvalidArgument, "chip firing from an empty subgraph");
  auto dist = distances_from(*g, z.vertices);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    if (!z.vertices[v] && dist[v] >= 0 && dist[v] < eps) {
      throw Error(ErrorCode::InvalidFiringDistance,
                  "vertex '" + g->vertex(v).id + "' lies within distance " + to_string(eps) + " of the subgraph");
    }
  }
  std::vector<Rational> values(g->vertex_count());
  for (std::size_t v = 0; v < values.size(); ++v) values[v] = z.vertices[v] ? Rational(0) : Rational(-eps);
  std::vector<std::vector<PLFunction::Knot>> interior(g->edge_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    const Edge& edge = g->edge(e);
    if (z.edges[e]) continue;
    bool from_in = z.vertices[edge.from], to_in = z.vertices[edge.to];
    if (from_in && to_in && 2 * eps > edge.length) {
      throw Error(ErrorCode::InvalidFiringDistance, "edge '" + edge.id + "' is shorter than twice the firing distance");
    }
    if (from_in && eps < edge.length) interior[e].push_back({eps, Rational(-eps)});
    if (to_in && eps < edge.length && !(from_in && 2 * eps == edge.length)) {
      interior[e].push_back({Rational(edge.length - eps), Rational(-eps)});
    }
  }
  return PLFunction(g, std::move(values), std::move(interior));
}

}  // namespace tropos
