#include "tropos/cell_complex.hpp"

#include <algorithm>
#include <map>

#include "tropos/error.hpp"

namespace tropos {

namespace {

// Support of D on the loopless model.
std::vector<Point> model_support(const CellModel& model, const Divisor& d, bool edges_only) {
  std::vector<Point> out;
  for (const Point& p : d.to_fine(model.base).support()) {
    if (!edges_only || !p.is_vertex()) out.push_back(p);
  }
  return out;
}

Rational value_at_offset(const PLFunction& f, std::size_t e, const Rational& t) {
  return f.value_at(f.graph()->point_on_edge(e, t));
}

// Slope of f leaving `from` toward `to` along host edge e, where no knot of
// f lies strictly between the two offsets closest to `from`.
std::int64_t slope_leaving(const PLFunction& f, std::size_t e, const Rational& from, const Rational& to) {
  Rational next = to;
  for (const auto& k : f.knots(e)) {
    bool between = from < to ? (k.offset > from && k.offset < next) : (k.offset < from && k.offset > next);
    if (between) next = k.offset;
  }
  Rational run = from < to ? next - from : from - next;
  Rational slope = (value_at_offset(f, e, next) - value_at_offset(f, e, from)) / run;
  return to_int64(slope);
}

}  // namespace

CellModel cell_model(const GraphPtr& host) {
  CellModel m{loopless_model(host), {}};
  const MetricGraph& g = *m.base.fine;
  for (const Edge& e : g.edges()) m.reversed.push_back(g.vertex(e.to).id < g.vertex(e.from).id);
  return m;
}

CombinatorialType combinatorial_type(const CellModel& model, const Divisor& d, const PLFunction& f) {
  require_same_graph(d.graph(), f.graph());
  if (!d.is_effective()) throw Error(ErrorCode::NotEffective, "combinatorial type needs an effective divisor");
  const MetricGraph& g = *model.base.fine;
  Divisor fine = d.to_fine(model.base);
  CombinatorialType t;
  t.vertex_multiplicity.assign(g.vertex_count(), 0);
  t.edge_multiplicities.assign(g.edge_count(), {});
  for (std::size_t v = 0; v < g.vertex_count(); ++v) t.vertex_multiplicity[v] = fine.at_vertex(v);
  for (const auto& [p, c] : fine.entries()) {
    if (!p.is_vertex()) t.edge_multiplicities[p.edge_index()].push_back(c);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto& seq = t.edge_multiplicities[e];
    if (model.reversed[e]) std::reverse(seq.begin(), seq.end());
    const auto& piece = model.base.edge_origin[e];
    Rational start = piece.start;
    Rational end = piece.start + g.edge(e).length;
    t.origin_slope.push_back(model.reversed[e] ? slope_leaving(f, piece.edge, end, start)
                                               : slope_leaving(f, piece.edge, start, end));
  }
  return t;
}

CombinatorialType combinatorial_type(const Divisor& d, const PLFunction& f) {
  return combinatorial_type(cell_model(d.graph()), d, f);
}

int cell_dimension(const Divisor& d) {
  CellModel model = cell_model(d.graph());
  auto removed = model_support(model, d, true);
  return cut_at(model.base.fine, removed).component_count() - 1;
}

int dim_via_genus_formula(const Divisor& d) {
  if (!d.graph()->is_connected()) throw Error(ErrorCode::DisconnectedInput, "dimension formula needs a connected graph");
  if (!is_generic(d)) throw Error(ErrorCode::NotGeneric, "dimension formula needs a generic divisor");
  CellModel model = cell_model(d.graph());
  auto removed = model_support(model, d, true);
  CutDecomposition cut = cut_at(model.base.fine, removed);
  const MetricGraph& fine = *cut.model.fine;
  Divisor on_cut = d.to_fine(compose(model.base, cut.model));
  std::vector<std::int64_t> degree(cut.component_count(), 0);
  std::vector<int> weight(cut.component_count(), 0);
  for (std::size_t v = 0; v < fine.vertex_count(); ++v) {
    if (cut.removed[v]) continue;
    degree[cut.vertex_component[v]] += on_cut.at_vertex(v);
    weight[cut.vertex_component[v]] += fine.vertex(v).weight;
  }
  std::int64_t dim = d.degree() - weighted_genus(*d.graph());
  for (int c = 0; c < cut.component_count(); ++c) dim += cut.component_genus[c] + weight[c] - degree[c];
  return static_cast<int>(dim);
}

bool is_generic(const Divisor& d) {
  if (!d.is_effective()) throw Error(ErrorCode::NotEffective, "genericity needs an effective divisor");
  const MetricGraph& host = *d.graph();
  for (const auto& [p, c] : d.entries()) {
    if (c >= host.valence(p)) return false;
  }
  if (d.is_zero()) return true;

  // a firable closed subgraph has its boundary inside supp D, so it is a
  // union of closures of components of the complement of the support
  CellModel model = cell_model(d.graph());
  auto support = model_support(model, d, false);
  CutDecomposition cut = cut_at(model.base.fine, support);
  const MetricGraph& fine = *cut.model.fine;
  Divisor on_cut = d.to_fine(compose(model.base, cut.model));
  const int n = cut.component_count();
  if (n > 20) throw Error(ErrorCode::BudgetExceeded, "too many components for the saturation test");

  struct Site {
    std::int64_t chips;
    bool is_model_vertex;
    std::vector<int> directions;  // component entered along each tangent direction
  };
  std::vector<Site> sites;
  for (std::size_t v = 0; v < fine.vertex_count(); ++v) {
    if (!cut.removed[v]) continue;
    Site s{on_cut.at_vertex(v), cut.model.vertex_origin[v].is_vertex(), {}};
    for (const HalfEdge& h : fine.half_edges(v)) s.directions.push_back(cut.edge_component[h.edge]);
    sites.push_back(std::move(s));
  }
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool firable = true;
    bool meets_vertices = false;
    for (const Site& s : sites) {
      std::int64_t out = 0;
      bool inside = false;
      for (int c : s.directions) {
        if (mask >> c & 1u) inside = true;
        else ++out;
      }
      if (!inside || out == 0) continue;
      if (out > s.chips) {
        firable = false;
        break;
      }
      if (s.is_model_vertex) meets_vertices = true;
    }
    if (firable && meets_vertices) return false;
  }
  return true;
}

CellSurvey maximal_cells(const LinearSystem& system) {
  CellSurvey survey;
  survey.subdivision = system.subdivision();
  CellModel model = cell_model(system.base.graph());
  std::map<CombinatorialType, std::size_t> slot;
  for (std::size_t i = 0; i < system.elements.size(); ++i) {
    CombinatorialType t = combinatorial_type(model, system.elements[i].divisor, system.function(i));
    auto [it, fresh] = slot.emplace(t, survey.cells.size());
    if (fresh) {
      CellReport r;
      r.type = std::move(t);
      r.representative = system.elements[i].divisor;
      r.representative_index = i;
      r.dimension = cell_dimension(r.representative);
      r.is_maximal = is_generic(r.representative);
      survey.cells.push_back(std::move(r));
    }
    ++survey.cells[it->second].witnessed;
  }
  return survey;
}

CellSurvey maximal_cells(const GraphPtr& host, const Divisor& d, int k, const EnumerationOptions& options) {
  return maximal_cells(enumerate_linear_system(host, d, k, options));
}

}  // namespace tropos
