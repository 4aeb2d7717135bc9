#include "tropos/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropos/error.hpp"

namespace tropos {

Point Refinement::to_fine(const Point& p) const {
  coarse->validate(p);
  if (p.is_vertex()) return Point::vertex(vertex_image.at(p.vertex_index()));
  const auto& list = pieces.at(p.edge_index());
  // last piece whose start is <= offset
  auto it = std::upper_bound(list.begin(), list.end(), p.offset(),
                             [&](const Rational& off, std::size_t f) { return off < edge_origin[f].start; });
  std::size_t f = *(it - 1);
  const Rational& start = edge_origin[f].start;
  if (start == p.offset()) return Point::vertex(fine->edge(f).from);
  return Point::on_edge(f, p.offset() - start);
}

Point Refinement::to_coarse(const Point& p) const {
  fine->validate(p);
  if (p.is_vertex()) return vertex_origin.at(p.vertex_index());
  const Piece& piece = edge_origin.at(p.edge_index());
  return Point::on_edge(piece.edge, piece.start + p.offset());
}

bool Refinement::is_identity() const {
  return coarse->vertex_count() == fine->vertex_count() && coarse->edge_count() == fine->edge_count();
}

Refinement refine(const GraphPtr& g, const std::vector<std::vector<Rational>>& cuts, const VertexNamer& name) {
  if (cuts.size() != g->edge_count()) throw Error(ErrorCode::InvalidArgument, "cut list does not match edge count");
  GraphSpec spec;
  for (const Vertex& v : g->vertices()) spec.vertices.push_back({v.id, v.weight});

  std::vector<std::vector<Rational>> sorted(g->edge_count());
  std::vector<std::vector<std::string>> names(g->edge_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    const Edge& edge = g->edge(e);
    std::set<Rational> unique;
    for (const Rational& c : cuts[e]) {
      if (c <= 0 || c >= edge.length) {
        throw Error(ErrorCode::InvalidPoint, "cut " + to_string(c) + " not interior to edge '" + edge.id + "'");
      }
      unique.insert(c);
    }
    sorted[e].assign(unique.begin(), unique.end());
    const std::size_t n = sorted[e].size();
    if (n == 0) {
      spec.edges.push_back({edge.id, g->vertex(edge.from).id, g->vertex(edge.to).id, edge.length});
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      names[e].push_back(name(edge, i + 1, n, sorted[e][i]));
      spec.vertices.push_back({names[e].back(), 0});
    }
    Rational prev(0);
    std::string prev_id = g->vertex(edge.from).id;
    for (std::size_t j = 0; j <= n; ++j) {
      Rational next = j < n ? sorted[e][j] : edge.length;
      std::string next_id = j < n ? names[e][j] : g->vertex(edge.to).id;
      spec.edges.push_back({edge.id + "#" + std::to_string(j + 1), prev_id, next_id, Rational(next - prev)});
      prev = next;
      prev_id = next_id;
    }
  }

  Refinement r;
  r.coarse = g;
  r.fine = build_graph(spec);
  const MetricGraph& fine = *r.fine;
  r.vertex_origin.assign(fine.vertex_count(), Point());
  r.edge_origin.assign(fine.edge_count(), {});
  r.pieces.assign(g->edge_count(), {});
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    std::size_t w = fine.vertex_index(g->vertex(v).id);
    r.vertex_image.push_back(w);
    r.vertex_origin[w] = Point::vertex(v);
  }
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    const Edge& edge = g->edge(e);
    const std::size_t n = sorted[e].size();
    if (n == 0) {
      std::size_t f = fine.edge_index(edge.id);
      r.edge_origin[f] = {e, Rational(0)};
      r.pieces[e].push_back(f);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) r.vertex_origin[fine.vertex_index(names[e][i])] = Point::on_edge(e, sorted[e][i]);
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t f = fine.edge_index(edge.id + "#" + std::to_string(j + 1));
      r.edge_origin[f] = {e, j == 0 ? Rational(0) : sorted[e][j - 1]};
      r.pieces[e].push_back(f);
    }
  }
  return r;
}

Refinement identity_refinement(const GraphPtr& g) {
  return refine(g, std::vector<std::vector<Rational>>(g->edge_count()), nullptr);
}

Refinement subdivide(const GraphPtr& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "subdivision must be a positive integer");
  std::vector<std::vector<Rational>> cuts(g->edge_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    for (int i = 1; i < k; ++i) cuts[e].push_back(g->edge(e).length * i / k);
  }
  return refine(g, cuts, [k](const Edge& edge, std::size_t i, std::size_t, const Rational&) {
    return edge.id + "@" + std::to_string(i) + "/" + std::to_string(k);
  });
}

Refinement model_with_breakpoints(const GraphPtr& g, std::span<const Point> points) {
  std::vector<std::vector<Rational>> cuts(g->edge_count());
  for (const Point& p : points) {
    g->validate(p);
    if (!p.is_vertex()) cuts[p.edge_index()].push_back(p.offset());
  }
  return refine(g, cuts, [](const Edge& edge, std::size_t, std::size_t, const Rational& offset) {
    return edge.id + "@" + to_string(offset);
  });
}

Refinement loopless_model(const GraphPtr& g) {
  std::vector<std::vector<Rational>> cuts(g->edge_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    if (g->edge(e).is_loop()) cuts[e].push_back(g->edge(e).length / 2);
  }
  return refine(g, cuts, [](const Edge& edge, std::size_t, std::size_t, const Rational&) { return edge.id + "@1/2"; });
}

Refinement compose(const Refinement& first, const Refinement& second) {
  require_same_graph(first.fine, second.coarse);
  Refinement r;
  r.coarse = first.coarse;
  r.fine = second.fine;
  for (std::size_t v : first.vertex_image) r.vertex_image.push_back(second.vertex_image[v]);
  for (const Point& p : second.vertex_origin) r.vertex_origin.push_back(first.to_coarse(p));
  for (const Refinement::Piece& piece : second.edge_origin) {
    const Refinement::Piece& outer = first.edge_origin[piece.edge];
    r.edge_origin.push_back({outer.edge, outer.start + piece.start});
  }
  r.pieces.assign(first.coarse->edge_count(), {});
  for (std::size_t e = 0; e < first.pieces.size(); ++e) {
    for (std::size_t m : first.pieces[e]) {
      r.pieces[e].insert(r.pieces[e].end(), second.pieces[m].begin(), second.pieces[m].end());
    }
  }
  return r;
}

GridModel unit_model(const GraphPtr& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "subdivision must be a positive integer");
  GridModel m;
  m.k = k;
  m.loopless = loopless_model(g);
  const MetricGraph& base = *m.loopless.fine;
  Rational unit(1);
  if (base.edge_count() > 0) {
    unit = base.edge(0).length;
    for (const Edge& e : base.edges()) unit = rational_gcd(unit, e.length);
  }
  m.step = unit / k;
  std::vector<std::vector<Rational>> cuts(base.edge_count());
  for (std::size_t e = 0; e < base.edge_count(); ++e) {
    Rational n = base.edge(e).length / m.step;
    std::int64_t count = to_int64(n);
    for (std::int64_t i = 1; i < count; ++i) cuts[e].push_back(m.step * i);
  }
  Refinement grid = refine(m.loopless.fine, cuts, [&](const Edge& edge, std::size_t i, std::size_t n, const Rational&) {
    return edge.id + "@" + std::to_string(i) + "/" + std::to_string(n + 1);
  });
  m.grid = compose(m.loopless, grid);
  return m;
}

int CutDecomposition::total_genus() const {
  return std::accumulate(component_genus.begin(), component_genus.end(), 0);
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CutDecomposition cut_at(const GraphPtr& g, std::span<const Point> points) {
  CutDecomposition cut;
  cut.model = model_with_breakpoints(g, points);
  const MetricGraph& fine = *cut.model.fine;
  const std::size_t nv = fine.vertex_count();
  cut.removed.assign(nv, false);
  for (const Point& p : points) cut.removed[cut.model.to_fine(p).vertex_index()] = true;

  DisjointSets sets(nv + fine.edge_count());
  for (std::size_t e = 0; e < fine.edge_count(); ++e) {
    const Edge& edge = fine.edge(e);
    // edge node nv + e joins the class of every kept endpoint
    if (!cut.removed[edge.from]) sets.unite(nv + e, edge.from);
    if (!cut.removed[edge.to]) sets.unite(nv + e, edge.to);
  }

  std::vector<int> label(nv + fine.edge_count(), -1);
  int next = 0;
  auto label_of = [&](std::size_t node) {
    std::size_t root = sets.find(node);
    if (label[root] < 0) label[root] = next++;
    return label[root];
  };
  cut.vertex_component.assign(nv, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!cut.removed[v]) cut.vertex_component[v] = label_of(v);
  }
  cut.edge_component.assign(fine.edge_count(), -1);
  for (std::size_t e = 0; e < fine.edge_count(); ++e) cut.edge_component[e] = label_of(nv + e);

  std::vector<int> edges(next, 0), verts(next, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!cut.removed[v]) ++verts[cut.vertex_component[v]];
  }
  for (std::size_t e = 0; e < fine.edge_count(); ++e) {
    const Edge& edge = fine.edge(e);
    int c = cut.edge_component[e];
    ++edges[c];
    // each end at a removed point becomes a fresh leaf of the completion
    if (cut.removed[edge.from]) ++verts[c];
    if (cut.removed[edge.to]) ++verts[c];
  }
  for (int c = 0; c < next; ++c) cut.component_genus.push_back(edges[c] - verts[c] + 1);
  return cut;
}

int genus_after_removal(const GraphPtr& g, std::span<const Point> points) {
  if (!g->is_connected()) throw Error(ErrorCode::DisconnectedInput, "genus_after_removal needs a connected graph");
  std::set<Point> unique(points.begin(), points.end());
  std::vector<Point> list(unique.begin(), unique.end());
  CutDecomposition cut = cut_at(g, list);
  int valence_excess = 0;
  for (const Point& p : list) valence_excess += g->valence(p) - 1;
  int from_identity = genus(*g) - valence_excess - 1 + cut.component_count();
  if (from_identity != cut.total_genus()) {
    throw std::logic_error("genus of cut graph disagrees with the glueing identity");
  }
  return from_identity;
}

}  // namespace tropos
