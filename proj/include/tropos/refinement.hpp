#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tropos/graph.hpp"

namespace tropos {

/// A finer model of the same metric graph together with the point
/// translation in both directions. Fine edges keep the orientation of the
/// coarse edge they subdivide.
struct Refinement {
  struct Piece {
    std::size_t edge = 0;  // coarse edge
    Rational start;        // offset of the piece's origin on the coarse edge
  };

  GraphPtr coarse;
  GraphPtr fine;
  std::vector<std::size_t> vertex_image;          // coarse vertex -> fine vertex
  std::vector<Point> vertex_origin;               // fine vertex -> coarse point
  std::vector<Piece> edge_origin;                 // fine edge -> coarse piece
  std::vector<std::vector<std::size_t>> pieces;   // coarse edge -> fine edges in order

  Point to_fine(const Point& p) const;
  Point to_coarse(const Point& p) const;
  bool is_identity() const;
};

using VertexNamer = std::function<std::string(const Edge& edge, std::size_t index, std::size_t count, const Rational& offset)>;

/// Refines `g` by cutting edge e at the offsets in cuts[e] (interior, any
/// order, duplicates ignored). Edges that are cut become "<id>#<j>".
Refinement refine(const GraphPtr& g, const std::vector<std::vector<Rational>>& cuts, const VertexNamer& name);

Refinement identity_refinement(const GraphPtr& g);

/// Splits every edge into k equal pieces; new vertices are "<edge>@<i>/<k>".
Refinement subdivide(const GraphPtr& g, int k);

/// Smallest refinement of g whose vertices contain every point of P.
Refinement model_with_breakpoints(const GraphPtr& g, std::span<const Point> points);

/// Replaces each self-loop by two half-length edges through its midpoint.
Refinement loopless_model(const GraphPtr& g);

/// first.fine must be second.coarse.
Refinement compose(const Refinement& first, const Refinement& second);

/// Uniform grid model: the loopless model cut into pieces of length
/// unit / k, where unit is the largest length dividing every edge.
struct GridModel {
  Refinement loopless;  // host -> loopless model
  Refinement grid;      // host -> grid model
  Rational step;
  int k = 1;

  const GraphPtr& host() const { return grid.coarse; }
  const GraphPtr& graph() const { return grid.fine; }
};

GridModel unit_model(const GraphPtr& g, int k);

/// Γ with a finite set A of points removed, on a model containing A.
struct CutDecomposition {
  Refinement model;
  std::vector<bool> removed;              // per fine vertex
  std::vector<int> vertex_component;      // per fine vertex, -1 when removed
  std::vector<int> edge_component;        // per fine edge
  std::vector<int> component_genus;       // genus of each component's completion

  int component_count() const { return static_cast<int>(component_genus.size()); }
  int total_genus() const;
};

CutDecomposition cut_at(const GraphPtr& g, std::span<const Point> points);

/// g(Γ \ A) for connected Γ. Computed from the glueing identity and checked
/// against the component count of the cut model.
int genus_after_removal(const GraphPtr& g, std::span<const Point> points);

}  // namespace tropos
