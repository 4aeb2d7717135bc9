#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropos/blocks.hpp"
#include "tropos/divisor.hpp"
#include "tropos/pl_function.hpp"
#include "tropos/refinement.hpp"

namespace tropos {

/// Outgoing slopes of f at every vertex of a model on which f bends only
/// at vertices.
struct SlopeProfile {
  Refinement model;                                                   // host -> model
  std::vector<Rational> level;                                        // f at each model vertex
  std::vector<std::vector<std::pair<HalfEdge, std::int64_t>>> slopes;  // per model vertex

  const MetricGraph& graph() const { return *model.fine; }
};

/// Refines the host at the knots of f.
SlopeProfile slope_profile(const PLFunction& f);

bool is_inconvenient(const SlopeProfile& profile, std::size_t v);
/// Model edges on which f is constant.
std::vector<bool> horizontal_edges(const SlopeProfile& profile);
/// Vertices with f >= t and the edges joining two of them.
Subgraph superlevel_subgraph(const SlopeProfile& profile, const Rational& t);

struct Violation {
  enum class Kind { InconvenientVertex, HorizontalEdge };
  Kind kind;
  std::string location;  // model vertex or edge id
  Rational level;
  std::string reason;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.kind == b.kind && a.location == b.location && a.level == b.level && a.reason == b.reason;
  }
};

/// A non-bridge block of the superlevel subgraph certifying a cycle.
struct CycleWitness {
  Violation::Kind kind;
  std::string location;
  Rational level;
  std::vector<std::string> block_edges;

  friend bool operator==(const CycleWitness& a, const CycleWitness& b) {
    return a.kind == b.kind && a.location == b.location && a.level == b.level && a.block_edges == b.block_edges;
  }
};

struct RealizabilityReport {
  bool realizable = true;
  std::vector<Violation> violations;
  std::vector<CycleWitness> witnesses;
  std::vector<std::string> model_vertices;  // ids of the model the locations refer to

  bool operator==(const RealizabilityReport&) const = default;
};

std::string kind_name(Violation::Kind kind);

/// Realizability of K + div(f). Throws NotInCanonicalSystem unless that
/// divisor is effective.
RealizabilityReport realizability_of(const PLFunction& f);

/// f with D = K + div(f). Throws NotInCanonicalSystem when D is not an
/// effective member of |K|.
PLFunction canonical_witness(const Divisor& d);

RealizabilityReport is_realizable_canonical(const Divisor& d);

/// Two vertex-disjoint cycles made of horizontal edges of f.
bool has_disjoint_horizontal_cycles(const PLFunction& f);

/// Realizability of K + div(max(f1, f2)).
bool convexity_probe(const PLFunction& f1, const PLFunction& f2);
bool convexity_probe(const Divisor& d1, const Divisor& d2);

/// Element of |K| obtained by firing two disjoint cycles of the loopless
/// model together with a shortest path joining them, by half the unit
/// length. Nothing when the graph has no two disjoint cycles.
struct DisjointCycleConstruction {
  Subgraph fired;      // on the loopless model
  Refinement model;    // host -> loopless model
  PLFunction function;
  Divisor divisor;     // on the host
};

std::optional<DisjointCycleConstruction> disjoint_cycle_construction(const GraphPtr& host);

}  // namespace tropos
