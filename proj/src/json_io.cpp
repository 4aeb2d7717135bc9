#include "tropos/json_io.hpp"

#include <algorithm>
#include <set>

#include "tropos/error.hpp"

namespace tropos {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t integer_of(const Json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "expected an integer");
  return j.get<std::int64_t>();
}

Violation::Kind kind_from(const std::string& s) {
  if (s == "InconvenientVertex") return Violation::Kind::InconvenientVertex;
  if (s == "HorizontalEdge") return Violation::Kind::HorizontalEdge;
  throw Error(ErrorCode::ParseError, "unknown violation kind '" + s + "'");
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational as a \"p/q\" string or an integer");
}

Json graph_to_json(const MetricGraph& g) {
  Json vs = Json::array();
  for (const Vertex& v : g.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight}});
  Json es = Json::array();
  for (const Edge& e : g.edges()) {
    es.push_back({{"id", e.id}, {"from", g.vertex(e.from).id}, {"to", g.vertex(e.to).id}, {"length", rational_to_json(e.length)}});
  }
  return {{"vertices", vs}, {"edges", es}};
}

GraphPtr graph_from_json(const Json& j) {
  GraphSpec spec;
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw Error(ErrorCode::ParseError, "vertices and edges must be arrays");
  for (const Json& v : vs) {
    VertexSpec s{string_field(v, "id"), 0};
    if (v.contains("weight")) s.weight = static_cast<int>(integer_of(v.at("weight")));
    spec.vertices.push_back(std::move(s));
  }
  for (const Json& e : es) {
    spec.edges.push_back({string_field(e, "id"), string_field(e, "from"), string_field(e, "to"),
                          rational_from_json(field(e, "length"))});
  }
  return build_graph(spec);
}

Json point_to_json(const MetricGraph& g, const Point& p) {
  if (p.is_vertex()) return g.vertex(p.vertex_index()).id;
  return {{"edge", g.edge(p.edge_index()).id}, {"offset", rational_to_json(p.offset())}};
}

Point point_from_json(const MetricGraph& g, const Json& j) {
  if (j.is_string()) {
    auto v = g.find_vertex(j.get<std::string>());
    if (!v) throw Error(ErrorCode::UnknownId, "unknown vertex '" + j.get<std::string>() + "'");
    return Point::vertex(*v);
  }
  std::string id = string_field(j, "edge");
  auto e = g.find_edge(id);
  if (!e) throw Error(ErrorCode::UnknownId, "unknown edge '" + id + "'");
  return g.point_on_edge(*e, rational_from_json(field(j, "offset")));
}

Json divisor_to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& [p, c] : d.entries()) out.push_back({{"at", point_to_json(*d.graph(), p)}, {"mult", c}});
  return out;
}

Divisor divisor_from_json(const GraphPtr& g, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a divisor is an array of {at, mult} entries");
  Divisor d(g);
  for (const Json& item : j) d.add(point_from_json(*g, field(item, "at")), integer_of(field(item, "mult")));
  return d;
}

Json function_to_json(const PLFunction& f) {
  const MetricGraph& g = *f.graph();
  Json pts = Json::array();
  for (const Point& p : f.knot_points()) {
    pts.push_back({{"at", point_to_json(g, p)}, {"value", rational_to_json(f.value_at(p))}});
  }
  return {{"breakpoints", pts}};
}

PLFunction function_from_json(const GraphPtr& g, const Json& j) {
  const Json& pts = field(j, "breakpoints");
  if (!pts.is_array()) throw Error(ErrorCode::ParseError, "breakpoints must be an array");
  std::vector<std::optional<Rational>> values(g->vertex_count());
  std::vector<std::vector<PLFunction::Knot>> interior(g->edge_count());
  std::set<Point> seen;
  for (const Json& item : pts) {
    Point p = point_from_json(*g, field(item, "at"));
    if (!seen.insert(p).second) throw Error(ErrorCode::ParseError, "breakpoint listed twice: " + g->describe(p));
    Rational value = rational_from_json(field(item, "value"));
    if (p.is_vertex()) values[p.vertex_index()] = value;
    else interior[p.edge_index()].push_back({p.offset(), value});
  }
  std::vector<Rational> vertex_values;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!values[v]) throw Error(ErrorCode::ParseError, "no value given at vertex '" + g->vertex(v).id + "'");
    vertex_values.push_back(*values[v]);
  }
  for (auto& ks : interior) {
    std::sort(ks.begin(), ks.end(), [](const auto& a, const auto& b) { return a.offset < b.offset; });
  }
  return PLFunction(g, std::move(vertex_values), std::move(interior));
}

Json level_map_to_json(const LevelMap& f) {
  Json out = Json::object();
  for (std::size_t v = 0; v < f.values.size(); ++v) out[f.graph->vertex(v).id] = f.values[v];
  return out;
}

LevelMap level_map_from_json(const GraphPtr& g, const Json& j) {
  LevelMap f = LevelMap::zero(g);
  std::vector<bool> set(g->vertex_count(), false);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "a level map is an object keyed by vertex id");
  for (const auto& [id, value] : j.items()) {
    auto v = g->find_vertex(id);
    if (!v) throw Error(ErrorCode::UnknownId, "unknown vertex '" + id + "'");
    f.values[*v] = integer_of(value);
    set[*v] = true;
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) throw Error(ErrorCode::ParseError, "level map misses a vertex");
  return f;
}

Json reduction_to_json(const GridModel& model, std::size_t base, const ReductionResult& r) {
  const MetricGraph& grid = *model.graph();
  Json fired = Json::array();
  for (const FiringStep& step : r.fired_sequence) {
    Json ids = Json::array();
    for (std::size_t v = 0; v < step.set.size(); ++v) {
      if (step.set[v]) ids.push_back(grid.vertex(v).id);
    }
    fired.push_back({{"set", ids}, {"multiplier", step.multiplier}});
  }
  return {{"subdivision", model.k},
          {"base", grid.vertex(base).id},
          {"reduced", divisor_to_json(r.reduced.to_coarse(model.grid))},
          {"witness", function_to_json(level_map_to_pl(model.grid, model.step, r.witness))},
          {"firedSequence", fired}};
}

Json linear_system_to_json(const LinearSystem& system, const std::vector<std::size_t>& indices) {
  Json elements = Json::array();
  for (std::size_t i : indices) {
    elements.push_back({{"divisor", divisor_to_json(system.elements[i].divisor)},
                        {"function", function_to_json(system.function(i))}});
  }
  return {{"subdivision", system.subdivision()}, {"count", indices.size()}, {"elements", elements}};
}

Json combinatorial_type_to_json(const CellModel& model, const CombinatorialType& t) {
  const MetricGraph& g = *model.base.fine;
  Json mv = Json::object(), me = Json::object(), s = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (t.vertex_multiplicity[v] != 0) mv[g.vertex(v).id] = t.vertex_multiplicity[v];
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!t.edge_multiplicities[e].empty()) me[g.edge(e).id] = t.edge_multiplicities[e];
    s[g.edge(e).id] = t.origin_slope[e];
  }
  return {{"vertexMultiplicity", mv}, {"edgeMultiplicities", me}, {"originSlope", s}};
}

CombinatorialType combinatorial_type_from_json(const CellModel& model, const Json& j) {
  const MetricGraph& g = *model.base.fine;
  CombinatorialType t;
  t.vertex_multiplicity.assign(g.vertex_count(), 0);
  t.edge_multiplicities.assign(g.edge_count(), {});
  t.origin_slope.assign(g.edge_count(), 0);
  auto vertex_of = [&](const std::string& id) {
    auto v = g.find_vertex(id);
    if (!v) throw Error(ErrorCode::UnknownId, "unknown model vertex '" + id + "'");
    return *v;
  };
  auto edge_of = [&](const std::string& id) {
    auto e = g.find_edge(id);
    if (!e) throw Error(ErrorCode::UnknownId, "unknown model edge '" + id + "'");
    return *e;
  };
  for (const auto& [id, m] : field(j, "vertexMultiplicity").items()) t.vertex_multiplicity[vertex_of(id)] = integer_of(m);
  for (const auto& [id, ms] : field(j, "edgeMultiplicities").items()) {
    for (const Json& m : ms) t.edge_multiplicities[edge_of(id)].push_back(integer_of(m));
  }
  for (const auto& [id, s] : field(j, "originSlope").items()) t.origin_slope[edge_of(id)] = integer_of(s);
  return t;
}

Json cell_survey_to_json(const CellSurvey& survey) {
  Json cells = Json::array();
  CellModel model;
  bool have_model = false;
  for (const CellReport& c : survey.cells) {
    if (!have_model) {
      model = cell_model(c.representative.graph());
      have_model = true;
    }
    cells.push_back({{"type", combinatorial_type_to_json(model, c.type)},
                     {"dimension", c.dimension},
                     {"representative", divisor_to_json(c.representative)},
                     {"representativeIndex", c.representative_index},
                     {"witnessed", c.witnessed},
                     {"isMaximal", c.is_maximal}});
  }
  return {{"label", survey.label()}, {"subdivision", survey.subdivision}, {"cells", cells}};
}

CellSurvey cell_survey_from_json(const GraphPtr& host, const Json& j) {
  CellSurvey survey;
  survey.subdivision = static_cast<int>(integer_of(field(j, "subdivision")));
  CellModel model = cell_model(host);
  for (const Json& c : field(j, "cells")) {
    CellReport r;
    r.type = combinatorial_type_from_json(model, field(c, "type"));
    r.dimension = static_cast<int>(integer_of(field(c, "dimension")));
    r.representative = divisor_from_json(host, field(c, "representative"));
    r.representative_index = static_cast<std::size_t>(integer_of(field(c, "representativeIndex")));
    r.witnessed = static_cast<std::size_t>(integer_of(field(c, "witnessed")));
    r.is_maximal = field(c, "isMaximal").get<bool>();
    survey.cells.push_back(std::move(r));
  }
  return survey;
}

Json realizability_to_json(const RealizabilityReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(
        {{"kind", kind_name(v.kind)}, {"location", v.location}, {"level", rational_to_json(v.level)}, {"reason", v.reason}});
  }
  Json witnesses = Json::array();
  for (const CycleWitness& w : report.witnesses) {
    witnesses.push_back({{"kind", kind_name(w.kind)},
                         {"location", w.location},
                         {"level", rational_to_json(w.level)},
                         {"block", w.block_edges}});
  }
  return {{"realizable", report.realizable},
          {"violations", violations},
          {"witnesses", witnesses},
          {"modelVertices", report.model_vertices}};
}

RealizabilityReport realizability_from_json(const Json& j) {
  RealizabilityReport r;
  r.realizable = field(j, "realizable").get<bool>();
  for (const Json& v : field(j, "violations")) {
    r.violations.push_back({kind_from(string_field(v, "kind")), string_field(v, "location"),
                            rational_from_json(field(v, "level")), string_field(v, "reason")});
  }
  for (const Json& w : field(j, "witnesses")) {
    r.witnesses.push_back({kind_from(string_field(w, "kind")), string_field(w, "location"),
                           rational_from_json(field(w, "level")), field(w, "block").get<std::vector<std::string>>()});
  }
  r.model_vertices = field(j, "modelVertices").get<std::vector<std::string>>();
  return r;
}

}  // namespace tropos
