#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tropos/blocks.hpp"
#include "tropos/catalog.hpp"
#include "tropos/error.hpp"
#include "tropos/refinement.hpp"

using namespace tropos;
using testing::make_graph;
using testing::q;

TEST_CASE("theta graph builds with valences 3 and 3") {
  GraphPtr g = theta_graph();
  CHECK(g->vertex_count() == 2);
  CHECK(g->edge_count() == 3);
  CHECK(g->valence(0) == 3);
  CHECK(g->valence(1) == 3);
  CHECK_FALSE(g->has_self_loops());
}

TEST_CASE("invalid graph descriptions are rejected with their codes") {
  auto code_of = [](auto&& build) {
    try {
      build();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { make_graph({"a", "b"}, {{"e", "a", "b", q(0)}}); }) == ErrorCode::NonPositiveLength);
  CHECK(code_of([] { make_graph({"a", "b"}, {{"e", "a", "b", q(-1)}}); }) == ErrorCode::NonPositiveLength);
  CHECK(code_of([] { make_graph({"a", "a"}, {}); }) == ErrorCode::DuplicateId);
  CHECK(code_of([] { make_graph({"a"}, {{"e", "a", "z"}}); }) == ErrorCode::DanglingEndpoint);
  CHECK(code_of([] { make_graph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}); }) == ErrorCode::DuplicateId);
}

TEST_CASE("dumbbell keeps its self-loops until a loopless model is taken") {
  GraphPtr g = dumbbell_graph();
  CHECK(g->has_self_loops());
  Refinement r = loopless_model(g);
  CHECK_FALSE(r.fine->has_self_loops());
  CHECK(r.fine->vertex_count() == 4);
  CHECK(r.fine->edge_count() == 5);
  CHECK(genus(*r.fine) == 2);
}

TEST_CASE("genus of small graphs") {
  CHECK(genus(*theta_graph()) == 2);
  CHECK(genus(*complete_graph_k4()) == 3);
  CHECK(genus(*testing::path_graph(5)) == 0);
  CHECK(genus(*testing::star_graph(4)) == 0);
  CHECK(genus(*complete_bipartite_k33()) == 4);
  CHECK(genus(*dumbbell_graph()) == 2);
}

TEST_CASE("weighted genus adds vertex weights") {
  GraphSpec spec{{{"a", 1}, {"b", 2}}, {{"e", "a", "b", q(1)}}};
  GraphPtr g = build_graph(spec);
  CHECK(genus(*g) == 0);
  CHECK(weighted_genus(*g) == 3);
}

TEST_CASE("genus after removing points of theta") {
  GraphPtr g = theta_graph();
  std::vector<Point> none;
  CHECK(genus_after_removal(g, none) == 2);
  std::vector<Point> one{g->point_on_edge("e1", q(1, 2))};
  CHECK(genus_after_removal(g, one) == 1);
  std::vector<Point> two{g->point_on_edge("e1", q(1, 2)), g->point_on_edge("e2", q(1, 2))};
  CHECK(genus_after_removal(g, two) == 0);
  auto cut = cut_at(g, two);
  CHECK(cut.component_count() == 1);
  // cutting every edge twice leaves the three middle segments plus the two ends
  std::vector<Point> six;
  for (const char* e : {"e1", "e2", "e3"}) {
    six.push_back(g->point_on_edge(e, q(1, 3)));
    six.push_back(g->point_on_edge(e, q(2, 3)));
  }
  CHECK(cut_at(g, six).component_count() == 5);
  CHECK(genus_after_removal(g, six) == 0);
}

TEST_CASE("genus after removal matches a component count on the cut model") {
  std::mt19937 rng(7);
  for (const auto& name : catalog_names()) {
    GraphPtr g = catalog_graph(name);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Point> pts;
      int count = std::uniform_int_distribution<int>(0, 4)(rng);
      for (int i = 0; i < count; ++i) {
        std::size_t e = std::uniform_int_distribution<std::size_t>(0, g->edge_count() - 1)(rng);
        int num = std::uniform_int_distribution<int>(1, 5)(rng);
        pts.push_back(g->point_on_edge(e, g->edge(e).length * q(num, 6)));
      }
      // the cut model counts components and edges of Γ minus the points
      auto cut = cut_at(g, pts);
      const MetricGraph& fine = *cut.model.fine;
      std::set<Point> unique(pts.begin(), pts.end());
      std::size_t removed = unique.size();
      // every removed point of valence 2 splits into two ends
      long vertices = static_cast<long>(fine.vertex_count() - removed + 2 * removed);
      long edges = static_cast<long>(fine.edge_count());
      long expected = edges - vertices + cut.component_count();
      CHECK(genus_after_removal(g, pts) == expected);
    }
  }
}

TEST_CASE("subdivision") {
  GraphPtr g = theta_graph();
  Refinement one = subdivide(g, 1);
  CHECK(*one.fine == *g);
  Refinement two = subdivide(g, 2);
  CHECK(two.fine->vertex_count() == 5);
  CHECK(two.fine->edge_count() == 6);
  CHECK(genus(*two.fine) == 2);
  CHECK(two.fine->find_vertex("e1@1/2"));

  GraphPtr unit = make_graph({"a", "b"}, {{"e", "a", "b"}});
  Refinement three = subdivide(unit, 3);
  CHECK(three.fine->edge_count() == 3);
  for (const Edge& e : three.fine->edges()) CHECK(e.length == q(1, 3));
  CHECK(three.to_fine(unit->point_on_edge("e", q(2, 3))).is_vertex());
  Point back = three.to_coarse(Point::vertex(three.fine->vertex_index("e@1/3")));
  CHECK(back == unit->point_on_edge("e", q(1, 3)));
}

TEST_CASE("model with breakpoints") {
  GraphPtr g = theta_graph();
  std::vector<Point> mid{g->point_on_edge("e1", q(1, 2))};
  Refinement r = model_with_breakpoints(g, mid);
  CHECK(r.fine->vertex_count() == 3);
  CHECK(r.fine->edge_count() == 4);

  std::vector<Point> verts{Point::vertex(0), Point::vertex(1)};
  CHECK(model_with_breakpoints(g, verts).is_identity());

  std::vector<Point> thirds{g->point_on_edge("e2", q(1, 3)), g->point_on_edge("e2", q(2, 3))};
  Refinement t = model_with_breakpoints(g, thirds);
  CHECK(t.pieces[1].size() == 3);
  for (std::size_t fe : t.pieces[1]) CHECK(t.fine->edge(fe).length == q(1, 3));
}

TEST_CASE("unit model of the dumbbell") {
  GridModel m = unit_model(dumbbell_graph(), 1);
  CHECK(m.step == 1);
  CHECK(m.graph()->vertex_count() == 4);
  CHECK(m.graph()->is_uniform());
  GridModel m3 = unit_model(dumbbell_graph(), 3);
  CHECK(m3.step == q(1, 3));
  CHECK(m3.graph()->edge_count() == 15);
}

TEST_CASE("blocks and bridges") {
  GraphPtr db = loopless_model(dumbbell_graph()).fine;
  auto b = blocks_and_bridges(*db);
  std::size_t bridge = db->edge_index("b");
  CHECK(b.edge_is_bridge[bridge]);
  int cycles = 0;
  for (const Block& blk : b.blocks) cycles += blk.is_bridge ? 0 : 1;
  CHECK(cycles == 2);

  auto t = blocks_and_bridges(*theta_graph());
  CHECK(t.blocks.size() == 1);
  CHECK(std::none_of(t.edge_is_bridge.begin(), t.edge_is_bridge.end(), [](bool x) { return x; }));

  GraphPtr p = testing::path_graph(5);
  auto pb = blocks_and_bridges(*p);
  CHECK(std::all_of(pb.edge_is_bridge.begin(), pb.edge_is_bridge.end(), [](bool x) { return x; }));
}

TEST_CASE("bridges agree with edge deletion on catalog models") {
  std::vector<GraphPtr> graphs{testing::path_graph(4), testing::star_graph(3)};
  for (const auto& name : catalog_names()) graphs.push_back(unit_model(catalog_graph(name), 1).graph());
  graphs.push_back(make_graph({"a", "b", "c", "d", "e"},
                              {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}, {"cd", "c", "d"}, {"de", "d", "e"},
                               {"de2", "d", "e"}}));
  for (const auto& g : graphs) {
    CHECK(blocks_and_bridges(*g).edge_is_bridge == oracle::bridges_by_deletion(*g));
  }
}

TEST_CASE("simple cycle membership") {
  GraphPtr theta = theta_graph();
  Subgraph all = Subgraph::whole(*theta);
  CHECK(vertex_on_simple_cycle(*theta, all, 0));
  CHECK(vertex_on_simple_cycle(*theta, all, 1));

  GraphPtr db = loopless_model(dumbbell_graph()).fine;
  CHECK_FALSE(edge_on_simple_cycle(*db, Subgraph::whole(*db), db->edge_index("b")));

  GraphPtr tree = testing::star_graph(3);
  for (std::size_t v = 0; v < tree->vertex_count(); ++v) CHECK_FALSE(vertex_on_simple_cycle(*tree, Subgraph::whole(*tree), v));
}

TEST_CASE("simple cycles and disjoint pairs") {
  GraphPtr theta = theta_graph();
  CHECK(simple_cycles(*theta, Subgraph::whole(*theta)).size() == 3);
  CHECK_FALSE(disjoint_cycles(*theta, Subgraph::whole(*theta)));

  GraphPtr k4 = complete_graph_k4();
  CHECK(simple_cycles(*k4, Subgraph::whole(*k4)).size() == 7);
  CHECK_FALSE(disjoint_cycles(*k4, Subgraph::whole(*k4)));

  GraphPtr db = loopless_model(dumbbell_graph()).fine;
  auto pair = disjoint_cycles(*db, Subgraph::whole(*db));
  REQUIRE(pair);
  for (std::size_t v : pair->first.vertices) {
    CHECK(std::find(pair->second.vertices.begin(), pair->second.vertices.end(), v) == pair->second.vertices.end());
  }
}

TEST_CASE("catalog names resolve and unknown names fail") {
  for (const auto& name : catalog_names()) CHECK(catalog_graph(name)->is_connected());
  CHECK(catalog_graph("banana(5)")->edge_count() == 5);
  CHECK(catalog_graph("cycle(6)")->vertex_count() == 6);
  CHECK_THROWS_AS(catalog_graph("petersen"), Error);
}
