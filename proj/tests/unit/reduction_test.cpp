#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tropos/catalog.hpp"
#include "tropos/error.hpp"
#include "tropos/reduction.hpp"
#include "tropos/refinement.hpp"

using namespace tropos;
using testing::at_vertices;
using testing::q;

TEST_CASE("Dhar's burning on theta") {
  GraphPtr theta = theta_graph();
  CHECK(dhar_unburned(*theta, at_vertices(theta, {{"v2", 2}}), 0) == std::vector<bool>{false, false});
  CHECK(dhar_unburned(*theta, at_vertices(theta, {{"v2", 3}}), 0) == std::vector<bool>{false, true});
  GraphPtr star = testing::star_graph(3);
  CHECK(dhar_unburned(*star, Divisor(star), 1) == std::vector<bool>(4, false));
  CHECK_THROWS_AS(dhar_unburned(*theta, at_vertices(theta, {{"v2", -1}}), 0), Error);
}

TEST_CASE("Dhar's burning agrees with the brute-force maximum firable set") {
  std::vector<GraphPtr> graphs{theta_graph(), complete_graph_k4(), unit_model(dumbbell_graph(), 1).graph(),
                               unit_model(two_cycles_two_bridges(), 1).graph()};
  for (const auto& g : graphs) {
    for (std::int64_t deg = 0; deg <= 4; ++deg) {
      oracle::for_each_effective(g->vertex_count(), deg, [&](const oracle::Chips& c) {
        Divisor d = Divisor::from_vertex_vector(g, c);
        for (std::size_t v = 0; v < g->vertex_count(); ++v) {
          CHECK(dhar_unburned(*g, d, v) == oracle::max_firable_avoiding(*g, c, v));
        }
      });
    }
  }
}

TEST_CASE("making a divisor effective away from a vertex") {
  GraphPtr theta = theta_graph();
  Divisor k = canonical_divisor(theta);
  auto [same, zero] = make_effective_away(theta, k, 0);
  CHECK(same == k);
  CHECK(zero.values == std::vector<std::int64_t>{0, 0});

  Divisor d = at_vertices(theta, {{"v1", 3}, {"v2", -1}});
  auto [e, f] = make_effective_away(theta, d, 0);
  CHECK(e.is_effective_away(Point::vertex(0)));
  CHECK(e.degree() == 2);
  CHECK(e == d + div_of_level_map(f));

  GraphPtr path = testing::path_graph(3);
  Divisor p = at_vertices(path, {{"v3", -1}});
  auto [pe, pf] = make_effective_away(path, p, 0);
  CHECK(pe.is_effective_away(Point::vertex(0)));
  CHECK(pe.degree() == -1);
  CHECK(pe == p + div_of_level_map(pf));
}

TEST_CASE("make_effective_away on random divisors") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> coeff(-4, 3);
  for (const auto& name : catalog_names()) {
    GraphPtr g = unit_model(catalog_graph(name), 1).graph();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::int64_t> c(g->vertex_count());
      for (auto& x : c) x = coeff(rng);
      Divisor d = Divisor::from_vertex_vector(g, c);
      std::size_t v = rng() % g->vertex_count();
      auto r = make_effective_away_steps(g, d, v);
      CHECK(r.reduced.is_effective_away(Point::vertex(v)));
      CHECK(r.reduced == d + div_of_level_map(r.witness));
    }
  }
}

TEST_CASE("reduction on theta") {
  GraphPtr theta = theta_graph();
  auto r = reduce(theta, at_vertices(theta, {{"v2", 3}}), 0);
  CHECK(r.reduced == at_vertices(theta, {{"v1", 3}}));
  CHECK(is_v_reduced(*theta, r.reduced, 0));
  CHECK(r.fired_sequence.size() == 1);
  CHECK(r.fired_sequence[0].multiplier == 1);

  Divisor k = canonical_divisor(theta);
  CHECK(reduce(theta, k, 0).reduced == k);
  CHECK(is_v_reduced(*theta, k, 0));
  CHECK(is_v_reduced(*theta, Divisor(theta), 0));
  CHECK_FALSE(is_v_reduced(*theta, at_vertices(theta, {{"v2", 3}}), 0));
}

TEST_CASE("principal divisors reduce to zero") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::int64_t> level(-3, 3);
  for (const auto& name : catalog_names()) {
    GraphPtr g = unit_model(catalog_graph(name), 1).graph();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> u(g->vertex_count());
      for (auto& x : u) x = level(rng);
      std::size_t v = rng() % g->vertex_count();
      CHECK(reduce(g, div_of_level_map({g, u}), v).reduced.is_zero());
    }
  }
}

TEST_CASE("reduction needs a uniform connected model") {
  GraphPtr uneven = testing::make_graph({"a", "b"}, {{"e", "a", "b", q(2)}, {"f", "a", "b", q(1)}});
  CHECK_THROWS_AS(reduce(uneven, Divisor(uneven), 0), Error);
  GraphPtr split = testing::make_graph({"a", "b"}, {});
  CHECK_THROWS_AS(reduce(split, Divisor(split), 0), Error);
}

TEST_CASE("effective representatives") {
  GraphPtr theta = theta_graph();
  CHECK(has_effective_representative(theta, at_vertices(theta, {{"v1", 2}})));
  CHECK_FALSE(has_effective_representative(theta, at_vertices(theta, {{"v1", 1}, {"v2", -1}})));
  CHECK_FALSE(is_principal(theta, at_vertices(theta, {{"v1", 1}, {"v2", -1}})));
  CHECK_FALSE(has_effective_representative(theta, at_vertices(theta, {{"v1", 5}, {"v2", -6}})));
}

TEST_CASE("rank examples") {
  GraphPtr theta = theta_graph();
  CHECK(rank(theta, canonical_divisor(theta), 1).rank == 1);
  CHECK(rank(theta, at_vertices(theta, {{"v1", 1}, {"v2", -1}}), 1).rank == -1);

  GraphPtr db = dumbbell_graph();
  Divisor three(db);
  three.add(db->point_on_edge("b", q(1, 2)), 3);
  auto r = rank(db, three, 2);
  CHECK(r.rank == 1);
  CHECK(r.subdivision == 2);
  CHECK_THROWS_AS(rank(db, three, 1), Error);
}

TEST_CASE("rank agrees with its definition on small models") {
  std::vector<GraphPtr> graphs{theta_graph(), unit_model(dumbbell_graph(), 1).graph(), testing::path_graph(3)};
  for (const auto& g : graphs) {
    for (std::int64_t deg = 0; deg <= 3; ++deg) {
      oracle::for_each_effective(g->vertex_count(), deg, [&](const oracle::Chips& c) {
        CHECK(rank_on_model(g, Divisor::from_vertex_vector(g, c)) == oracle::rank(*g, c));
      });
    }
  }
}

TEST_CASE("Riemann-Roch residual examples") {
  GraphPtr theta = theta_graph();
  CHECK(riemann_roch_residual(theta, canonical_divisor(theta), 1) == 0);
  CHECK(riemann_roch_residual(theta, Divisor(theta), 1) == 0);
  std::mt19937 rng(1);
  for (const auto& name : catalog_names()) {
    GraphPtr host = catalog_graph(name);
    GridModel m = unit_model(host, 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::int64_t> c(m.graph()->vertex_count(), 0);
      int deg = static_cast<int>(rng() % 4);
      for (int i = 0; i < deg; ++i) ++c[rng() % c.size()];
      Divisor d = Divisor::from_vertex_vector(m.graph(), c).to_coarse(m.grid);
      CHECK(riemann_roch_residual(host, d, 1) == 0);
    }
  }
}

TEST_CASE("rank rejects vertex weights") {
  GraphSpec spec{{{"a", 1}, {"b", 0}}, {{"e", "a", "b", q(1)}}};
  GraphPtr g = build_graph(spec);
  CHECK_THROWS_AS(rank(g, Divisor(g), 1), Error);
}
