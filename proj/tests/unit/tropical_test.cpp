#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tropos/catalog.hpp"
#include "tropos/error.hpp"
#include "tropos/linear_system.hpp"
#include "tropos/reduction.hpp"
#include "tropos/tropical_module.hpp"

using namespace tropos;
using testing::at_vertices;
using testing::q;

namespace {

GraphPtr two_points() { return testing::make_graph({"a", "b"}, {{"e", "a", "b"}}); }

PLFunction linear(const GraphPtr& g, Rational a, Rational b) { return PLFunction(g, {a, b}, {{}}); }

std::set<oracle::Chips> grid_states(const LinearSystem& s) {
  std::set<oracle::Chips> out;
  for (const auto& el : s.elements) out.insert(el.grid_divisor.vertex_vector());
  return out;
}

// Extremality straight from the definition on a finite module: f is extremal
// iff the projections of the other generators onto f, maxed together, stay
// strictly below f somewhere.
std::vector<bool> extremal_by_definition(const LinearSystem& s) {
  std::vector<std::vector<Rational>> samples;
  for (std::size_t i = 0; i < s.elements.size(); ++i) samples.push_back(oracle::dense_samples(s.function(i), s.grid.step, 1));
  std::vector<bool> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& f = samples[i];
    std::vector<std::optional<Rational>> acc(f.size());
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      Rational c = f[0] - samples[j][0];
      for (std::size_t p = 0; p < f.size(); ++p) c = std::min(c, Rational(f[p] - samples[j][p]));
      for (std::size_t p = 0; p < f.size(); ++p) {
        Rational v = samples[j][p] + c;
        if (!acc[p] || v > *acc[p]) acc[p] = v;
      }
    }
    bool covered = true;
    for (std::size_t p = 0; p < f.size() && covered; ++p) covered = acc[p] && *acc[p] == f[p];
    out.push_back(!covered);
  }
  return out;
}

}  // namespace

TEST_CASE("inner products and projections") {
  GraphPtr g = two_points();
  PLFunction f = linear(g, q(2), q(5));
  PLFunction h = linear(g, q(1), q(1));
  CHECK(inner(f, f) == 0);
  CHECK(inner(f.shifted(q(3, 2)), f) == q(3, 2));
  CHECK(inner(f, h) == 1);
  CHECK(project(f, h) == linear(g, q(2), q(2)));
  CHECK(project(f, f) == f);

  // a tent below a line: the minimum sits at the interior knot
  PLFunction tent(g, {q(0), q(0)}, {{{q(1, 2), q(1, 2)}}});
  CHECK(inner(PLFunction::constant(g, q(1)), tent) == q(1, 2));
}

TEST_CASE("projections touch from below") {
  GridModel m = unit_model(theta_graph(), 2);
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::int64_t> level(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    LevelMap a{m.graph(), std::vector<std::int64_t>(m.graph()->vertex_count())};
    LevelMap b = a;
    for (auto& x : a.values) x = level(rng);
    for (auto& x : b.values) x = level(rng);
    PLFunction f = level_map_to_pl(m.grid, m.step, a);
    PLFunction g = level_map_to_pl(m.grid, m.step, b);
    PLFunction p = project(f, g);
    auto fs = oracle::dense_samples(f, m.step, 1);
    auto ps = oracle::dense_samples(p, m.step, 1);
    bool touches = false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      CHECK(ps[i] <= fs[i]);
      touches = touches || ps[i] == fs[i];
    }
    CHECK(touches);
  }
}

TEST_CASE("span membership examples") {
  // on two isolated points the projections are (0,-1) and (-1,0)
  GraphPtr points = testing::make_graph({"a", "b"}, {});
  std::vector<PLFunction> discrete{PLFunction(points, {q(0), q(-1)}, {}), PLFunction(points, {q(-1), q(0)}, {})};
  CHECK(in_span(PLFunction::constant(points, q(0)), discrete));
  // joined by an edge, both projections dip to -1/2 at the midpoint
  GraphPtr g = two_points();
  std::vector<PLFunction> gens{linear(g, q(0), q(-1)), linear(g, q(-1), q(0))};
  CHECK_FALSE(in_span(PLFunction::constant(g, q(0)), gens));
  CHECK(in_span(gens[0], gens));
  CHECK(in_span(trop_max(gens[0], gens[1].shifted(q(3))), gens));
  CHECK_FALSE(in_span(linear(g, q(0), q(2)), gens));
  CHECK_THROWS_AS(in_span(gens[0], std::vector<PLFunction>{}), Error);
}

TEST_CASE("in_span agrees with the coefficient-grid oracle") {
  std::mt19937 rng(17);
  std::vector<GridModel> models{unit_model(theta_graph(), 2), unit_model(dumbbell_graph(), 1), unit_model(testing::path_graph(3), 2)};
  std::uniform_int_distribution<std::int64_t> level(-2, 2);
  int positives = 0, negatives = 0;
  for (const auto& m : models) {
    auto random_fn = [&] {
      LevelMap l{m.graph(), std::vector<std::int64_t>(m.graph()->vertex_count())};
      for (auto& x : l.values) x = level(rng);
      return level_map_to_pl(m.grid, m.step, l);
    };
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t k = 1 + rng() % 3;
      std::vector<PLFunction> gens;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(random_fn());
      PLFunction f = random_fn();
      if (trial % 2 == 0) {
        f = gens[0].shifted(m.step * static_cast<long>(rng() % 3));
        for (std::size_t i = 1; i < k; ++i) {
          if (rng() % 2) f = trop_max(f, gens[i].shifted(m.step * (static_cast<long>(rng() % 5) - 2)));
        }
      }
      std::vector<std::vector<Rational>> gs;
      // with levels in [-2, 2] every knot of f, of the generators and of
      // their shifted maxima lies on a fraction of a piece with denominator <= 8
      for (const auto& h : gens) gs.push_back(oracle::dense_samples(h, m.step, 8));
      std::vector<Rational> coefficients;
      for (long c = -8; c <= 8; ++c) coefficients.push_back(m.step * c);
      bool expected = oracle::in_span_by_grid(oracle::dense_samples(f, m.step, 8), gs, coefficients);
      CHECK(in_span(f, gens) == expected);
      (expected ? positives : negatives)++;
    }
  }
  CHECK(positives > 20);
  CHECK(negatives > 20);
}

TEST_CASE("can_fire examples") {
  GraphPtr theta = theta_graph();
  Divisor k = canonical_divisor(theta);
  CHECK(can_fire(*theta, k, {true, true}));
  CHECK_FALSE(can_fire(*theta, k, {false, true}));
  CHECK(can_fire(*theta, at_vertices(theta, {{"v2", 3}}), {false, true}));
}

TEST_CASE("linear system examples") {
  GraphPtr theta = theta_graph();
  LinearSystem s = enumerate_linear_system(theta, canonical_divisor(theta), 1);
  REQUIRE(s.elements.size() == 1);
  CHECK(s.elements[0].divisor == canonical_divisor(theta));
  CHECK(extremal_indices(s) == std::vector<std::size_t>{0});

  LinearSystem zero = enumerate_linear_system(theta, Divisor(theta), 1);
  REQUIRE(zero.elements.size() == 1);
  CHECK(zero.elements[0].divisor.is_zero());

  LinearSystem k2 = enumerate_linear_system(theta, canonical_divisor(theta), 2);
  CHECK(k2.elements.size() == 4);
  CHECK_THROWS_AS(enumerate_linear_system(theta, at_vertices(theta, {{"v1", -1}}), 1), Error);
}

TEST_CASE("dumbbell canonical system matches the integer-solve oracle") {
  GraphPtr db = dumbbell_graph();
  LinearSystem s = enumerate_linear_system(db, canonical_divisor(db), 1);
  const MetricGraph& grid = *s.grid.graph();
  CHECK(grid_states(s) == oracle::linear_system(grid, s.base_grid.vertex_vector()));
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    CHECK(s.elements[i].grid_divisor == s.base_grid + div_of_level_map(s.elements[i].witness));
    CHECK(s.elements[i].witness.min_value() == 0);
    CHECK(s.elements[i].divisor == canonical_divisor(db) + div_of_pl(s.function(i)));
  }
}

TEST_CASE("enumeration respects the state cap") {
  GraphPtr g = complete_bipartite_k33();
  EnumerationOptions tiny;
  tiny.state_cap = 10;
  try {
    enumerate_linear_system(g, canonical_divisor(g), 2, tiny);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("extremality examples") {
  GraphPtr tree = testing::path_graph(3);
  CHECK(is_extremal(Divisor(tree), PLFunction::constant(tree, q(0))));
  GraphPtr theta = theta_graph();
  CHECK_FALSE(is_extremal(canonical_divisor(theta), PLFunction::constant(theta, q(0))));
  CHECK_THROWS_AS(is_extremal(Divisor(theta), PLFunction(theta, {q(0), q(1)}, {{}, {}, {}})), Error);
}

TEST_CASE("grid extremals agree with the definition") {
  struct Case {
    GraphPtr host;
    Divisor d;
    int k;
  };
  std::vector<Case> cases;
  GraphPtr c5 = cycle_graph(5);
  cases.push_back({c5, at_vertices(c5, {{"v1", 2}}), 1});
  cases.push_back({c5, at_vertices(c5, {{"v1", 3}}), 1});
  cases.push_back({c5, at_vertices(c5, {{"v3", 2}}), 2});
  for (const char* name : {"theta", "dumbbell", "K4", "two-cycles-two-bridges", "banana(4)"}) {
    GraphPtr g = catalog_graph(name);
    for (int k = 1; k <= 2; ++k) cases.push_back({g, canonical_divisor(g), k});
  }
  GraphPtr db = dumbbell_graph();
  Divisor three(db);
  three.add(db->point_on_edge("b", q(1, 2)), 3);
  cases.push_back({db, three, 2});
  for (const auto& c : cases) {
    LinearSystem s = enumerate_linear_system(c.host, c.d, c.k);
    auto expected = extremal_by_definition(s);
    auto found = extremal_indices(s);
    std::vector<bool> flags(s.elements.size(), false);
    for (auto i : found) flags[i] = true;
    CHECK(flags == expected);
  }
}

TEST_CASE("grid_in_span agrees with in_span") {
  GraphPtr g = two_cycles_two_bridges();
  LinearSystem s = enumerate_linear_system(g, canonical_divisor(g), 2);
  auto ext = extremal_indices(s);
  std::vector<PLFunction> gens;
  std::vector<const LevelMap*> grid_gens;
  for (std::size_t i = 0; i < 3 && i < ext.size(); ++i) {
    gens.push_back(s.function(ext[i]));
    grid_gens.push_back(&s.elements[ext[i]].witness);
  }
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    CHECK(grid_in_span(*s.grid.graph(), s.elements[i].witness, grid_gens) == in_span(s.function(i), gens));
  }
}

TEST_CASE("tropical dependence verification") {
  GraphPtr g = two_points();
  PLFunction f = linear(g, q(0), q(1));
  std::vector<PLFunction> same{f, f};
  std::vector<Rational> zero{q(0), q(0)};
  CHECK(verify_tropical_dependence(same, zero));
  std::vector<PLFunction> apart{f.shifted(q(1)), f};
  CHECK_FALSE(verify_tropical_dependence(apart, zero));
  CHECK_THROWS_AS(verify_tropical_dependence(std::vector<PLFunction>{f}, std::vector<Rational>{q(0)}), Error);
}

TEST_CASE("dependence verdicts match dense sampling") {
  GridModel m = unit_model(theta_graph(), 2);
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> level(-2, 2);
  auto random_fn = [&] {
    LevelMap l{m.graph(), std::vector<std::int64_t>(m.graph()->vertex_count())};
    for (auto& x : l.values) x = level(rng);
    return level_map_to_pl(m.grid, m.step, l);
  };
  int agreeing = 0;
  for (int trial = 0; trial < 100; ++trial) {
    PLFunction a = random_fn(), b = random_fn();
    std::vector<PLFunction> fns{a, b, trop_max(a, b)};
    std::vector<Rational> coeffs{m.step * static_cast<long>(rng() % 3), m.step * static_cast<long>(rng() % 3), q(0)};
    // slopes differ by at most 8, so crossings sit on fractions of a piece
    // with denominator <= 8 and the samples include a point strictly between
    // any two consecutive ones
    std::vector<std::vector<Rational>> samples;
    for (std::size_t i = 0; i < fns.size(); ++i) samples.push_back(oracle::dense_samples(fns[i].shifted(coeffs[i]), m.step, 8));
    bool tied = true;
    for (std::size_t p = 0; p < samples[0].size() && tied; ++p) {
      Rational low = std::min({samples[0][p], samples[1][p], samples[2][p]});
      int count = (samples[0][p] == low) + (samples[1][p] == low) + (samples[2][p] == low);
      tied = count >= 2;
    }
    CHECK(verify_tropical_dependence(fns, coeffs) == tied);
    agreeing += tied;
  }
  CHECK(agreeing > 0);
}

TEST_CASE("dependence search") {
  GraphPtr g = two_points();
  PLFunction f = linear(g, q(0), q(1));
  std::vector<PLFunction> dup{f, f, f};
  auto found = find_tropical_dependence(dup);
  REQUIRE(found);
  CHECK(*found == std::vector<Rational>{q(0), q(0), q(0)});

  std::vector<PLFunction> independent{f, linear(g, q(0), q(-1))};
  CHECK_FALSE(find_tropical_dependence(independent));

  GraphPtr theta = theta_graph();
  PLFunction a(theta, {q(0), q(1)}, {{}, {}, {}});
  PLFunction b(theta, {q(1), q(0)}, {{}, {}, {}});
  std::vector<PLFunction> three{a, b, trop_min(a, b)};
  auto coeffs = find_tropical_dependence(three);
  REQUIRE(coeffs);
  CHECK(verify_tropical_dependence(three, *coeffs));
}
