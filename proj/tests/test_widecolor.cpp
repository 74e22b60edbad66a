#include <doctest.h>

#include <random>
#include <set>

#include "hedetniemi/constructions.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/omega.hpp"
#include "hedetniemi/widecolor.hpp"
#include "oracles.hpp"

using namespace hedetniemi;

namespace {

WideColoring make_wide(const Graph& g, std::uint32_t n, std::uint32_t k, std::uint32_t d,
                       const std::vector<std::uint32_t>& colors) {
  WideColoring w{graph_hash(g), n, k, d, {}};
  for (std::uint32_t x : colors) w.map.push_back(pair_of(x, k));
  return w;
}

std::vector<std::set<Vertex>> classes_of(const WideColoring& w) {
  std::vector<std::set<Vertex>> out(w.class_count());
  for (Vertex v = 0; v < w.map.size(); ++v) out[w.class_of(v)].insert(v);
  return out;
}

// Condition 1 by explicit walk enumeration.
bool oracle_walk_power(const Graph& g, const WideColoring& w) {
  for (const auto& cls : classes_of(w))
    for (Vertex u : cls)
      for (Vertex v : cls)
        if (oracle::walk_joins(g, u, v, 2 * w.d + 1)) return false;
  return true;
}

bool oracle_exact(const Graph& g, const WideColoring& w, std::size_t d) {
  for (const auto& cls : classes_of(w))
    if (!oracle::is_independent(g, oracle::walk_ends(g, cls, d))) return false;
  return true;
}

bool oracle_upto_sided(const Graph& g, const WideColoring& w) {
  for (const auto& cls : classes_of(w)) {
    std::set<Vertex> region;
    for (std::size_t i = 0; i <= w.d; ++i) {
      const auto e = oracle::walk_ends(g, cls, i);
      region.insert(e.begin(), e.end());
    }
    if (!oracle::is_bipartite(g, region, cls)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pair_of is the fixed bijection") {
  CHECK(pair_of(1, 2) == ColorPair{1, 1});
  CHECK(pair_of(2, 2) == ColorPair{1, 2});
  CHECK(pair_of(3, 2) == ColorPair{2, 1});
  CHECK(pair_of(6, 2) == ColorPair{3, 2});
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t x = 1; x <= 12; ++x) seen.insert({pair_of(x, 3).a, pair_of(x, 3).b});
  CHECK(seen.size() == 12);
}

TEST_CASE("check_wide examples") {
  const Graph c7 = cycle_graph(7);
  const auto id7 = make_wide(c7, 7, 1, 2, {1, 2, 3, 4, 5, 6, 7});
  for (int cond = 1; cond <= 4; ++cond) CHECK(check_wide(c7, id7, static_cast<WideCondition>(cond)));

  const Graph c5 = cycle_graph(5);
  const auto id5 = make_wide(c5, 5, 1, 2, {1, 2, 3, 4, 5});
  for (int cond = 1; cond <= 4; ++cond) CHECK_FALSE(check_wide(c5, id5, static_cast<WideCondition>(cond)));

  const Graph c6 = cycle_graph(6);
  CHECK(check_wide(c6, make_wide(c6, 2, 1, 0, {1, 2, 1, 2, 1, 2}), WideCondition::exact_independent));
  CHECK_FALSE(check_wide(c6, make_wide(c6, 2, 1, 0, {1, 1, 2, 1, 2, 2}), WideCondition::exact_independent));

  const std::vector<Edge> e = {{0, 1}};
  const Graph isolated(3, e);
  CHECK_THROWS_AS(check_wide(isolated, make_wide(isolated, 3, 1, 1, {1, 2, 3}), WideCondition::exact_independent),
                  InvalidArgument);
  CHECK_THROWS_AS(check_wide(c5, make_wide(c5, 2, 1, 1, {1, 2, 1}), WideCondition::exact_independent),
                  InvalidArgument);
}

// Path a-b-c with S = {a, b}, d = 1: N^{<=1}(S) is the whole path, which is
// bipartite, yet a-b-a-b is a walk of length 3 inside S. Condition 4 must
// also demand that S sits on one side.
TEST_CASE("condition 4 needs the class on one side of the bipartition") {
  const std::vector<Edge> path = {{0, 1}, {1, 2}};
  const Graph g(3, path);
  const auto w = make_wide(g, 2, 1, 1, {1, 1, 2});
  CHECK(is_bipartite(induced_subgraph(g, g.full_set()).graph));
  CHECK_FALSE(check_wide(g, w, WideCondition::walk_power_coloring));
  CHECK_FALSE(check_wide(g, w, WideCondition::exact_independent));
  CHECK_FALSE(check_wide(g, w, WideCondition::upto_bipartite));
}

TEST_CASE("the four conditions agree with each other and with the oracles") {
  std::mt19937 rng(73);
  int tested = 0, wide = 0;
  while (tested < 300) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 9, 0.15 + (rng() % 30) / 100.0);
    if (g.has_isolated_vertex()) continue;
    const std::uint32_t k = 1 + rng() % 2;
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % g.order());
    const std::uint32_t d = 1 + rng() % 2;
    std::vector<std::uint32_t> colors(g.order());
    for (auto& x : colors) x = 1 + rng() % (n * k);
    const auto w = make_wide(g, n, k, d, colors);
    ++tested;
    const bool c1 = check_wide(g, w, WideCondition::walk_power_coloring);
    const bool c2 = check_wide(g, w, WideCondition::exact_independent);
    const bool c3 = check_wide(g, w, WideCondition::all_exact_independent);
    const bool c4 = check_wide(g, w, WideCondition::upto_bipartite);
    CHECK(c1 == c2);
    CHECK(c2 == c3);
    CHECK(c3 == c4);
    CHECK(c1 == oracle_walk_power(g, w));
    CHECK(c2 == oracle_exact(g, w, d));
    CHECK(c4 == oracle_upto_sided(g, w));
    wide += c1;
  }
  // Both outcomes must be exercised.
  CHECK(wide > 20);
  CHECK(wide < tested - 20);
}

TEST_CASE("wideness is monotone in d") {
  std::mt19937 rng(79);
  int tested = 0;
  while (tested < 100) {
    const Graph g = oracle::random_graph(rng, 3 + rng() % 10, 0.25);
    if (g.has_isolated_vertex()) continue;
    ++tested;
    std::vector<std::uint32_t> colors(g.order());
    for (std::uint32_t i = 0; i < colors.size(); ++i) colors[i] = i + 1;
    auto w = make_wide(g, static_cast<std::uint32_t>(g.order()), 1, 3, colors);
    bool above = check_wide(g, w, WideCondition::exact_independent);
    for (std::uint32_t d = 3; d-- > 0;) {
      w.d = d;
      const bool here = check_wide(g, w, WideCondition::exact_independent);
      CHECK((!above || here));
      above = here;
    }
  }
}

TEST_CASE("zero_position_coloring examples") {
  const OmegaGraph c5 = omega_tuples(6, 3);
  const WideColoring g5 = zero_position_coloring(c5, 3, 2);
  CHECK(g5.d == 3);
  CHECK(g5.graph_hash == graph_hash(c5.graph));
  CHECK(check_wide(c5.graph, g5, WideCondition::exact_independent));
  CHECK(check_wide(c5.graph, g5, WideCondition::all_exact_independent));
  CHECK(check_wide(c5.graph, g5, WideCondition::upto_bipartite));

  const OmegaGraph c7 = omega_tuples(8, 2);
  CHECK(check_wide(c7.graph, zero_position_coloring(c7, 4, 2), WideCondition::exact_independent));

  const OmegaGraph k2 = omega_tuples(2, 1);
  const WideColoring w = zero_position_coloring(k2, 2, 1);
  CHECK(w.map[0] != w.map[1]);
  CHECK(check_wide(k2.graph, w, WideCondition::walk_power_coloring));

  CHECK_THROWS_AS(zero_position_coloring(c5, 2, 2), InvalidArgument);
}

TEST_CASE("zero-position coloring is wide on every small tuple model") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t d = 1; d <= 3; ++d) {
      const OmegaGraph g = omega_tuples(n, d);
      const WideColoring w = zero_position_coloring(g, static_cast<std::uint32_t>(n), 1);
      if (g.graph.order() <= 1024) CHECK(check_wide(g.graph, w, WideCondition::walk_power_coloring));
      CHECK(check_wide(g.graph, w, WideCondition::upto_bipartite));
    }
}

TEST_CASE("adjunction examples") {
  const auto a = adjunction_check(cycle_graph(5), complete_graph(3), 3);
  CHECK(a.power_side == Verdict::none);
  CHECK(a.omega_side == Verdict::none);
  CHECK(adjunction_holds(cycle_graph(7), complete_graph(3), 3));
  const auto b = adjunction_check(complete_graph(2), cycle_graph(5), 1);
  CHECK(b.power_side == Verdict::found);
  CHECK(b.omega_side == Verdict::found);
  CHECK_THROWS_AS(adjunction_check(cycle_graph(5), complete_graph(3), 2), InvalidArgument);
  CHECK_THROWS_AS(adjunction_check(cycle_graph(5), Graph(2, std::vector<Edge>{}), 3), InvalidArgument);
}

TEST_CASE("adjunction holds on random instances") {
  std::mt19937 rng(83);
  int tested = 0, found = 0;
  while (tested < 120) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 5, 0.35);
    Graph h;
    switch (rng() % 3) {
      case 0: h = complete_graph(2 + rng() % 3); break;
      case 1: h = cycle_graph(3 + rng() % 3); break;
      default: h = oracle::random_graph(rng, 2 + rng() % 3, 0.6, 0.2); break;
    }
    if (h.edge_count() == 0) continue;
    const std::size_t length = 1 + 2 * (rng() % 3);
    const auto r = adjunction_check(g, h, length);
    REQUIRE(r.power_side != Verdict::exhausted);
    REQUIRE(r.omega_side != Verdict::exhausted);
    CHECK(r.agree());
    CHECK((r.power_side == Verdict::found) == oracle::hom_exists(gamma_power(g, length), h));
    found += r.power_side == Verdict::found;
    ++tested;
  }
  CHECK(found > 10);
  CHECK(found < tested - 10);
}
