#include <doctest.h>

#include <random>
#include <set>

#include "hedetniemi/constructions.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/isomorphism.hpp"
#include "hedetniemi/solver.hpp"
#include "oracles.hpp"

using namespace hedetniemi;

namespace {

std::set<Vertex> as_set(const VertexSet& s) {
  std::set<Vertex> out;
  s.for_each([&](std::size_t v) { out.insert(static_cast<Vertex>(v)); });
  return out;
}

VertexSet from_set(const Graph& g, const std::set<Vertex>& s) {
  VertexSet out = g.empty_set();
  for (Vertex v : s) out.set(v);
  return out;
}

std::size_t chi(const Graph& g) {
  const auto r = chromatic_number(g, 1, std::max<std::size_t>(1, g.order()));
  REQUIRE(r.kind == ChromaticResult::Kind::value);
  return r.value;
}

}  // namespace

TEST_CASE("make_family examples") {
  const Graph k6 = make_family(Family::complete, 6);
  CHECK(k6.order() == 6);
  CHECK(k6.edge_count() == 15);

  const Graph kn = make_family(Family::kneser, 5, 2);
  CHECK(kn.order() == 10);
  CHECK(kn.edge_count() == 15);
  CHECK(chi(kn) == 3);

  CHECK(odd_girth(make_family(Family::cycle, 5)) == 5u);

  CHECK_THROWS_AS(make_family(Family::complete, 0), InvalidArgument);
  CHECK_THROWS_AS(make_family(Family::cycle, 2), InvalidArgument);
  CHECK_THROWS_AS(make_family(Family::kneser, 5, 3), InvalidArgument);
}

TEST_CASE("kneser vertices are disjoint-adjacent k-subsets in lexicographic order") {
  const Graph kn = kneser_graph(5, 2);
  // {1,2} {1,3} {1,4} {1,5} {2,3} ...: {1,2} ~ {3,4} (index 7), not {1,3}.
  CHECK(kn.has_edge(0, 7));
  CHECK_FALSE(kn.has_edge(0, 1));
  CHECK(chi(kneser_graph(6, 2)) == 4);
  CHECK(chi(kneser_graph(7, 3)) == 3);
}

TEST_CASE("gamma_power examples") {
  std::mt19937 rng(1);
  for (int it = 0; it < 20; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 10, 0.3, 0.1);
    CHECK(gamma_power(g, 1).edges() == g.edges());
  }
  const Graph c5_3 = gamma_power(cycle_graph(5), 3);
  CHECK(is_complete(c5_3));
  CHECK_FALSE(c5_3.has_loops());
  const Graph c5_5 = gamma_power(cycle_graph(5), 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5_5.has_loop(v));
  CHECK_THROWS_AS(gamma_power(cycle_graph(5), 0), InvalidArgument);
}

TEST_CASE("walk neighborhoods examples") {
  const Graph c6 = cycle_graph(6);
  VertexSet s = c6.empty_set();
  s.set(0);
  CHECK(as_set(n_exact(c6, s, 2)) == std::set<Vertex>{0, 2, 4});
  CHECK(as_set(n_exact(c6, s, 0)) == std::set<Vertex>{0});
  CHECK(as_set(n_upto(c6, s, 2)) == std::set<Vertex>{0, 1, 2, 4, 5});

  const Graph k2 = complete_graph(2);
  VertexSet t = k2.empty_set();
  t.set(0);
  CHECK(as_set(n_exact(k2, t, 3)) == std::set<Vertex>{1});
}

TEST_CASE("n_exact agrees with explicit walk enumeration") {
  std::mt19937 rng(17);
  for (int it = 0; it < 150; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 9, 0.3, 0.05);
    std::set<Vertex> s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) s.insert(v);
    const std::size_t d = rng() % 5;
    CHECK(as_set(n_exact(g, from_set(g, s), d)) == oracle::walk_ends(g, s, d));
    std::set<Vertex> upto;
    for (std::size_t i = 0; i <= d; ++i) {
      const auto e = oracle::walk_ends(g, s, i);
      upto.insert(e.begin(), e.end());
    }
    CHECK(as_set(n_upto(g, from_set(g, s), d)) == upto);
  }
}

TEST_CASE("exact neighborhoods grow by two steps without isolated vertices") {
  std::mt19937 rng(29);
  int tested = 0;
  while (tested < 100) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 10, 0.35);
    if (g.has_isolated_vertex()) continue;
    ++tested;
    VertexSet s = g.empty_set();
    s.set(rng() % g.order());
    for (std::size_t d = 0; d < 4; ++d) CHECK(n_exact(g, s, d).is_subset_of(n_exact(g, s, d + 2)));
    for (std::size_t d = 1; d < 5; ++d)
      CHECK(n_upto(g, s, d) == (n_exact(g, s, d) | n_exact(g, s, d - 1)));
  }
}

TEST_CASE("gamma_power agrees with n_exact for odd lengths on random graphs") {
  std::mt19937 rng(31);
  for (int it = 0; it < 120; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 12, 0.25, 0.05);
    const std::size_t d = 1 + 2 * (rng() % 3);
    const Graph p = gamma_power(g, d);
    for (Vertex u = 0; u < g.order(); ++u) {
      VertexSet s = g.empty_set();
      s.set(u);
      CHECK(p.neighbors(u) == n_exact(g, s, d));
    }
  }
}

TEST_CASE("gamma_power is loopless exactly when the odd girth exceeds d") {
  for (std::size_t n : {3, 5, 7})
    for (std::size_t d : {1, 3, 5}) CHECK(gamma_power(cycle_graph(n), d).has_loops() == (n <= d));
  std::mt19937 rng(37);
  for (int it = 0; it < 50; ++it) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 9, 0.25);
    const auto girth = odd_girth(g);
    for (std::size_t d : {1, 3, 5}) CHECK(gamma_power(g, d).has_loops() == (girth && *girth <= d));
  }
}

TEST_CASE("lex_product examples and counts") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_isomorphic(lex_product(complete_graph(1), c5), c5));
  const Graph c5k2 = lex_product(c5, complete_graph(2));
  CHECK(c5k2.order() == 10);
  CHECK(chi(c5k2) == 5);
  CHECK(is_isomorphic(lex_product(complete_graph(3), complete_graph(2)), complete_graph(6)));

  std::mt19937 rng(41);
  for (int it = 0; it < 30; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 6, 0.5);
    const Graph h = oracle::random_graph(rng, 1 + rng() % 5, 0.5);
    const Graph p = lex_product(g, h);
    CHECK(p.order() == g.order() * h.order());
    CHECK(p.edge_count() == g.edge_count() * h.order() * h.order() + g.order() * h.edge_count());
  }
}

TEST_CASE("tensor_product examples") {
  const Graph t = tensor_product(complete_graph(2), complete_graph(2));
  CHECK(t.order() == 4);
  CHECK(t.edge_count() == 2);
  CHECK(t.degree(0) == 1);

  const std::vector<Edge> loop = {{0, 0}};
  const Graph looped(1, loop);
  const Graph c5 = cycle_graph(5);
  CHECK(is_isomorphic(tensor_product(c5, looped), c5));

  const Graph g = cycle_graph(7), h = complete_graph(3);
  const Graph p = tensor_product(g, h);
  std::vector<Vertex> left(p.order()), right(p.order());
  for (Vertex v = 0; v < p.order(); ++v) {
    left[v] = v / static_cast<Vertex>(h.order());
    right[v] = v % static_cast<Vertex>(h.order());
  }
  CHECK(verify_homomorphism(p, g, left));
  CHECK(verify_homomorphism(p, h, right));
}

TEST_CASE("odd_girth") {
  CHECK_FALSE(odd_girth(cycle_graph(6)).has_value());
  CHECK(odd_girth(cycle_graph(9)) == 9u);
  CHECK(odd_girth(kneser_graph(5, 2)) == 5u);
  const std::vector<Edge> loop = {{0, 0}, {0, 1}};
  CHECK(odd_girth(Graph(2, loop)) == 1u);
}
