#include <doctest.h>

#include <random>

#include "hedetniemi/constructions.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "oracles.hpp"

using namespace hedetniemi;

TEST_CASE("parse_dimacs examples") {
  const Graph g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(g.order() == 3);
  CHECK(is_complete(g));

  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\nx 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs(""), ParseError);
}

TEST_CASE("comments, loops and the col header are accepted") {
  const Graph g = parse_dimacs("c a comment\np col 2 2\nc another\ne 1 1\ne 1 2\n");
  CHECK(g.has_loop(0));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("emit is canonical and round-trips") {
  const std::string messy = "c x\np edge 4 4\ne 3 1\ne 2 1\ne 1 2\ne 4 3\n";
  const std::string canonical = "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n";
  CHECK(emit_dimacs(parse_dimacs(messy)) == canonical);
  CHECK(emit_dimacs(parse_dimacs(canonical)) == canonical);

  std::mt19937 rng(2);
  for (int it = 0; it < 50; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 30, 0.3, 0.1);
    const Graph back = parse_dimacs(emit_dimacs(g));
    CHECK(back.edges() == g.edges());
    CHECK(graph_hash(back) == graph_hash(g));
  }
}

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(graph_hash(complete_graph(3)) == sha256_hex("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"));
}

TEST_CASE("dot output lists every edge") {
  const std::string dot = emit_dot(cycle_graph(3), {"a", "b", "c"});
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("\"a\"") != std::string::npos);
  std::size_t dashes = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2)) ++dashes;
  CHECK(dashes == 3);
}
