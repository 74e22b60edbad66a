#include <doctest.h>

#include "hedetniemi/certificate.hpp"
#include "hedetniemi/constructions.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/serialize.hpp"

using namespace hedetniemi;

namespace {

const Json& c5_certificate() {
  static const Json cert = [] {
    VerifyOptions o;
    o.g_budget = SearchBudget{1000, 60.0, true};
    const Report r = verify_counterexample(CounterexampleParams::for_variant(Variant::c5_refined), o);
    REQUIRE(r.passed);
    return emit_certificate(r);
  }();
  return cert;
}

}  // namespace

TEST_CASE("json round trips") {
  const Graph c5 = cycle_graph(5);
  const Coloring col{graph_hash(c5), 3, {1, 2, 1, 2, 3}, true};
  const auto col2 = Json(col).get<Coloring>();
  CHECK(col2.map == col.map);
  CHECK(col2.graph_hash == col.graph_hash);
  CHECK(col2.colors == 3);

  const Homomorphism h{"a", "b", {0, 2, 1}};
  const auto h2 = parse_json(Json(h).dump()).get<Homomorphism>();
  CHECK(h2.map == h.map);
  CHECK(h2.target_hash == "b");

  const WideColoring w{"x", 3, 2, 1, {{1, 1}, {3, 2}}};
  const auto w2 = Json(w).get<WideColoring>();
  CHECK(w2.map == w.map);
  CHECK(w2.d == 1);

  const auto p = CounterexampleParams::for_variant(Variant::c7);
  const auto p2 = Json(p).get<CounterexampleParams>();
  CHECK(p2.variant == Variant::c7);
  CHECK(p2.d_g == 2);

  const SearchBudget b{7, 1.5, false};
  const auto b2 = Json(b).get<SearchBudget>();
  CHECK(b2.max_nodes == 7);
  CHECK_FALSE(b2.clique_precolor);

  for (Verdict v : {Verdict::found, Verdict::none, Verdict::exhausted}) CHECK(parse_verdict(to_string(v)) == v);
}

TEST_CASE("json parse errors surface as ParseError") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_json("{}").get<Coloring>(), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"graph_hash":"x","colors":"three","map":[]})").get<Coloring>(), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"graph_hash":"x","n":1,"k":1,"d":1,"pairs":[[1]]})").get<WideColoring>(), ParseError);
  CHECK_THROWS_AS(parse_verdict("maybe"), ParseError);
}

TEST_CASE("certificate round trip") {
  const Json& cert = c5_certificate();
  CHECK(cert["version"] == kCertificateVersion);
  CHECK(cert["h"].size() == 30);
  CHECK(cert["h_edges"].size() == 153);
  CHECK(cert["h_critical"]["edges"].size() == 108);
  CHECK(cert["verdicts"]["chi_g"] == "relies_on_theorem");
  const CertificateCheck r = check_certificate(parse_json(cert.dump()));
  CHECK(r.ok);
  CHECK(r.failures.empty());
  CHECK_FALSE(r.trusted.empty());
}

TEST_CASE("a flipped H edge is detected") {
  Json cert = c5_certificate();
  cert["h_edges"].erase(cert["h_edges"].begin());
  CHECK_FALSE(check_certificate(cert).ok);

  Json added = c5_certificate();
  const Graph h = [&] {
    std::vector<Edge> e = c5_certificate()["h_edges"].get<std::vector<Edge>>();
    return Graph(30, e);
  }();
  for (Vertex u = 0; u < 30; ++u) {
    bool done = false;
    for (Vertex v = u + 1; v < 30 && !done; ++v)
      if (!h.has_edge(u, v)) {
        added["h_edges"].push_back(Json::array({u, v}));
        done = true;
      }
    if (done) break;
  }
  CHECK_FALSE(check_certificate(added).ok);
}

TEST_CASE("a corrupted gamma fails the wideness check") {
  Json cert = c5_certificate();
  const auto g_edge = omega_tuples(6, 3).graph.edges().front();
  cert["gamma"]["pairs"][g_edge.u] = cert["gamma"]["pairs"][g_edge.v];
  const CertificateCheck r = check_certificate(cert);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front() == "gamma is not wide");
}

TEST_CASE("other tampering is detected") {
  {
    Json cert = c5_certificate();
    std::string t = cert["h"][7]["table"];
    t[0] = t[0] == '1' ? '2' : '1';
    cert["h"][7]["table"] = t;
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    cert["g_hash"] = std::string(64, '0');
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    cert["h"][9]["label"] = "Const(1)";
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    auto& w = cert["h_critical"]["witnesses"][0]["map"];
    w[0] = w[0].get<int>() % 5 + 1;
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    cert["verdicts"]["chi_h"]["verdict"] = "found";
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    cert["version"] = 99;
    CHECK_FALSE(check_certificate(cert).ok);
  }
  {
    Json cert = c5_certificate();
    cert.erase("h_edges");
    CHECK_FALSE(check_certificate(cert).ok);
  }
}

TEST_CASE("emit_certificate refuses failing reports") {
  Report r;
  CHECK_THROWS_AS(emit_certificate(r), InvalidArgument);
}
