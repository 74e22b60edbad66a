#include "hedetniemi/certificate.hpp"

#include <algorithm>
#include <set>

#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"

namespace hedetniemi {

namespace {

std::string encode_table(const FunctionTable& t) {
  std::string s(t.size(), '0');
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = static_cast<char>('0' + t[i]);
  return s;
}

FunctionTable decode_table(const std::string& s) {
  FunctionTable t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '1' || s[i] > '9') throw ParseError("table entry is not a color digit");
    t[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return t;
}

Json budget_json(const SearchBudget& b) { return b; }

}  // namespace

Json emit_certificate(const Report& report) {
  if (!report.passed || !report.instance || !report.chi_h)
    throw InvalidArgument("certificates are emitted for passing reports only");
  const Counterexample& cx = *report.instance;

  Json h = Json::array();
  for (const auto& fv : cx.h_vertices)
    h.push_back({{"label", fv.label.to_string()}, {"table", encode_table(fv.table)}});

  WideColoring gamma = cx.gamma;
  gamma.d = cx.params.g_radius();

  Json verdicts = {
      {"chi_h",
       {{"verdict", verdict_json(report.chi_h->verdict)},
        {"nodes", report.chi_h->stats.nodes},
        {"trusted_with_budget", true}}},
      {"product", {{"ok", report.product.ok}, {"checks", report.product.checks}}},
      {"chi_g", to_string(report.chi_g)},
  };
  if (report.chi_g_result) verdicts["chi_g_nodes"] = report.chi_g_result->stats.nodes;

  Json budgets = {{"h", budget_json(report.options.h_budget)}};
  if (report.options.g_budget) budgets["g"] = budget_json(*report.options.g_budget);

  Json cert = {
      {"version", kCertificateVersion},
      {"params", cx.params},
      {"g_hash", cx.g_hash},
      {"g_counts", {{"vertices", cx.g.graph.order()}, {"edges", cx.g.graph.edge_count()}}},
      {"gamma", gamma},
      {"h", h},
      {"h_edges", cx.h.edges()},
      {"verdicts", verdicts},
      {"budgets", budgets},
  };
  if (report.h_critical && report.h_critical->verdict == Verdict::none)
    cert["h_critical"] = {{"edges", report.h_critical->graph.edges()},
                          {"witnesses", report.h_critical->witnesses}};
  return cert;
}

CertificateCheck check_certificate(const Json& cert) {
  CertificateCheck out;
  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
  auto finish = [&]() {
    out.ok = out.failures.empty();
    return out;
  };

  try {
    if (!cert.is_object() || !cert.contains("version") || cert["version"] != kCertificateVersion) {
      fail("unsupported certificate version");
      return finish();
    }
    const auto params = cert.at("params").get<CounterexampleParams>();
    if (!parameter_check(params.k, params.c, params.n, params.rule()) || !params.matches_variant()) {
      fail("parameters do not define the variant");
      return finish();
    }

    const OmegaGraph g = omega_tuples(params.c + 1, params.d_g);
    if (graph_hash(g.graph) != cert.at("g_hash").get<std::string>()) fail("G hash mismatch");
    const Json& counts = cert.at("g_counts");
    if (counts.at("vertices").get<std::size_t>() != g.graph.order() ||
        counts.at("edges").get<std::size_t>() != g.graph.edge_count())
      fail("G counts mismatch");

    const auto gamma = cert.at("gamma").get<WideColoring>();
    bool wide = false;
    if (gamma.graph_hash != graph_hash(g.graph)) {
      fail("gamma refers to a different graph");
    } else if (gamma.d != params.g_radius()) {
      fail("gamma is not stated at the g radius");
    } else {
      try {
        wide = check_wide(g.graph, gamma, WideCondition::exact_independent);
      } catch (const InvalidArgument& e) {
        fail(std::string("gamma malformed: ") + e.what());
      }
      if (!wide && out.failures.empty()) fail("gamma is not wide");
    }
    if (!wide) return finish();

    const std::vector<FunctionLabel> expected_labels = h_labels(params);
    const Json& h = cert.at("h");
    if (!h.is_array() || h.size() != expected_labels.size()) {
      fail("H vertex list has the wrong size");
      return finish();
    }
    std::vector<FunctionTable> tables(h.size());
    const FunctionDeriver deriver(g.graph, gamma, params);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const FunctionLabel label = FunctionLabel::parse(h[i].at("label").get<std::string>());
      if (!(label == expected_labels[i])) fail("H vertex " + std::to_string(i) + " has an unexpected label");
      tables[i] = decode_table(h[i].at("table").get<std::string>());
      if (tables[i] != deriver.table(label)) fail(label.to_string() + ": table does not match its definition");
    }
    if (std::set<FunctionTable>(tables.begin(), tables.end()).size() != tables.size())
      fail("function tables are not distinct");
    if (!out.failures.empty()) return finish();

    const ExpAdjacencyIndex index(g.graph, params.c, tables);
    for (std::size_t i = 0; i < tables.size(); ++i)
      if (index.adjacent(i, i)) fail(expected_labels[i].to_string() + " is a loop");
    const Graph recomputed = index.graph();
    auto edges = cert.at("h_edges").get<std::vector<Edge>>();
    std::sort(edges.begin(), edges.end());
    if (edges != recomputed.edges()) fail("H edges differ from the recomputed adjacency");

    const ProductCheck product = verify_product_coloring(g.graph, tables, recomputed, params.c);
    if (!product.ok) fail("product coloring has a conflict");

    if (cert.contains("h_critical")) {
      auto crit_edges = cert["h_critical"].at("edges").get<std::vector<Edge>>();
      const auto witnesses = cert["h_critical"].at("witnesses").get<std::vector<EdgeWitness>>();
      bool subset = true;
      for (const Edge& e : crit_edges)
        if (e.u >= recomputed.order() || e.v >= recomputed.order() ||
            !recomputed.has_edge(e.u, e.v))
          subset = false;
      if (!subset) {
        fail("critical subgraph is not a subgraph of H");
      } else {
        const Graph crit(recomputed.order(), crit_edges);
        if (!verify_edge_witnesses(crit, params.c, witnesses))
          fail("critical subgraph witnesses do not check");
      }
    }

    const Json& verdicts = cert.at("verdicts");
    const Verdict chi_h = parse_verdict(verdicts.at("chi_h").at("verdict").get<std::string>());
    if (chi_h != Verdict::none) fail("recorded chi_h verdict is not 'none'");
    out.trusted.push_back("chi_h: find_coloring(H, " + std::to_string(params.c) + ") = none after " +
                          std::to_string(verdicts["chi_h"].value("nodes", 0ULL)) +
                          " nodes (not re-run)");
    out.trusted.push_back("chi_g: " + verdicts.value("chi_g", std::string("not_run")));
    if (cert.contains("h_critical"))
      out.trusted.push_back("critical subgraph is not " + std::to_string(params.c) +
                            "-colorable (not re-run)");
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  } catch (const ParseError& e) {
    fail(std::string("malformed certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    fail(std::string("malformed certificate: ") + e.what());
  }
  return finish();
}

}  // namespace hedetniemi
