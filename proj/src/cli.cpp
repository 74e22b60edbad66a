#include "hedetniemi/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include "hedetniemi/certificate.hpp"
#include "hedetniemi/constructions.hpp"
#include "hedetniemi/counterexample.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/omega.hpp"
#include "hedetniemi/parallel.hpp"
#include "hedetniemi/serialize.hpp"
#include "hedetniemi/solver.hpp"
#include "hedetniemi/widecolor.hpp"

namespace hedetniemi {

namespace {

struct Common {
  std::uint64_t budget_nodes = 100'000'000;
  double budget_secs = 600.0;
  std::size_t threads = 0;
  bool json = false;

  SearchBudget budget(bool clique = true) const { return {budget_nodes, budget_secs, clique}; }
};

struct GraphOutput {
  std::string path;
  std::string dot;
};

void add_graph_output(CLI::App* cmd, GraphOutput& o) {
  cmd->add_option("-o,--output", o.path, "DIMACS output file (stdout if omitted)");
  cmd->add_option("--dot", o.dot, "Graphviz output file");
}

int emit_graph(const Graph& g, const GraphOutput& o, const Common& common, std::ostream& out,
               const std::vector<std::string>& labels = {}) {
  const std::string dimacs = emit_dimacs(g);
  if (!o.path.empty()) write_text_file(o.path, dimacs);
  if (!o.dot.empty()) write_text_file(o.dot, emit_dot(g, labels));
  if (common.json) {
    Json j = {{"vertices", g.order()}, {"edges", g.edge_count()}, {"hash", graph_hash(g)}};
    if (!o.path.empty()) j["output"] = o.path;
    else j["dimacs"] = dimacs;
    out << j.dump() << "\n";
  } else if (o.path.empty()) {
    out << dimacs;
  } else {
    out << "wrote " << o.path << ": " << g.order() << " vertices, " << g.edge_count()
        << " edges\n";
  }
  return kExitOk;
}

int verdict_exit(Verdict v) { return v == Verdict::exhausted ? kExitExhausted : kExitOk; }

std::string join_colors(const std::vector<Color>& map) {
  std::string s;
  for (std::size_t i = 0; i < map.size(); ++i) s += (i ? " " : "") + std::to_string(map[i]);
  return s;
}

int run_verify_counterexample(const Common& common, Variant variant, ClassReading reading,
                              const std::string& cert_path, bool check_g,
                              std::uint64_t g_nodes, double g_secs,
                              std::optional<bool> critical, std::ostream& out) {
  CounterexampleParams params = CounterexampleParams::for_variant(variant);
  params.reading = reading;
  VerifyOptions options;
  options.h_budget = common.budget();
  if (check_g) options.g_budget = SearchBudget{g_nodes, g_secs, true};
  options.critical = critical;
  const Report report = verify_counterexample(params, options);

  if (common.json) {
    out << report_json(report).dump(2) << "\n";
  } else {
    out << "variant " << to_string(variant) << " (k=" << params.k << ", c=" << params.c
        << ", n=" << params.n << ", d=" << params.d_g << ", reading " << to_string(reading)
        << ")\n";
    for (const auto& c : report.checks)
      out << (c.passed ? "  PASS " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": ")
          << c.detail << "\n";
    for (const auto& r : report.readings) {
      out << "  reading " << to_string(r.reading) << ": ";
      if (!r.built) {
        out << "not built (" << r.error << ")\n";
        continue;
      }
      out << r.h_edges << " H edges, chi_h " << to_string(r.chi_h);
      if (r.critical_edges) out << ", critical " << *r.critical_edges;
      out << ", undefined points " << r.undefined_points
          << (r.matches_expected ? ", matches" : ", does not match") << "\n";
    }
    out << "  chi_g: " << to_string(report.chi_g);
    if (report.chi_g == ChiGStatus::relies_on_theorem)
      out << " (search exhausted; chi(G) > c follows from the chromatic number of the adjoint "
             "of K_{c+1}, not machine-checked)";
    if (report.chi_g_result) out << " after " << report.chi_g_result->stats.nodes << " nodes";
    out << "\n" << (report.passed ? "PASS" : "FAILED") << "\n";
  }

  if (!cert_path.empty() && report.passed)
    write_text_file(cert_path, emit_certificate(report).dump() + "\n");
  if (report.mandatory_exhausted) return kExitExhausted;
  return report.passed ? kExitOk : kExitFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph constructions and exact searches around exponential-graph counterexamples",
               "hedet"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--budget-nodes", common.budget_nodes, "Search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-secs", common.budget_secs, "Search time budget in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", common.threads, "Worker threads (default: HEDET_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", common.json, "Machine-readable output");

  int code = kExitOk;
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto on = [&](CLI::App* sub, std::function<void()> action) {
    actions.emplace_back(sub, std::move(action));
  };

  // construct
  auto* construct = app.add_subcommand("construct", "Build a graph and emit DIMACS");
  construct->require_subcommand(1);
  GraphOutput gout;
  std::size_t n = 0, d = 0, c = 0, k = 0;
  std::string graph_path, other_path, labels_path;

  auto* c_omega = construct->add_subcommand("omega", "Tuple model of the adjoint of K_n");
  c_omega->add_option("--n", n, "Colors of the complete graph")->required();
  c_omega->add_option("--d", d, "Half-width (walk length 2d+1)")->required();
  c_omega->add_option("--labels", labels_path, "JSON file for the tuple labels");
  add_graph_output(c_omega, gout);
  on(c_omega, [&] {
    const OmegaGraph g = omega_tuples(n, d);
    if (!labels_path.empty()) write_text_file(labels_path, omega_labels_json(g).dump() + "\n");
    std::vector<std::string> labels;
    if (!gout.dot.empty())
      for (const auto& v : g.vertices) labels.push_back(v.to_string());
    code = emit_graph(g.graph, gout, common, out, labels);
  });

  auto* c_kneser = construct->add_subcommand("kneser", "Kneser graph K(c,k)");
  c_kneser->add_option("--c", c)->required();
  c_kneser->add_option("--k", k)->required();
  add_graph_output(c_kneser, gout);
  on(c_kneser, [&] { code = emit_graph(kneser_graph(c, k), gout, common, out); });

  auto* c_complete = construct->add_subcommand("complete", "Complete graph K_n");
  c_complete->add_option("--n", n)->required();
  add_graph_output(c_complete, gout);
  on(c_complete, [&] { code = emit_graph(complete_graph(n), gout, common, out); });

  auto* c_cycle = construct->add_subcommand("cycle", "Cycle C_n");
  c_cycle->add_option("--n", n)->required();
  add_graph_output(c_cycle, gout);
  on(c_cycle, [&] { code = emit_graph(cycle_graph(n), gout, common, out); });

  auto* c_power = construct->add_subcommand("power", "Walk power: u ~ v iff a walk of length d joins them");
  c_power->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  c_power->add_option("--d", d)->required();
  add_graph_output(c_power, gout);
  on(c_power, [&] { code = emit_graph(gamma_power(read_dimacs_file(graph_path), d), gout, common, out); });

  auto* c_lex = construct->add_subcommand("lex", "Lexicographic product G[H]");
  c_lex->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  c_lex->add_option("--other", other_path)->required()->check(CLI::ExistingFile);
  add_graph_output(c_lex, gout);
  on(c_lex, [&] {
    code = emit_graph(lex_product(read_dimacs_file(graph_path), read_dimacs_file(other_path)), gout,
                      common, out);
  });

  auto* c_tensor = construct->add_subcommand("tensor", "Tensor product G x H");
  c_tensor->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  c_tensor->add_option("--other", other_path)->required()->check(CLI::ExistingFile);
  add_graph_output(c_tensor, gout);
  on(c_tensor, [&] {
    code = emit_graph(tensor_product(read_dimacs_file(graph_path), read_dimacs_file(other_path)),
                      gout, common, out);
  });

  // color
  bool no_clique = false;
  auto* color = app.add_subcommand("color", "Decide c-colorability");
  color->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  color->add_option("--colors", c)->required()->check(CLI::PositiveNumber);
  color->add_flag("--no-clique", no_clique, "Skip clique pre-coloring");
  on(color, [&] {
    const Graph g = read_dimacs_file(graph_path);
    const ColoringResult r = find_coloring(g, c, common.budget(!no_clique));
    if (common.json) {
      out << coloring_result_json(r).dump() << "\n";
    } else if (r.verdict == Verdict::found) {
      out << "coloring found\n" << join_colors(r.coloring->map) << "\n";
    } else if (r.verdict == Verdict::none) {
      out << "no coloring\n";
    } else {
      out << "budget exhausted after " << r.stats.nodes << " nodes\n";
    }
    code = verdict_exit(r.verdict);
  });

  // hom
  auto* hom = app.add_subcommand("hom", "Decide whether G maps homomorphically to H");
  hom->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  hom->add_option("--target", other_path)->required()->check(CLI::ExistingFile);
  on(hom, [&] {
    const HomomorphismResult r =
        find_homomorphism(read_dimacs_file(graph_path), read_dimacs_file(other_path), common.budget());
    if (common.json) {
      out << homomorphism_result_json(r).dump() << "\n";
    } else if (r.verdict == Verdict::found) {
      out << "homomorphism found\n";
      const auto& map = r.homomorphism->map;
      for (std::size_t i = 0; i < map.size(); ++i) out << (i ? " " : "") << map[i] + 1;
      out << "\n";
    } else if (r.verdict == Verdict::none) {
      out << "no homomorphism\n";
    } else {
      out << "budget exhausted after " << r.stats.nodes << " nodes\n";
    }
    code = verdict_exit(r.verdict);
  });

  // chromatic
  std::size_t lo = 1, hi = 0;
  auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number");
  chromatic->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  chromatic->add_option("--lo", lo, "Smallest c to try")->check(CLI::PositiveNumber);
  chromatic->add_option("--hi", hi, "Largest c to try (default |V|)");
  on(chromatic, [&] {
    const Graph g = read_dimacs_file(graph_path);
    const std::size_t top = hi ? hi : std::max<std::size_t>(g.order(), lo);
    const ChromaticResult r = chromatic_number(g, lo, top, common.budget());
    if (common.json) {
      out << chromatic_result_json(r).dump() << "\n";
    } else if (r.kind == ChromaticResult::Kind::value) {
      out << "chromatic number " << r.value << "\n";
    } else if (r.kind == ChromaticResult::Kind::infinite) {
      out << "chromatic number infinite (graph has a loop)\n";
    } else {
      out << "chromatic number unknown in [" << lo << ", " << top << "]\n";
    }
    code = r.kind == ChromaticResult::Kind::unknown &&
                   !r.decisions.empty() && r.decisions.back().verdict == Verdict::exhausted
               ? kExitExhausted
               : kExitOk;
  });

  // wide-check
  std::string coloring_path, condition = "all";
  std::size_t omega_n = 0;
  auto* wide = app.add_subcommand("wide-check", "Check the wide-coloring conditions");
  auto* wide_graph = wide->add_option("--graph", graph_path, "DIMACS graph")->check(CLI::ExistingFile);
  wide->add_option("--coloring", coloring_path, "WideColoring JSON")
      ->needs(wide_graph)
      ->check(CLI::ExistingFile);
  auto* wide_omega = wide->add_option("--omega", omega_n, "Use the tuple model over this many colors")
                         ->excludes(wide_graph);
  wide->add_option("--d", d, "Half-width of the tuple model")->needs(wide_omega);
  wide->add_option("--k", k, "Second coordinate range of the zero-position coloring")->needs(wide_omega);
  wide->add_option("--condition", condition, "1, 2, 3, 4 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
  on(wide, [&] {
    Graph g;
    WideColoring gamma;
    if (omega_n) {
      if (k == 0 || d == 0 || omega_n % k != 0)
        throw InvalidArgument("--omega needs --d and a --k dividing the color count");
      const OmegaGraph omega = omega_tuples(omega_n, d);
      gamma = zero_position_coloring(omega, static_cast<std::uint32_t>(omega_n / k),
                                     static_cast<std::uint32_t>(k));
      g = omega.graph;
    } else {
      if (graph_path.empty() || coloring_path.empty())
        throw InvalidArgument("wide-check needs --graph with --coloring, or --omega");
      g = read_dimacs_file(graph_path);
      gamma = parse_json(read_text_file(coloring_path)).get<WideColoring>();
    }
    std::vector<int> conditions = {1, 2, 3, 4};
    if (condition != "all") conditions = {std::stoi(condition)};
    Json results = Json::object();
    bool all = true;
    for (int cond : conditions) {
      std::string status;
      try {
        const bool ok = check_wide(g, gamma, static_cast<WideCondition>(cond));
        status = ok ? "holds" : "fails";
        all = all && ok;
        results[std::to_string(cond)] = ok;
      } catch (const SizeGuardExceeded& e) {
        status = std::string("skipped (") + e.what() + ")";
        results[std::to_string(cond)] = "skipped";
      }
      if (!common.json) out << "condition " << cond << ": " << status << "\n";
    }
    if (common.json)
      out << Json{{"d", gamma.d}, {"n", gamma.n}, {"k", gamma.k}, {"conditions", results}, {"wide", all}}.dump()
          << "\n";
    code = all ? kExitOk : kExitFailed;
  });

  // adjunction-test
  std::size_t length = 0;
  auto* adj = app.add_subcommand("adjunction-test",
                                 "Compare G's walk power -> H against G -> adjoint of H");
  adj->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  adj->add_option("--target", other_path)->required()->check(CLI::ExistingFile);
  adj->add_option("--length", length, "Odd walk length")->required();
  on(adj, [&] {
    AdjunctionOptions options;
    options.budget = common.budget();
    const AdjunctionResult r =
        adjunction_check(read_dimacs_file(graph_path), read_dimacs_file(other_path), length, options);
    if (common.json) {
      out << Json{{"power_side", verdict_json(r.power_side)},
                  {"omega_side", verdict_json(r.omega_side)},
                  {"omega_vertices", r.omega_vertices},
                  {"agree", r.agree()}}
                 .dump()
          << "\n";
    } else {
      out << "walk power -> H: " << to_string(r.power_side) << "\n"
          << "G -> adjoint (" << r.omega_vertices << " vertices): " << to_string(r.omega_side) << "\n"
          << (r.agree() ? "agree" : "DISAGREE") << "\n";
    }
    if (r.power_side == Verdict::exhausted || r.omega_side == Verdict::exhausted)
      code = kExitExhausted;
    else
      code = r.agree() ? kExitOk : kExitFailed;
  });

  // build
  std::string out_dir, build_variant;
  auto* build = app.add_subcommand("build", "Build G and H of a counterexample variant");
  build->add_option("variant", build_variant)->required()->check(CLI::IsMember({"c7", "c5_refined", "c5_wide"}));
  std::string build_reading = "q_b";
  build->add_option("--reading", build_reading)->check(CLI::IsMember({"q_b", "one_b"}));
  build->add_option("-o,--output", out_dir, "Directory for g.col, h.col, h.dot, h_vertices.json");
  on(build, [&] {
    CounterexampleParams params = CounterexampleParams::for_variant(parse_variant(build_variant));
    params.reading = parse_reading(build_reading);
    const Counterexample cx = build_counterexample(params);
    if (!out_dir.empty()) {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_text_file(dir / "g.col", emit_dimacs(cx.g.graph));
      write_text_file(dir / "h.col", emit_dimacs(cx.h));
      write_text_file(dir / "h.dot", emit_dot(cx.h, cx.labels()));
      write_text_file(dir / "h_vertices.json", Json(cx.labels()).dump(1) + "\n");
    }
    Json j = {{"params", params},
              {"g", {{"vertices", cx.g.graph.order()}, {"edges", cx.g.graph.edge_count()}, {"hash", cx.g_hash}}},
              {"h", {{"vertices", cx.h.order()}, {"edges", cx.h.edge_count()}, {"hash", graph_hash(cx.h)}}}};
    if (common.json) {
      out << j.dump() << "\n";
    } else {
      out << "G: " << cx.g.graph.order() << " vertices, " << cx.g.graph.edge_count() << " edges\n"
          << "H: " << cx.h.order() << " vertices, " << cx.h.edge_count() << " edges\n";
    }
    code = kExitOk;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification pipeline or check a certificate");
  verify->require_subcommand(1);
  std::string variant_name, cert_path, verify_reading = "q_b";
  bool check_g = false, no_critical = false, critical_flag = false;
  std::uint64_t g_nodes = 1'000'000;
  double g_secs = 60.0;
  auto* v_cx = verify->add_subcommand("counterexample", "Full verification pipeline");
  v_cx->add_option("--variant", variant_name)->required()->check(CLI::IsMember({"c7", "c5_refined", "c5_wide"}));
  v_cx->add_option("--reading", verify_reading)->check(CLI::IsMember({"q_b", "one_b"}));
  v_cx->add_option("--cert", cert_path, "Write a certificate here on PASS");
  v_cx->add_flag("--check-g", check_g, "Also search for a c-coloring of G");
  v_cx->add_option("--g-budget-nodes", g_nodes, "Node budget of the G search")->check(CLI::PositiveNumber);
  v_cx->add_option("--g-budget-secs", g_secs, "Time budget of the G search")->check(CLI::PositiveNumber);
  auto* crit_on = v_cx->add_flag("--critical", critical_flag, "Reduce H to an edge-critical subgraph");
  v_cx->add_flag("--no-critical", no_critical, "Skip the edge-critical reduction")->excludes(crit_on);
  on(v_cx, [&] {
    std::optional<bool> critical;
    if (critical_flag) critical = true;
    if (no_critical) critical = false;
    code = run_verify_counterexample(common, parse_variant(variant_name), parse_reading(verify_reading),
                                     cert_path, check_g, g_nodes, g_secs, critical, out);
  });

  auto* v_cert = verify->add_subcommand("certificate", "Re-check a certificate without searching");
  v_cert->add_option("--cert", cert_path)->required()->check(CLI::ExistingFile);
  on(v_cert, [&] {
    const CertificateCheck r = check_certificate(parse_json(read_text_file(cert_path)));
    if (common.json) {
      out << Json{{"ok", r.ok}, {"failures", r.failures}, {"trusted", r.trusted}}.dump() << "\n";
    } else {
      for (const auto& f : r.failures) out << "  FAIL " << f << "\n";
      for (const auto& t : r.trusted) out << "  trusted " << t << "\n";
      out << (r.ok ? "PASS" : "FAILED") << "\n";
    }
    code = r.ok ? kExitOk : kExitFailed;
  });

  for (CLI::App* sub : {construct, color, hom, chromatic, wide, adj, build, verify, v_cx, v_cert,
                        c_omega, c_kneser, c_complete, c_cycle, c_power, c_lex, c_tensor})
    sub->fallthrough();

  std::vector<const char*> argv{"hedet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (common.threads) set_thread_count(common.threads);
    for (auto& [sub, action] : actions)
      if (sub->parsed()) action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return code;
}

}  // namespace hedetniemi
