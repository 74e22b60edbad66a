#include "hedetniemi/serialize.hpp"

#include "hedetniemi/error.hpp"

namespace hedetniemi {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

void to_json(Json& j, const Edge& e) { j = Json::array({e.u, e.v}); }

void from_json(const Json& j, Edge& e) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be a pair");
  try {
    e = Edge{j[0].get<Vertex>(), j[1].get<Vertex>()};
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("edge: ") + ex.what());
  }
}

void to_json(Json& j, const Coloring& c) {
  j = {{"graph_hash", c.graph_hash}, {"colors", c.colors}, {"map", c.map}, {"verified", c.verified}};
}

void from_json(const Json& j, Coloring& c) {
  c.graph_hash = field<std::string>(j, "graph_hash");
  c.colors = field<std::size_t>(j, "colors");
  c.map = field<std::vector<Color>>(j, "map");
  c.verified = j.contains("verified") ? field<bool>(j, "verified") : false;
}

void to_json(Json& j, const Homomorphism& h) {
  j = {{"source_hash", h.source_hash}, {"target_hash", h.target_hash}, {"map", h.map}};
}

void from_json(const Json& j, Homomorphism& h) {
  h.source_hash = field<std::string>(j, "source_hash");
  h.target_hash = field<std::string>(j, "target_hash");
  h.map = field<std::vector<Vertex>>(j, "map");
}

void to_json(Json& j, const WideColoring& w) {
  Json pairs = Json::array();
  for (const ColorPair& p : w.map) pairs.push_back({p.a, p.b});
  j = {{"graph_hash", w.graph_hash}, {"n", w.n}, {"k", w.k}, {"d", w.d}, {"pairs", pairs}};
}

void from_json(const Json& j, WideColoring& w) {
  w.graph_hash = field<std::string>(j, "graph_hash");
  w.n = field<std::uint32_t>(j, "n");
  w.k = field<std::uint32_t>(j, "k");
  w.d = field<std::uint32_t>(j, "d");
  const auto pairs = field<std::vector<std::vector<std::uint32_t>>>(j, "pairs");
  w.map.clear();
  w.map.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.size() != 2) throw ParseError("wide coloring pair must have two entries");
    w.map.push_back({p[0], p[1]});
  }
}

void to_json(Json& j, const SearchBudget& b) {
  j = {{"max_nodes", b.max_nodes}, {"max_seconds", b.max_seconds},
       {"clique_precolor", b.clique_precolor}};
}

void from_json(const Json& j, SearchBudget& b) {
  b.max_nodes = field<std::uint64_t>(j, "max_nodes");
  b.max_seconds = field<double>(j, "max_seconds");
  b.clique_precolor = field<bool>(j, "clique_precolor");
}

void to_json(Json& j, const SearchStats& s) {
  j = {{"nodes", s.nodes}, {"seconds", s.seconds}, {"clique_size", s.clique_size}};
}

void to_json(Json& j, const CounterexampleParams& p) {
  j = {{"variant", to_string(p.variant)}, {"k", p.k}, {"c", p.c}, {"n", p.n},
       {"d_g", p.d_g}, {"reading", to_string(p.reading)}};
}

void from_json(const Json& j, CounterexampleParams& p) {
  p.variant = parse_variant(field<std::string>(j, "variant"));
  p.k = field<std::uint32_t>(j, "k");
  p.c = field<std::uint32_t>(j, "c");
  p.n = field<std::uint32_t>(j, "n");
  p.d_g = field<std::uint32_t>(j, "d_g");
  p.reading = parse_reading(field<std::string>(j, "reading"));
}

void to_json(Json& j, const EdgeWitness& w) { j = {{"edge", w.edge}, {"map", w.map}}; }

void from_json(const Json& j, EdgeWitness& w) {
  w.edge = field<Edge>(j, "edge");
  w.map = field<std::vector<Color>>(j, "map");
}

Json verdict_json(Verdict v) { return to_string(v); }

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::found, Verdict::none, Verdict::exhausted})
    if (name == to_string(v)) return v;
  throw ParseError("unknown verdict '" + std::string(name) + "'");
}

Json coloring_result_json(const ColoringResult& r) {
  Json j = {{"verdict", verdict_json(r.verdict)}, {"stats", r.stats}};
  if (r.coloring) j["coloring"] = *r.coloring;
  return j;
}

Json homomorphism_result_json(const HomomorphismResult& r) {
  Json j = {{"verdict", verdict_json(r.verdict)}, {"stats", r.stats}};
  if (r.homomorphism) j["homomorphism"] = *r.homomorphism;
  return j;
}

Json chromatic_result_json(const ChromaticResult& r) {
  Json j;
  switch (r.kind) {
    case ChromaticResult::Kind::value: j["chromatic_number"] = r.value; break;
    case ChromaticResult::Kind::unknown: j["chromatic_number"] = "unknown"; break;
    case ChromaticResult::Kind::infinite: j["chromatic_number"] = "infinite"; break;
  }
  Json decisions = Json::array();
  for (const auto& d : r.decisions) decisions.push_back(coloring_result_json(d));
  j["decisions"] = decisions;
  return j;
}

Json omega_labels_json(const OmegaGraph& g) {
  Json labels = Json::array();
  for (const auto& v : g.vertices) labels.push_back(v.to_string());
  return {{"n", g.n}, {"d", g.d}, {"labels", labels}};
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json j = {{"params", r.params},
            {"passed", r.passed},
            {"mandatory_exhausted", r.mandatory_exhausted},
            {"checks", checks},
            {"chi_g", to_string(r.chi_g)}};
  if (r.instance) {
    j["g"] = {{"hash", r.instance->g_hash},
              {"vertices", r.instance->g.graph.order()},
              {"edges", r.instance->g.graph.edge_count()}};
    j["h"] = {{"vertices", r.instance->h.order()}, {"edges", r.instance->h.edge_count()}};
  }
  if (r.chi_h) j["chi_h"] = coloring_result_json(*r.chi_h);
  if (r.h_critical)
    j["h_critical"] = {{"verdict", verdict_json(r.h_critical->verdict)},
                       {"edges", r.h_critical->graph.edge_count()},
                       {"searches", r.h_critical->searches}};
  j["product"] = {{"ok", r.product.ok}, {"checks", r.product.checks}};
  if (r.chi_g_result) j["chi_g_result"] = coloring_result_json(*r.chi_g_result);
  Json readings = Json::array();
  for (const auto& o : r.readings) {
    Json x = {{"reading", to_string(o.reading)},
              {"built", o.built},
              {"h_edges", o.h_edges},
              {"undefined_points", o.undefined_points},
              {"g_cliques", o.g_cliques},
              {"chi_h", verdict_json(o.chi_h)},
              {"matches_expected", o.matches_expected}};
    if (o.critical_edges) x["critical_edges"] = *o.critical_edges;
    if (!o.error.empty()) x["error"] = o.error;
    readings.push_back(x);
  }
  if (!readings.empty()) j["readings"] = readings;
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace hedetniemi
