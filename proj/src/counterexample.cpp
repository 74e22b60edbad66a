#include "hedetniemi/counterexample.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "hedetniemi/constructions.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/parallel.hpp"

namespace hedetniemi {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::c7: return "c7";
    case Variant::c5_refined: return "c5_refined";
    case Variant::c5_wide: return "c5_wide";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "c7") return Variant::c7;
  if (name == "c5_refined") return Variant::c5_refined;
  if (name == "c5_wide") return Variant::c5_wide;
  throw InvalidArgument("unknown variant '" + std::string(name) + "'");
}

const char* to_string(ParameterRule r) {
  switch (r) {
    case ParameterRule::single_wide: return "single_wide";
    case ParameterRule::single_wide_tight: return "single_wide_tight";
    case ParameterRule::pair_classes: return "pair_classes";
    case ParameterRule::refined_classes: return "refined_classes";
  }
  return "?";
}

ParameterRule parse_rule(std::string_view name) {
  if (name == "single_wide") return ParameterRule::single_wide;
  if (name == "single_wide_tight") return ParameterRule::single_wide_tight;
  if (name == "pair_classes") return ParameterRule::pair_classes;
  if (name == "refined_classes") return ParameterRule::refined_classes;
  throw InvalidArgument("unknown parameter rule '" + std::string(name) + "'");
}

const char* to_string(ClassReading r) { return r == ClassReading::q_b ? "q_b" : "one_b"; }

ClassReading parse_reading(std::string_view name) {
  if (name == "q_b") return ClassReading::q_b;
  if (name == "one_b") return ClassReading::one_b;
  throw InvalidArgument("unknown class reading '" + std::string(name) + "'");
}

bool parameter_check(std::int64_t k, std::int64_t c, std::int64_t n, ParameterRule rule) {
  if (k < 1 || c < 1 || n < 1) return false;
  switch (rule) {
    case ParameterRule::single_wide: return c >= n + k + 1 && c >= 3 * k + 2;
    case ParameterRule::single_wide_tight:
      return c >= n + k + 1 && c >= 3 * k + 2 && n + 2 * k - 3 >= c;
    case ParameterRule::pair_classes: return c >= n + k + 1 && n >= k + 1 && c + 1 <= n * k;
    case ParameterRule::refined_classes: return c >= n + 1 && c >= 2 * k + 1 && c >= 5 && c + 1 <= n * k;
  }
  return false;
}

CounterexampleParams CounterexampleParams::for_variant(Variant v) {
  switch (v) {
    case Variant::c7: return {v, 2, 7, 4, 2, ClassReading::q_b};
    case Variant::c5_refined: return {v, 2, 5, 3, 3, ClassReading::q_b};
    case Variant::c5_wide: return {v, 2, 5, 3, 6, ClassReading::q_b};
  }
  throw InvalidArgument("unknown variant");
}

ParameterRule CounterexampleParams::rule() const {
  return variant == Variant::c7 ? ParameterRule::pair_classes : ParameterRule::refined_classes;
}

bool CounterexampleParams::matches_variant() const {
  const CounterexampleParams ref = for_variant(variant);
  return k == ref.k && c == ref.c && n == ref.n && d_g == ref.d_g;
}

// ---------------------------------------------------------------------------
// Labels

std::string FunctionLabel::to_string() const {
  auto s = [](std::uint32_t x) { return std::to_string(x); };
  switch (kind) {
    case Kind::constant: return "Const(" + s(i) + ")";
    case Kind::f: return "F";
    case Kind::h3: return "H3(" + s(q) + "," + s(j) + ")";
    case Kind::g3: return "G3(" + s(q) + "," + s(j) + ")";
    case Kind::h4: return "H4(" + s(q) + "," + s(d) + "," + s(i) + "," + s(j) + ")";
    case Kind::g4: return "G4(" + s(q) + "," + s(i) + ")";
  }
  return "?";
}

FunctionLabel FunctionLabel::parse(std::string_view text) {
  if (text == "F") return special();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw ParseError("bad function label '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, open);
  std::vector<std::uint32_t> args;
  std::string_view rest = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("bad function label '" + std::string(text) + "'");
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  auto want = [&](std::size_t count) {
    if (args.size() != count) throw ParseError("bad arity in label '" + std::string(text) + "'");
  };
  if (name == "Const") return want(1), constant(args[0]);
  if (name == "H3") return want(2), h3(args[0], args[1]);
  if (name == "G3") return want(2), g3(args[0], args[1]);
  if (name == "H4") return want(4), h4(args[0], args[1], args[2], args[3]);
  if (name == "G4") return want(2), g4(args[0], args[1]);
  throw ParseError("unknown function label '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Function tables

FunctionDeriver::FunctionDeriver(const Graph& g, const WideColoring& gamma,
                                 const CounterexampleParams& params)
    : g_(g), gamma_(gamma), params_(params) {
  if (gamma.n != params.n || gamma.k != params.k)
    throw InvalidArgument("wide coloring does not use [n] x [k] of the parameters");
  const std::vector<VertexSet> classes = color_classes(g, gamma);
  const std::uint32_t radius = params.g_radius();

  group_reach_.resize(params.n);
  for (std::uint32_t q = 1; q <= params.n; ++q) {
    VertexSet frontier = g.empty_set();
    for (std::uint32_t b = 1; b <= params.k; ++b) frontier |= classes[(q - 1) * params.k + b - 1];
    auto& reach = group_reach_[q - 1];
    reach.push_back(frontier);
    for (std::uint32_t d = 1; d <= radius; ++d) reach.push_back(n_exact(g, reach.back(), 1));
  }
  class_reach_.resize(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) {
    class_reach_[i] = n_exact(g, classes[i], radius);
  });
}

const VertexSet& FunctionDeriver::group_reach(std::uint32_t q, std::uint32_t d) const {
  if (q < 1 || q > params_.n || d > params_.g_radius())
    throw InvalidArgument("group_reach index out of range");
  return group_reach_[q - 1][d];
}

const VertexSet& FunctionDeriver::class_reach(std::uint32_t a, std::uint32_t b) const {
  if (a < 1 || a > params_.n || b < 1 || b > params_.k)
    throw InvalidArgument("class_reach index out of range");
  return class_reach_[(a - 1) * params_.k + b - 1];
}

std::uint32_t FunctionDeriver::cyclic(std::uint32_t q, std::uint32_t m) const {
  return (q - 1 + m) % params_.n + 1;
}

std::vector<std::uint32_t> FunctionDeriver::minority_colors(std::uint32_t q) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a <= params_.n && out.size() < params_.k; ++a)
    if (a != q) out.push_back(a);
  if (out.size() != params_.k) throw InvalidArgument("minority colors need n >= k+1");
  return out;
}

std::size_t FunctionDeriver::undefined_points(std::uint32_t q) const {
  if (params_.variant != Variant::c5_refined || params_.reading == ClassReading::q_b) return 0;
  VertexSet missing = group_reach(q, params_.g_radius());
  for (std::uint32_t b = 1; b <= params_.k; ++b) missing.subtract(class_reach(1, b));
  return missing.count();
}

FunctionTable FunctionDeriver::table(const FunctionLabel& label) const {
  const std::size_t nv = g_.order();
  const std::uint32_t c = params_.c;
  auto color_ok = [&](std::uint32_t x) { return x >= 1 && x <= c; };
  auto q_ok = [&](std::uint32_t q) { return q >= 1 && q <= params_.n; };
  auto bad = [&]() { return InvalidArgument("label " + label.to_string() + " out of range"); };

  // Smallest b with v in the reach of class (a, b); 0 if none.
  auto selector = [&](std::uint32_t a, Vertex v) -> std::uint32_t {
    for (std::uint32_t b = 1; b <= params_.k; ++b)
      if (class_reach(a, b).test(v)) return b;
    return 0;
  };

  FunctionTable t(nv);
  using K = FunctionLabel::Kind;
  switch (label.kind) {
    case K::constant:
      if (!color_ok(label.i)) throw bad();
      std::fill(t.begin(), t.end(), static_cast<std::uint8_t>(label.i));
      break;
    case K::f:
      for (Vertex v = 0; v < nv; ++v) t[v] = static_cast<std::uint8_t>(gamma_.alpha(v));
      break;
    case K::h3:
    case K::h4: {
      const std::uint32_t d = label.kind == K::h3 ? 1 : label.d;
      const std::uint32_t outside = label.kind == K::h3 ? label.q : label.i;
      if (!q_ok(label.q) || !color_ok(outside) || !color_ok(label.j) || d < 1 ||
          d > params_.g_radius())
        throw bad();
      const VertexSet& reach = group_reach(label.q, d);
      for (Vertex v = 0; v < nv; ++v)
        t[v] = static_cast<std::uint8_t>(reach.test(v) ? label.j : outside);
      break;
    }
    case K::g3: {
      if (!q_ok(label.q) || !color_ok(label.j)) throw bad();
      const auto minority = minority_colors(label.q);
      const VertexSet& reach = group_reach(label.q, params_.g_radius());
      for (Vertex v = 0; v < nv; ++v) {
        if (!reach.test(v)) {
          t[v] = static_cast<std::uint8_t>(label.j);
          continue;
        }
        const std::uint32_t b = selector(label.q, v);
        if (b == 0) throw InternalError("no class reach contains a group-reach vertex");
        t[v] = static_cast<std::uint8_t>(minority[b - 1]);
      }
      break;
    }
    case K::g4: {
      if (!q_ok(label.q) || !color_ok(label.i)) throw bad();
      const VertexSet& reach = group_reach(label.q, params_.g_radius());
      const bool refined = params_.variant == Variant::c5_refined;
      const std::uint32_t source =
          refined && params_.reading == ClassReading::one_b ? 1 : label.q;
      for (Vertex v = 0; v < nv; ++v) {
        if (!reach.test(v)) {
          t[v] = static_cast<std::uint8_t>(label.i);
          continue;
        }
        const std::uint32_t b = selector(source, v);
        if (b == 0) {
          // Only reachable under the literal (1,b) reading.
          t[v] = static_cast<std::uint8_t>(label.i);
          continue;
        }
        t[v] = static_cast<std::uint8_t>(refined ? cyclic(label.q, b - 1) : b);
      }
      break;
    }
  }
  return t;
}

std::vector<FunctionLabel> special_family_labels(const CounterexampleParams& params,
                                                 std::uint32_t q) {
  using L = FunctionLabel;
  const std::uint32_t c = params.c, n = params.n, k = params.k;
  if (q < 1 || q > n) throw InvalidArgument("branch q out of range");
  std::vector<L> out;
  switch (params.variant) {
    case Variant::c7:
      for (std::uint32_t j = n + 1; j <= c; ++j) out.push_back(L::h3(q, j));
      for (std::uint32_t j = n + 1; j <= c; ++j) out.push_back(L::g3(q, j));
      break;
    case Variant::c5_refined: {
      const std::uint32_t q2 = (q - 1 + 2) % n + 1;
      out = {L::h4(q, 1, q, 4), L::h4(q, 1, q, 5), L::h4(q, 2, 4, 5), L::h4(q, 2, 5, 4),
             L::h4(q, 2, 5, q2), L::g4(q, 4),       L::g4(q, 5),       L::g4(q, q2)};
      break;
    }
    case Variant::c5_wide:
      for (std::uint32_t j = n + 1; j <= c; ++j) out.push_back(L::h4(q, 1, q, j));
      for (std::uint32_t i = 1; i <= c; ++i)
        if (i != q && i != c) out.push_back(L::h4(q, 2, c, i));
      for (std::uint32_t i = 1; i <= c; ++i) {
        if (i == q || i == c) continue;
        for (std::uint32_t j = 1; j <= c; ++j)
          if (j != c && j != i) out.push_back(L::h4(q, 3, i, j));
      }
      for (std::uint32_t j = 1; j < c; ++j)
        for (std::uint32_t l = 1; l <= c; ++l)
          if (l != j) out.push_back(L::h4(q, 4, j, l));
      for (std::uint32_t l = 1; l <= c; ++l)
        for (std::uint32_t i = 1; i <= c; ++i)
          if (i != l) out.push_back(L::h4(q, 5, l, i));
      for (std::uint32_t i = k + 1; i <= c; ++i) out.push_back(L::g4(q, i));
      break;
  }
  return out;
}

std::vector<FunctionVertex> build_special_family(const Graph& g, const WideColoring& gamma,
                                                 const CounterexampleParams& params,
                                                 std::uint32_t q) {
  WideColoring at_radius = gamma;
  at_radius.d = params.g_radius();
  if (!check_wide(g, at_radius, WideCondition::exact_independent))
    throw InvalidArgument("build_special_family: coloring is not wide at radius " +
                          std::to_string(params.g_radius()));
  const FunctionDeriver deriver(g, gamma, params);
  std::vector<FunctionVertex> out;
  for (const FunctionLabel& label : special_family_labels(params, q))
    out.push_back({label, deriver.table(label)});
  return out;
}

// ---------------------------------------------------------------------------
// Exponential-graph adjacency

bool exp_adjacent(const Graph& g, std::span<const std::uint8_t> f,
                  std::span<const std::uint8_t> h) {
  if (f.size() != g.order() || h.size() != g.order())
    throw InvalidArgument("exp_adjacent: table domain does not match V(G)");
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet& row = g.neighbors(v);
    for (std::size_t w = row.find_next(v); w != Bitset::npos; w = row.find_next(w + 1))
      if (f[v] == h[w] || f[w] == h[v]) return false;
  }
  return true;
}

ExpAdjacencyIndex::ExpAdjacencyIndex(const Graph& g, std::uint32_t colors,
                                     const std::vector<FunctionTable>& tables)
    : colors_(colors), classes_(tables.size()), neighbors_(tables.size()) {
  const std::vector<Edge> edges = g.edges();
  parallel_for(tables.size(), [&](std::size_t t) {
    const FunctionTable& table = tables[t];
    if (table.size() != g.order())
      throw InvalidArgument("ExpAdjacencyIndex: table domain does not match V(G)");
    auto& cls = classes_[t];
    auto& nbr = neighbors_[t];
    cls.assign(colors, g.empty_set());
    nbr.assign(colors, g.empty_set());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (table[v] < 1 || table[v] > colors)
        throw InvalidArgument("ExpAdjacencyIndex: table value out of range");
      cls[table[v] - 1].set(v);
    }
    for (const Edge& e : edges) {
      nbr[table[e.u] - 1].set(e.v);
      nbr[table[e.v] - 1].set(e.u);
    }
  });
}

bool ExpAdjacencyIndex::adjacent(std::size_t a, std::size_t b) const {
  for (std::uint32_t col = 0; col < colors_; ++col)
    if (neighbors_[a][col].intersects(classes_[b][col])) return false;
  return true;
}

Graph ExpAdjacencyIndex::graph() const {
  const std::size_t m = classes_.size();
  std::vector<VertexSet> rows(m, VertexSet(m));
  parallel_for(m, [&](std::size_t a) {
    for (std::size_t b = 0; b < m; ++b)
      if (adjacent(a, b)) rows[a].set(b);
  });
  return Graph::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Assembly

std::vector<FunctionTable> Counterexample::tables() const {
  std::vector<FunctionTable> out;
  out.reserve(h_vertices.size());
  for (const auto& fv : h_vertices) out.push_back(fv.table);
  return out;
}

std::vector<std::string> Counterexample::labels() const {
  std::vector<std::string> out;
  for (const auto& fv : h_vertices) out.push_back(fv.label.to_string());
  return out;
}

ExpectedCounts expected_counts(const CounterexampleParams& params) {
  ExpectedCounts e;
  e.g_vertices = omega_vertex_count(params.c + 1, params.d_g);
  e.h_vertices = params.c + 1 + params.n * special_family_labels(params, 1).size();
  if (params.variant == Variant::c5_refined) {
    e.g_edges = 36015;
    e.h_critical_edges = 108;
  }
  return e;
}

std::vector<FunctionLabel> h_labels(const CounterexampleParams& params) {
  std::vector<FunctionLabel> labels;
  for (std::uint32_t i = 1; i <= params.c; ++i) labels.push_back(FunctionLabel::constant(i));
  labels.push_back(FunctionLabel::special());
  for (std::uint32_t q = 1; q <= params.n; ++q) {
    const auto family = special_family_labels(params, q);
    labels.insert(labels.end(), family.begin(), family.end());
  }
  return labels;
}

Counterexample build_counterexample(const CounterexampleParams& params) {
  if (!parameter_check(params.k, params.c, params.n, params.rule()))
    throw InvalidArgument(std::string("parameters fail the ") + to_string(params.rule()) +
                          " inequalities");
  if (!params.matches_variant())
    throw InvalidArgument(std::string("parameters do not define variant ") +
                          to_string(params.variant));

  Counterexample cx;
  cx.params = params;
  cx.g = omega_tuples(params.c + 1, params.d_g);
  cx.g_hash = graph_hash(cx.g.graph);
  cx.gamma = zero_position_coloring(cx.g, params.n, params.k);

  const ExpectedCounts expected = expected_counts(params);
  if (cx.g.graph.order() != expected.g_vertices)
    throw InternalError("G vertex count mismatch");

  const FunctionDeriver deriver(cx.g.graph, cx.gamma, params);
  const std::vector<FunctionLabel> labels = h_labels(params);
  cx.h_vertices.resize(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    cx.h_vertices[i] = {labels[i], deriver.table(labels[i])};
  });

  std::map<FunctionTable, std::size_t> seen;
  for (std::size_t i = 0; i < cx.h_vertices.size(); ++i) {
    const auto [it, fresh] = seen.emplace(cx.h_vertices[i].table, i);
    if (!fresh)
      throw InternalError("function tables of " + cx.h_vertices[it->second].label.to_string() +
                          " and " + cx.h_vertices[i].label.to_string() + " coincide");
  }

  cx.h = ExpAdjacencyIndex(cx.g.graph, params.c, cx.tables()).graph();
  cx.h.set_label(std::string("H_") + to_string(params.variant));
  if (cx.h.has_loops()) {
    for (Vertex v = 0; v < cx.h.order(); ++v)
      if (cx.h.has_loop(v))
        throw InternalError(cx.h_vertices[v].label.to_string() + " is a proper coloring of G");
  }
  if (cx.h.order() != expected.h_vertices) throw InternalError("H vertex count mismatch");
  return cx;
}

ProductCheck verify_product_coloring(const Graph& g, const std::vector<FunctionTable>& tables,
                                     const Graph& h, std::uint32_t c) {
  if (tables.size() != h.order())
    throw InvalidArgument("verify_product_coloring: one table per H vertex required");
  ProductCheck result;
  for (const auto& t : tables) {
    if (t.size() != g.order())
      throw InvalidArgument("verify_product_coloring: table domain does not match V(G)");
    for (std::uint8_t x : t)
      if (x < 1 || x > c) {
        result.ok = false;
        return result;
      }
  }
  const std::vector<Edge> g_edges = g.edges();
  const std::vector<Edge> h_edges = h.edges();
  std::vector<std::size_t> bad(h_edges.size(), g_edges.size());
  parallel_for(h_edges.size(), [&](std::size_t i) {
    const FunctionTable& f = tables[h_edges[i].u];
    const FunctionTable& q = tables[h_edges[i].v];
    for (std::size_t e = 0; e < g_edges.size(); ++e) {
      const Edge& ge = g_edges[e];
      if (f[ge.u] == q[ge.v] || f[ge.v] == q[ge.u]) {
        bad[i] = e;
        return;
      }
    }
  });
  result.checks = 2ULL * h_edges.size() * g_edges.size();
  for (std::size_t i = 0; i < h_edges.size(); ++i)
    if (bad[i] != g_edges.size()) {
      result.ok = false;
      result.h_witness = h_edges[i];
      result.g_witness = g_edges[bad[i]];
      break;
    }
  return result;
}

const char* to_string(ChiGStatus s) {
  switch (s) {
    case ChiGStatus::not_run: return "not_run";
    case ChiGStatus::machine_checked: return "machine_checked";
    case ChiGStatus::relies_on_theorem: return "relies_on_theorem";
    case ChiGStatus::refuted: return "refuted";
  }
  return "?";
}

ChiGStatus classify_chi_g(Verdict v) {
  switch (v) {
    case Verdict::none: return ChiGStatus::machine_checked;
    case Verdict::exhausted: return ChiGStatus::relies_on_theorem;
    case Verdict::found: return ChiGStatus::refuted;
  }
  return ChiGStatus::not_run;
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class LabelIndex {
 public:
  explicit LabelIndex(const Counterexample& cx) {
    for (std::size_t i = 0; i < cx.h_vertices.size(); ++i)
      index_.emplace(cx.h_vertices[i].label.to_string(), i);
  }
  std::optional<std::size_t> find(const FunctionLabel& l) const {
    const auto it = index_.find(l.to_string());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

std::set<std::uint8_t> image(const FunctionTable& t) { return {t.begin(), t.end()}; }

bool g_family_cliques(const Counterexample& cx) {
  using K = FunctionLabel::Kind;
  for (std::uint32_t q = 1; q <= cx.params.n; ++q) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < cx.h_vertices.size(); ++i) {
      const auto& l = cx.h_vertices[i].label;
      if ((l.kind == K::g3 || l.kind == K::g4) && l.q == q) members.push_back(i);
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!cx.h.has_edge(static_cast<Vertex>(members[a]), static_cast<Vertex>(members[b])))
          return false;
  }
  return true;
}

void structural_checks(const Counterexample& cx, Report& report) {
  using K = FunctionLabel::Kind;
  const auto& params = cx.params;
  const Graph& h = cx.h;
  const LabelIndex index(cx);
  const std::size_t f_index = *index.find(FunctionLabel::special());

  {
    // const_i ~ f exactly when i is not in the image of f.
    std::size_t tested = 0;
    std::string failure;
    for (std::size_t x = 0; x < cx.h_vertices.size(); ++x) {
      const auto img = image(cx.h_vertices[x].table);
      for (std::uint32_t i = 1; i <= params.c; ++i) {
        const auto ci = *index.find(FunctionLabel::constant(i));
        ++tested;
        const bool adjacent = h.has_edge(static_cast<Vertex>(ci), static_cast<Vertex>(x));
        if (adjacent == (img.count(static_cast<std::uint8_t>(i)) > 0) && failure.empty())
          failure = "Const(" + std::to_string(i) + ") vs " + cx.h_vertices[x].label.to_string();
      }
    }
    report.checks.push_back({"const_adjacency", failure.empty(),
                             failure.empty() ? std::to_string(tested) + " pairs" : failure});
  }
  {
    std::size_t tested = 0;
    std::string failure;
    for (std::size_t x = 0; x < cx.h_vertices.size(); ++x) {
      const auto& l = cx.h_vertices[x].label;
      const bool first_step =
          l.kind == K::h3 || (l.kind == K::h4 && l.d == 1 && l.i == l.q && l.j > params.n);
      if (!first_step) continue;
      ++tested;
      if (!h.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(f_index)) && failure.empty())
        failure = l.to_string() + " not adjacent to F";
    }
    report.checks.push_back({"h1_adjacent_to_f", failure.empty() && tested > 0,
                             failure.empty() ? std::to_string(tested) + " functions" : failure});
  }
  {
    const bool ok = g_family_cliques(cx);
    report.checks.push_back({"g_family_cliques", ok, ok ? "every branch" : "missing edge"});
  }
  if (params.variant == Variant::c7) {
    std::string failure;
    for (std::uint32_t q = 1; q <= params.n; ++q)
      for (std::uint32_t j = params.n + 1; j <= params.c; ++j) {
        const auto hv = *index.find(FunctionLabel::h3(q, j));
        const auto gv = *index.find(FunctionLabel::g3(q, j));
        if (!h.has_edge(static_cast<Vertex>(hv), static_cast<Vertex>(gv)) && failure.empty())
          failure = "H3/G3(" + std::to_string(q) + "," + std::to_string(j) + ")";
      }
    report.checks.push_back({"g_adjacent_to_h", failure.empty(), failure});
  }
  if (params.variant == Variant::c5_wide) {
    std::size_t tested = 0;
    std::string failure;
    for (std::size_t x = 0; x < cx.h_vertices.size(); ++x)
      for (std::size_t y = 0; y < cx.h_vertices.size(); ++y) {
        const auto& a = cx.h_vertices[x].label;
        const auto& b = cx.h_vertices[y].label;
        if (a.kind != K::h4 || b.kind != K::h4 || a.q != b.q || b.d != a.d + 1 || a.d > 4)
          continue;
        if (a.i == b.i || a.j == b.j || a.i == b.j) continue;
        ++tested;
        if (!h.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y)) && failure.empty())
          failure = a.to_string() + " vs " + b.to_string();
      }
    report.checks.push_back({"chain_adjacency", failure.empty() && tested > 0,
                             failure.empty() ? std::to_string(tested) + " pairs" : failure});

    // The specific steps of the chain argument, with the minimum-color rule
    // for the free indices.
    const std::uint32_t c = params.c;
    tested = 0;
    failure.clear();
    auto expect = [&](const FunctionLabel& a, const FunctionLabel& b) {
      ++tested;
      const auto x = index.find(a);
      const auto y = index.find(b);
      if ((!x || !y || !h.has_edge(static_cast<Vertex>(*x), static_cast<Vertex>(*y))) &&
          failure.empty())
        failure = a.to_string() + " vs " + b.to_string();
    };
    auto min_outside = [&](std::initializer_list<std::uint32_t> banned) {
      for (std::uint32_t x = 1; x <= c; ++x)
        if (std::find(banned.begin(), banned.end(), x) == banned.end()) return x;
      return std::uint32_t{0};
    };
    using L = FunctionLabel;
    for (std::uint32_t q = 1; q <= params.n; ++q) {
      for (std::uint32_t i = 1; i <= c; ++i)
        if (i != q && i != c) expect(L::h4(q, 1, q, c), L::h4(q, 2, c, i));
      for (std::uint32_t i = 1; i <= c; ++i) {
        if (i == q || i == c) continue;
        for (std::uint32_t j = 1; j <= c; ++j)
          if (j != c && j != i) expect(L::h4(q, 2, c, i), L::h4(q, 3, i, j));
      }
      for (std::uint32_t j = 1; j < c; ++j)
        for (std::uint32_t l = 1; l <= c; ++l)
          if (l != j) expect(L::h4(q, 3, min_outside({q, j, l, c}), j), L::h4(q, 4, j, l));
      for (std::uint32_t l = 1; l <= c; ++l)
        for (std::uint32_t i = 1; i <= c; ++i)
          if (i != l) expect(L::h4(q, 4, min_outside({c, l, i}), l), L::h4(q, 5, l, i));
      for (std::uint32_t i = params.k + 1; i <= c; ++i) {
        std::uint32_t l = 0;
        for (std::uint32_t x = params.k + 1; x <= c && l == 0; ++x)
          if (x != i) l = x;
        expect(L::g4(q, i), L::h4(q, 5, l, i));
      }
    }
    report.checks.push_back({"chain_witnesses", failure.empty(),
                             failure.empty() ? std::to_string(tested) + " steps" : failure});
  }
}

}  // namespace

Report verify_counterexample(const CounterexampleParams& params, const VerifyOptions& options) {
  Report report;
  report.params = params;
  report.options = options;

  const bool params_ok =
      parameter_check(params.k, params.c, params.n, params.rule()) && params.matches_variant();
  report.checks.push_back({"parameters", params_ok,
                           std::string(to_string(params.rule())) + " with k=" +
                               std::to_string(params.k) + " c=" + std::to_string(params.c) +
                               " n=" + std::to_string(params.n)});
  if (!params_ok) return report;

  try {
    report.instance = build_counterexample(params);
  } catch (const InternalError& e) {
    report.checks.push_back({"build", false, e.what()});
    return report;
  }
  const Counterexample& cx = *report.instance;
  const ExpectedCounts expected = expected_counts(params);

  auto count_check = [&](const char* name, std::uint64_t actual, std::uint64_t want) {
    report.checks.push_back({name, actual == want,
                             std::to_string(actual) + " (expected " + std::to_string(want) + ")"});
  };
  count_check("g_vertex_count", cx.g.graph.order(), expected.g_vertices);
  if (expected.g_edges) count_check("g_edge_count", cx.g.graph.edge_count(), *expected.g_edges);
  count_check("h_vertex_count", cx.h.order(), expected.h_vertices);

  {
    WideColoring at_radius = cx.gamma;
    at_radius.d = params.g_radius();
    const bool wide = check_wide(cx.g.graph, at_radius, WideCondition::exact_independent);
    report.checks.push_back({"wide_coloring", wide,
                             "exact-" + std::to_string(params.g_radius()) +
                                 " neighborhoods of " + std::to_string(at_radius.class_count()) +
                                 " classes"});
  }
  report.checks.push_back({"distinct_tables", true, std::to_string(cx.h.order()) + " tables"});
  report.checks.push_back({"h_loopless", !cx.h.has_loops(), ""});

  report.product = verify_product_coloring(cx.g.graph, cx.tables(), cx.h, params.c);
  {
    std::string detail = std::to_string(report.product.checks) + " ordered checks";
    if (!report.product.ok && report.product.h_witness && report.product.g_witness)
      detail = "conflict on H edge " + cx.h_vertices[report.product.h_witness->u].label.to_string() +
               "-" + cx.h_vertices[report.product.h_witness->v].label.to_string() +
               " and G edge " + std::to_string(report.product.g_witness->u) + "-" +
               std::to_string(report.product.g_witness->v);
    report.checks.push_back({"product_coloring", report.product.ok, detail});
  }

  structural_checks(cx, report);

  report.chi_h = find_coloring(cx.h, params.c, options.h_budget);
  {
    const Verdict v = report.chi_h->verdict;
    if (v == Verdict::exhausted) report.mandatory_exhausted = true;
    report.checks.push_back({"chi_h", v == Verdict::none,
                             std::string("find_coloring(H, ") + std::to_string(params.c) +
                                 ") = " + to_string(v) + " after " +
                                 std::to_string(report.chi_h->stats.nodes) + " nodes"});
  }

  const bool want_critical = options.critical.value_or(expected.h_critical_edges.has_value());
  if (want_critical && report.chi_h->verdict == Verdict::none) {
    report.h_critical = critical_subgraph(cx.h, params.c, options.h_budget);
    const CriticalSubgraph& crit = *report.h_critical;
    if (crit.verdict == Verdict::exhausted) {
      report.mandatory_exhausted = true;
      report.checks.push_back({"h_critical", false, "a search exhausted its budget"});
    } else {
      const bool witnessed = crit.verdict == Verdict::none &&
                             verify_edge_witnesses(crit.graph, params.c, crit.witnesses);
      report.checks.push_back(
          {"h_critical", witnessed,
           std::to_string(crit.graph.edge_count()) + " essential edges of " +
               std::to_string(cx.h.edge_count()) + ", " + std::to_string(crit.searches) +
               " searches"});
      if (expected.h_critical_edges) {
        std::uint64_t isolated = 0;
        for (Vertex v = 0; v < crit.graph.order(); ++v) isolated += crit.graph.degree(v) == 0;
        report.checks.push_back(
            {"h_edge_count",
             crit.graph.edge_count() == *expected.h_critical_edges && isolated == 0,
             std::to_string(crit.graph.edge_count()) + " (expected " +
                 std::to_string(*expected.h_critical_edges) + ") on " +
                 std::to_string(crit.graph.order() - isolated) + " vertices; induced H has " +
                 std::to_string(cx.h.edge_count())});
      }
      const ProductCheck sub = verify_product_coloring(cx.g.graph, cx.tables(), crit.graph, params.c);
      report.checks.push_back({"product_coloring_critical", sub.ok,
                               std::to_string(sub.checks) + " ordered checks"});
    }
  }

  if (params.variant == Variant::c5_refined && options.compare_readings) {
    for (ClassReading reading : {ClassReading::q_b, ClassReading::one_b}) {
      ReadingOutcome out;
      out.reading = reading;
      try {
        CounterexampleParams p = params;
        p.reading = reading;
        std::optional<Counterexample> other;
        if (reading != params.reading) other = build_counterexample(p);
        const Counterexample& x = other ? *other : cx;
        const FunctionDeriver deriver(x.g.graph, x.gamma, p);
        for (std::uint32_t q = 1; q <= p.n; ++q) out.undefined_points += deriver.undefined_points(q);
        out.built = true;
        out.h_edges = x.h.edge_count();
        out.g_cliques = g_family_cliques(x);
        if (other) {
          out.chi_h = find_coloring(x.h, p.c, options.h_budget).verdict;
          if (out.chi_h == Verdict::none) {
            const CriticalSubgraph crit = critical_subgraph(x.h, p.c, options.h_budget);
            if (crit.verdict == Verdict::none) out.critical_edges = crit.graph.edge_count();
          }
        } else {
          out.chi_h = report.chi_h->verdict;
          if (report.h_critical && report.h_critical->verdict == Verdict::none)
            out.critical_edges = report.h_critical->graph.edge_count();
        }
        out.matches_expected = out.chi_h == Verdict::none && out.critical_edges &&
                               expected.h_critical_edges &&
                               *out.critical_edges == *expected.h_critical_edges;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
      report.readings.push_back(out);
    }
    std::string matching;
    for (const ReadingOutcome& r : report.readings)
      if (r.matches_expected) matching += (matching.empty() ? "" : ",") + std::string(to_string(r.reading));
    report.checks.push_back({"matching_reading", !matching.empty(),
                             matching.empty() ? "no reading reproduces the counts" : matching});
  }

  if (options.g_budget) {
    report.chi_g_result = find_coloring(cx.g.graph, params.c, *options.g_budget);
    report.chi_g = classify_chi_g(report.chi_g_result->verdict);
    if (report.chi_g == ChiGStatus::refuted)
      report.checks.push_back({"chi_g", false, "G admits a c-coloring"});
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

}  // namespace hedetniemi
