#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedetniemi/graph.hpp"
#include "hedetniemi/omega.hpp"
#include "hedetniemi/solver.hpp"
#include "hedetniemi/widecolor.hpp"

namespace hedetniemi {

enum class Variant { c7, c5_refined, c5_wide };

/// Inequality sets under which the respective constructions go through.
/// single_wide: one wide coloring with c >= n+k+1, c >= 3k+2; the tight form
/// also caps c by n+2k-3. pair_classes backs c7, refined_classes the two c5
/// variants.
enum class ParameterRule { single_wide, single_wide_tight, pair_classes, refined_classes };

const char* to_string(Variant v);
Variant parse_variant(std::string_view name);
const char* to_string(ParameterRule r);
ParameterRule parse_rule(std::string_view name);

bool parameter_check(std::int64_t k, std::int64_t c, std::int64_t n, ParameterRule rule);

/// Which color class selects the value of the refined g^q functions on
/// N^{=3}: the class (q,b) of the current branch, or the literal (1,b).
enum class ClassReading { q_b, one_b };

const char* to_string(ClassReading r);
ClassReading parse_reading(std::string_view name);

struct CounterexampleParams {
  Variant variant = Variant::c5_refined;
  std::uint32_t k = 0;
  std::uint32_t c = 0;
  std::uint32_t n = 0;
  /// G is the tuple model over c+1 colors with this half-width.
  std::uint32_t d_g = 0;
  ClassReading reading = ClassReading::q_b;

  static CounterexampleParams for_variant(Variant v);
  ParameterRule rule() const;
  /// Walk radius of the g-functions (equals d_g for every variant).
  std::uint32_t g_radius() const { return d_g; }
  /// True when (k, c, n, d_g) are the ones this variant is defined for.
  bool matches_variant() const;
};

using FunctionTable = std::vector<std::uint8_t>;  // V(G) -> [c]

struct FunctionLabel {
  enum class Kind { constant, f, h3, g3, h4, g4 };
  Kind kind = Kind::constant;
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  static FunctionLabel constant(std::uint32_t i) { return {Kind::constant, 0, 0, i, 0}; }
  static FunctionLabel special() { return {Kind::f, 0, 0, 0, 0}; }
  static FunctionLabel h3(std::uint32_t q, std::uint32_t j) { return {Kind::h3, q, 1, 0, j}; }
  static FunctionLabel g3(std::uint32_t q, std::uint32_t j) { return {Kind::g3, q, 2, 0, j}; }
  static FunctionLabel h4(std::uint32_t q, std::uint32_t d, std::uint32_t i, std::uint32_t j) {
    return {Kind::h4, q, d, i, j};
  }
  static FunctionLabel g4(std::uint32_t q, std::uint32_t i) { return {Kind::g4, q, 0, i, 0}; }

  /// "Const(i)", "F", "H3(q,j)", "G3(q,j)", "H4(q,d,i,j)", "G4(q,i)".
  std::string to_string() const;
  static FunctionLabel parse(std::string_view text);
  friend bool operator==(const FunctionLabel&, const FunctionLabel&) = default;
};

struct FunctionVertex {
  FunctionLabel label;
  FunctionTable table;
};

/// (G, gamma, params) -> function tables. Precomputes the walk
/// neighborhoods of every color class the families refer to.
class FunctionDeriver {
 public:
  FunctionDeriver(const Graph& g, const WideColoring& gamma, const CounterexampleParams& params);

  FunctionTable table(const FunctionLabel& label) const;

  /// N^{=d}(gamma^{-1}(alpha^{-1}(q))).
  const VertexSet& group_reach(std::uint32_t q, std::uint32_t d) const;
  /// N^{=r}(gamma^{-1}(a,b)) at the g radius r.
  const VertexSet& class_reach(std::uint32_t a, std::uint32_t b) const;
  /// Vertices in the q-group reach where the literal (1,b) reading has no
  /// selector class. Always empty for the (q,b) reading.
  std::size_t undefined_points(std::uint32_t q) const;

  /// q (+) m = ((q - 1 + m) mod n) + 1.
  std::uint32_t cyclic(std::uint32_t q, std::uint32_t m) const;
  /// The k smallest colors of [n] other than q.
  std::vector<std::uint32_t> minority_colors(std::uint32_t q) const;

 private:
  const Graph& g_;
  const WideColoring& gamma_;
  CounterexampleParams params_;
  std::vector<std::vector<VertexSet>> group_reach_;  // [q-1][d]
  std::vector<VertexSet> class_reach_;               // [(a-1)k + b-1]
};

/// Labels of the branch-q family, in build order.
std::vector<FunctionLabel> special_family_labels(const CounterexampleParams& params,
                                                 std::uint32_t q);

/// Throws InvalidArgument if gamma is not wide at the g radius.
std::vector<FunctionVertex> build_special_family(const Graph& g, const WideColoring& gamma,
                                                 const CounterexampleParams& params,
                                                 std::uint32_t q);

/// Adjacency in the exponential graph: f(v) != g(v') and f(v') != g(v) for
/// every edge vv' of G. Reference edge scan. f == g tests for a loop.
bool exp_adjacent(const Graph& g, std::span<const std::uint8_t> f,
                  std::span<const std::uint8_t> h);

/// Same relation via color-class neighborhoods: f ~ h iff for every color
/// a, N(f^{-1}(a)) misses h^{-1}(a). Built once per table.
class ExpAdjacencyIndex {
 public:
  ExpAdjacencyIndex(const Graph& g, std::uint32_t colors,
                    const std::vector<FunctionTable>& tables);
  bool adjacent(std::size_t a, std::size_t b) const;
  /// Graph on the tables, computed pairwise (data-parallel).
  Graph graph() const;

 private:
  std::uint32_t colors_;
  std::vector<std::vector<VertexSet>> classes_;    // [table][color-1]
  std::vector<std::vector<VertexSet>> neighbors_;  // [table][color-1]
};

struct Counterexample {
  CounterexampleParams params;
  OmegaGraph g;
  std::string g_hash;
  WideColoring gamma;
  std::vector<FunctionVertex> h_vertices;
  Graph h;

  std::vector<FunctionTable> tables() const;
  std::vector<std::string> labels() const;
};

/// Expected vertex counts: |V(G)| from the vertex formula, |V(H)| = c+1 plus
/// n times the family size. |E(G)| where a reference value exists, and the
/// edge count of an edge-critical non-c-colorable subgraph of H.
struct ExpectedCounts {
  std::uint64_t g_vertices = 0;
  std::optional<std::uint64_t> g_edges;
  std::uint64_t h_vertices = 0;
  std::optional<std::uint64_t> h_critical_edges;
};
ExpectedCounts expected_counts(const CounterexampleParams& params);

/// Constants, then F, then the branch families for q = 1..n.
std::vector<FunctionLabel> h_labels(const CounterexampleParams& params);

/// Builds G, the zero-position wide coloring, and H. Throws InvalidArgument
/// when the parameters fail their inequality set, InternalError when an
/// invariant breaks (wideness, loops in H, duplicate tables, vertex counts).
Counterexample build_counterexample(const CounterexampleParams& params);

struct ProductCheck {
  bool ok = true;
  std::uint64_t checks = 0;  // ordered (H edge, G edge orientation) pairs
  std::optional<Edge> h_witness;
  std::optional<Edge> g_witness;
};

/// The coloring (v, f) -> f(v) is proper on G x H, checked edge pair by
/// edge pair without materializing the product.
ProductCheck verify_product_coloring(const Graph& g, const std::vector<FunctionTable>& tables,
                                     const Graph& h, std::uint32_t c);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class ChiGStatus { not_run, machine_checked, relies_on_theorem, refuted };
const char* to_string(ChiGStatus s);
/// Maps a G-coloring verdict onto the report status.
ChiGStatus classify_chi_g(Verdict v);

struct ReadingOutcome {
  ClassReading reading = ClassReading::q_b;
  bool built = false;
  std::string error;
  std::size_t h_edges = 0;
  std::size_t undefined_points = 0;
  bool g_cliques = false;
  Verdict chi_h = Verdict::exhausted;
  std::optional<std::size_t> critical_edges;
  bool matches_expected = false;
};

struct VerifyOptions {
  SearchBudget h_budget{};
  /// Runs the optional G-colorability search when set.
  std::optional<SearchBudget> g_budget;
  bool compare_readings = true;
  /// Reduce H to an edge-critical subgraph. Unset: only where a reference
  /// edge count exists.
  std::optional<bool> critical;
};

struct Report {
  CounterexampleParams params;
  bool passed = false;
  bool mandatory_exhausted = false;
  std::vector<CheckResult> checks;
  std::optional<Counterexample> instance;
  std::optional<ColoringResult> chi_h;
  std::optional<CriticalSubgraph> h_critical;
  ProductCheck product;
  ChiGStatus chi_g = ChiGStatus::not_run;
  std::optional<ColoringResult> chi_g_result;
  std::vector<ReadingOutcome> readings;
  VerifyOptions options;

  const CheckResult* find(std::string_view name) const;
};

Report verify_counterexample(const CounterexampleParams& params, const VerifyOptions& options = {});

}  // namespace hedetniemi
