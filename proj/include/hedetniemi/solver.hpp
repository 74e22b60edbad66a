#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hedetniemi/graph.hpp"

namespace hedetniemi {

using Color = std::uint32_t;  // 1-based, in [c]

struct Coloring {
  std::string graph_hash;
  std::size_t colors = 0;
  std::vector<Color> map;
  bool verified = false;
};

struct Homomorphism {
  std::string source_hash;
  std::string target_hash;
  std::vector<Vertex> map;
};

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
  /// Pre-color a greedy maximal clique with 1..q before branching.
  bool clique_precolor = true;
};

enum class Verdict { found, none, exhausted };

const char* to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::size_t clique_size = 0;
};

struct ColoringResult {
  Verdict verdict = Verdict::exhausted;
  std::optional<Coloring> coloring;
  SearchStats stats;
};

struct HomomorphismResult {
  Verdict verdict = Verdict::exhausted;
  std::optional<Homomorphism> homomorphism;
  SearchStats stats;
};

/// Greedy maximal clique: highest degree first, lowest index on ties.
std::vector<Vertex> greedy_clique(const Graph& g);

/// Exact c-colorability by DSATUR branching (saturation, then degree, then
/// lowest index). A graph with a loop answers `none` for every c.
ColoringResult find_coloring(const Graph& g, std::size_t c, const SearchBudget& budget = {});

/// Exact homomorphism search with smallest-domain-first branching and
/// forward checking over bitset domains.
HomomorphismResult find_homomorphism(const Graph& g, const Graph& h,
                                     const SearchBudget& budget = {});

struct ChromaticResult {
  enum class Kind { value, unknown, infinite };
  Kind kind = Kind::unknown;
  std::size_t value = 0;
  std::vector<ColoringResult> decisions;  // one per c tried, in order
};

/// Smallest c in [lo, hi] admitting a coloring, as long as every decision
/// below it was resolved. Graphs with loops report `infinite`.
ChromaticResult chromatic_number(const Graph& g, std::size_t lo, std::size_t hi,
                                 const SearchBudget& budget = {});

/// Linear scan. Throws InvalidArgument if the map is not total or a color
/// falls outside [c]. Loops make every coloring invalid.
bool verify_coloring(const Graph& g, const Coloring& coloring);
bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

/// A c-coloring of the subgraph minus `edge`; it has to give both ends of
/// `edge` the same color, which shows the edge cannot be dropped.
struct EdgeWitness {
  Edge edge;
  std::vector<Color> map;
};

struct CriticalSubgraph {
  /// none: `graph` is not c-colorable and every edge has a witness.
  /// found: the input itself was c-colorable. exhausted: a search ran out.
  Verdict verdict = Verdict::exhausted;
  Graph graph;
  std::vector<Edge> removed;
  std::vector<EdgeWitness> witnesses;
  std::uint64_t searches = 0;
  std::uint64_t nodes = 0;
};

/// Edge-minimal spanning subgraph with chromatic number above c: walks the
/// edges in sorted order and drops each one whose removal keeps the graph
/// non-c-colorable. The budget applies per search. Loopless input only.
CriticalSubgraph critical_subgraph(const Graph& g, std::size_t c, const SearchBudget& budget = {});

/// Checks the witnesses of `sub` without searching: one per edge, each proper
/// everywhere except on its own edge, where both ends share a color.
bool verify_edge_witnesses(const Graph& sub, std::size_t c,
                           const std::vector<EdgeWitness>& witnesses);

}  // namespace hedetniemi
