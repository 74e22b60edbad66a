#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hedetniemi/graph.hpp"
#include "hedetniemi/omega.hpp"
#include "hedetniemi/solver.hpp"

namespace hedetniemi {

/// Color (a, b) in [n] x [k], both 1-based.
struct ColorPair {
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  friend bool operator==(const ColorPair&, const ColorPair&) = default;
};

/// Fixed bijection [n*k] -> [n] x [k]: color x maps to
/// ((x-1) div k + 1, (x-1) mod k + 1).
ColorPair pair_of(std::uint32_t color, std::uint32_t k);

/// Coloring of V(G) with pairs, meant as a coloring of the (2d+1)-th walk
/// power. alpha/beta are the two projections.
struct WideColoring {
  std::string graph_hash;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t d = 0;
  std::vector<ColorPair> map;

  std::uint32_t alpha(Vertex v) const { return map[v].a; }
  std::uint32_t beta(Vertex v) const { return map[v].b; }
  /// Dense class id (a-1)*k + (b-1).
  std::size_t class_of(Vertex v) const { return (map[v].a - 1) * k + (map[v].b - 1); }
  std::size_t class_count() const { return static_cast<std::size_t>(n) * k; }
};

/// Color classes indexed by class id. Throws InvalidArgument when the map is
/// not total or a pair is out of range.
std::vector<VertexSet> color_classes(const Graph& g, const WideColoring& gamma);

/// The four equivalent formulations of a wide coloring.
enum class WideCondition {
  walk_power_coloring = 1,  // proper coloring of the (2d+1)-th walk power
  exact_independent = 2,    // N^{=d}(class) independent
  all_exact_independent = 3,  // N^{=d'}(class) independent for all d' <= d
  upto_bipartite = 4,  // N^{<=d}(class) 2-colorable with the class on one side
};

struct WideCheckOptions {
  /// Condition 1 materializes the walk power; refuse beyond this size.
  std::size_t max_power_vertices = 1024;
};

/// Evaluates exactly one condition. Throws InvalidArgument if g has an
/// isolated vertex or the coloring is malformed.
bool check_wide(const Graph& g, const WideColoring& gamma, WideCondition condition,
                const WideCheckOptions& options = {});

/// gamma(x) = pair_of(position of the zero in x). omega must be built over
/// n*k colors. Asserts condition 2 at omega.d (InternalError on failure).
WideColoring zero_position_coloring(const OmegaGraph& omega, std::uint32_t n, std::uint32_t k);

struct AdjunctionOptions {
  SearchBudget budget{1'000'000, 60.0, true};
  OmegaSetLimits set_limits;
};

struct AdjunctionResult {
  Verdict power_side = Verdict::exhausted;  // walk power of G -> H
  Verdict omega_side = Verdict::exhausted;  // G -> adjoint of H
  std::size_t omega_vertices = 0;
  bool agree() const { return power_side == omega_side; }
};

/// Decides both sides of the walk-power / adjoint correspondence for an odd
/// walk length. Complete targets use the tuple model, others the set model.
/// Throws InvalidArgument for even walk_length or an edgeless target.
AdjunctionResult adjunction_check(const Graph& g, const Graph& h, std::size_t walk_length,
                                  const AdjunctionOptions& options = {});

/// True iff both decisions agree. Throws SizeGuardExceeded when either
/// search exhausts its budget.
bool adjunction_holds(const Graph& g, const Graph& h, std::size_t walk_length,
                      const AdjunctionOptions& options = {});

}  // namespace hedetniemi
