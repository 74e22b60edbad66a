#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hedetniemi/graph.hpp"

namespace hedetniemi {

struct IsomorphismOptions {
  /// Refuse graphs with more vertices than this (SizeGuardExceeded).
  std::size_t max_vertices = 200;
};

/// Backtracking isomorphism search with color-refinement pruning.
/// Returns the bijection V(a) -> V(b) when one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options = {});

bool is_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options = {});

/// Relabels g so that old vertex v becomes perm[v].
Graph permute_vertices(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace hedetniemi
