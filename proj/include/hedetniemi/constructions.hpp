#pragma once

#include <cstddef>
#include <optional>

#include "hedetniemi/graph.hpp"

namespace hedetniemi {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// k-subsets of {1..c} in lexicographic order, adjacent when disjoint.
Graph kneser_graph(std::size_t c, std::size_t k);

enum class Family { complete, cycle, kneser };

/// `a` is n for complete/cycle and c for kneser; `b` is k for kneser.
/// Throws InvalidArgument on out-of-range parameters.
Graph make_family(Family kind, std::size_t a, std::size_t b = 0);

/// Vertices reachable from s by a walk of length exactly d.
VertexSet n_exact(const Graph& g, const VertexSet& s, std::size_t d);
/// Vertices reachable from s by a walk of length at most d.
VertexSet n_upto(const Graph& g, const VertexSet& s, std::size_t d);

/// Graph on V(g) joining u, v whenever a walk of length exactly d joins them
/// (u == v gives a loop). Boolean matrix power by repeated products.
Graph gamma_power(const Graph& g, std::size_t d);

/// (g,h) sits at index g*|V(H)| + h.
Graph lex_product(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);

/// Length of the shortest odd closed walk, or nullopt for bipartite graphs.
/// A loop counts as an odd cycle of length 1.
std::optional<std::size_t> odd_girth(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace hedetniemi
