#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hedetniemi/graph.hpp"

namespace hedetniemi {

/// Vertex of the tuple model of the (2d+1)-adjoint of K_n: a tuple in
/// {0..d+1}^n with exactly one 0 and at least one 1.
struct OmegaVertex {
  std::vector<std::uint8_t> x;

  /// 0-based index of the unique zero coordinate.
  std::size_t zero_position() const;
  std::string to_string() const;
  friend auto operator<=>(const OmegaVertex&, const OmegaVertex&) = default;
};

struct OmegaGraph {
  Graph graph;
  std::vector<OmegaVertex> vertices;
  std::size_t n = 0;  // colors of the complete graph
  std::size_t d = 0;  // half-width: walk length 2d+1
};

/// n * ((d+1)^(n-1) - d^(n-1)).
std::uint64_t omega_vertex_count(std::size_t n, std::size_t d);

/// Tuples enumerated in lexicographic order; x ~ y iff every coordinate has
/// |x_i - y_i| = 1 or x_i = y_i = d+1. Throws InvalidArgument unless n >= 2
/// and d >= 1; throws InternalError if the count disagrees with the formula.
OmegaGraph omega_tuples(std::size_t n, std::size_t d);

/// Vertex of the set model: (A_0..A_d) as bitmasks over V(H).
struct OmegaSetVertex {
  std::vector<std::uint32_t> sets;
  std::string to_string() const;
};

struct OmegaSetGraph {
  Graph graph;
  std::vector<OmegaSetVertex> vertices;
  std::size_t d = 0;
};

struct OmegaSetLimits {
  std::size_t max_host_vertices = 5;
  std::size_t max_d = 3;
};

/// Set model over an arbitrary small host graph. Vertices are the tuples
/// with |A_0| = 1, A_1 nonempty, A_i within A_{i+2}, A_{d-1} fully adjacent
/// to A_d; enumerated lexicographically by mask. Throws SizeGuardExceeded
/// beyond `limits`, InvalidArgument for d < 1.
OmegaSetGraph omega_sets(const Graph& host, std::size_t d, const OmegaSetLimits& limits = {});

}  // namespace hedetniemi
