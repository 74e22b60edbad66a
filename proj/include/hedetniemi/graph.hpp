#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hedetniemi/bitset.hpp"

namespace hedetniemi {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Set of vertices of a host graph, one bit per vertex.
using VertexSet = Bitset;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Loops are allowed (v in adj[v]); multi-edges are not representable.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument if an endpoint is out of range. Duplicate edges
  /// collapse, (v,v) becomes a loop.
  Graph(std::size_t n, std::span<const Edge> edges, std::string label = {});

  /// Takes ownership of adjacency rows; rows must already be symmetric.
  static Graph from_rows(std::vector<VertexSet> rows, std::string label = {});

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  bool has_loop(Vertex v) const { return rows_[v].test(v); }
  bool has_loops() const { return loop_count_ > 0; }
  std::size_t loop_count() const { return loop_count_; }

  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  /// Number of neighbors other than v itself.
  std::size_t degree(Vertex v) const;
  bool has_isolated_vertex() const;

  /// Edges as (u <= v) pairs in lexicographic order; loops appear as (v,v).
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Recomputes symmetry, bounds and the edge count from the rows.
  bool check_invariants() const;

 private:
  void recount();

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::size_t loop_count_ = 0;
  std::string label_;
};

/// Incremental edge collector producing an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  void add_edge(Vertex u, Vertex v);
  std::size_t order() const { return rows_.size(); }
  Graph build(std::string label = {}) &&;

 private:
  std::vector<VertexSet> rows_;
};

/// True iff no edge (loops included) has both endpoints in s.
bool is_independent(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  /// old vertex -> new vertex, kNoVertex for vertices outside the set.
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

/// Throws InvalidArgument on an empty set.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_bipartite(const Graph& g);

}  // namespace hedetniemi
