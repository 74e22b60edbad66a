#include "hedetniemi/graph.hpp"

#include <queue>

#include "hedetniemi/error.hpp"

namespace hedetniemi {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string label)
    : label_(std::move(label)) {
  rows_.assign(n, VertexSet(n));
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") out of range for " +
                            std::to_string(n) + " vertices");
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
  }
  recount();
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::string label) {
  Graph g;
  g.rows_ = std::move(rows);
  g.label_ = std::move(label);
  g.recount();
  return g;
}

void Graph::recount() {
  std::size_t half = 0;
  loop_count_ = 0;
  for (Vertex v = 0; v < rows_.size(); ++v) {
    if (rows_[v].test(v)) {
      ++loop_count_;
      half += rows_[v].count() - 1;
    } else {
      half += rows_[v].count();
    }
  }
  edge_count_ = half / 2 + loop_count_;
}

std::size_t Graph::degree(Vertex v) const {
  return rows_[v].count() - (has_loop(v) ? 1 : 0);
}

bool Graph::has_isolated_vertex() const {
  for (const VertexSet& row : rows_)
    if (row.none()) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (std::size_t v = rows_[u].find_next(u); v != Bitset::npos;
         v = rows_[u].find_next(v + 1))
      out.push_back({u, static_cast<Vertex>(v)});
  }
  return out;
}

VertexSet Graph::full_set() const {
  VertexSet s(order());
  s.set_all();
  return s;
}

bool Graph::check_invariants() const {
  const std::size_t n = order();
  std::size_t half = 0, loops = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (rows_[u].size() != n) return false;
    bool ok = true;
    rows_[u].for_each([&](std::size_t v) {
      if (v >= n || !rows_[v].test(u)) ok = false;
      if (v == u)
        ++loops;
      else
        ++half;
    });
    if (!ok) return false;
  }
  return half % 2 == 0 && half / 2 + loops == edge_count_ && loops == loop_count_;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= rows_.size() || v >= rows_.size())
    throw InvalidArgument("edge endpoint out of range");
  rows_[u].set(v);
  rows_[v].set(u);
}

Graph GraphBuilder::build(std::string label) && {
  return Graph::from_rows(std::move(rows_), std::move(label));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t v = s.find_first(); v != Bitset::npos; v = s.find_next(v + 1))
    if (g.neighbors(static_cast<Vertex>(v)).intersects(s)) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.none()) throw InvalidArgument("induced_subgraph: empty vertex set");
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), kNoVertex);
  s.for_each([&](std::size_t v) {
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(static_cast<Vertex>(v));
  });
  GraphBuilder builder(out.new_to_old.size());
  for (Vertex a = 0; a < out.new_to_old.size(); ++a) {
    const VertexSet inside = g.neighbors(out.new_to_old[a]) & s;
    inside.for_each([&](std::size_t v) {
      const Vertex b = out.old_to_new[v];
      if (a <= b) builder.add_edge(a, b);
    });
  }
  out.graph = std::move(builder).build(g.label().empty() ? "" : g.label() + "[S]");
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      bool ok = true;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          frontier.push(static_cast<Vertex>(v));
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace hedetniemi
