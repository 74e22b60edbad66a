#include "hedetniemi/constructions.hpp"

#include <queue>

#include "hedetniemi/error.hpp"

namespace hedetniemi {

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build("K" + std::to_string(n));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build("C" + std::to_string(n));
}

Graph kneser_graph(std::size_t c, std::size_t k) {
  if (k < 1 || c < 2 * k || c > 63)
    throw InvalidArgument("kneser graph needs 1 <= k and 2k <= c <= 63");
  // Lexicographic k-subsets of {0..c-1}.
  std::vector<std::uint64_t> subsets;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
    subsets.push_back(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == c - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  GraphBuilder b(subsets.size());
  for (Vertex u = 0; u < subsets.size(); ++u)
    for (Vertex v = u + 1; v < subsets.size(); ++v)
      if ((subsets[u] & subsets[v]) == 0) b.add_edge(u, v);
  return std::move(b).build("KG(" + std::to_string(c) + "," + std::to_string(k) + ")");
}

Graph make_family(Family kind, std::size_t a, std::size_t b) {
  switch (kind) {
    case Family::complete: return complete_graph(a);
    case Family::cycle: return cycle_graph(a);
    case Family::kneser: return kneser_graph(a, b);
  }
  throw InvalidArgument("unknown family");
}

VertexSet n_exact(const Graph& g, const VertexSet& s, std::size_t d) {
  VertexSet frontier = s;
  for (std::size_t step = 0; step < d; ++step) {
    VertexSet next = g.empty_set();
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
    frontier = std::move(next);
  }
  return frontier;
}

VertexSet n_upto(const Graph& g, const VertexSet& s, std::size_t d) {
  VertexSet reached = s;
  VertexSet frontier = s;
  for (std::size_t step = 0; step < d; ++step) {
    VertexSet next = g.empty_set();
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

Graph gamma_power(const Graph& g, std::size_t d) {
  if (d < 1) throw InvalidArgument("gamma_power needs d >= 1");
  const std::size_t n = g.order();
  // power[u] is row u of A^t; A is symmetric so (A^t A)[u][v] = row_u(A^t) . row_v(A).
  std::vector<VertexSet> power(n);
  for (Vertex u = 0; u < n; ++u) power[u] = g.neighbors(u);
  for (std::size_t t = 1; t < d; ++t) {
    std::vector<VertexSet> next(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (power[u].intersects(g.neighbors(v))) next[u].set(v);
    power = std::move(next);
  }
  std::string label = g.label().empty() ? "" : "Gamma" + std::to_string(d) + "(" + g.label() + ")";
  return Graph::from_rows(std::move(power), std::move(label));
}

Graph lex_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (Vertex g1 = 0; g1 < g.order(); ++g1)
    for (Vertex h1 = 0; h1 < nh; ++h1)
      for (Vertex g2 = 0; g2 < g.order(); ++g2)
        for (Vertex h2 = 0; h2 < nh; ++h2)
          if (g.has_edge(g1, g2) || (g1 == g2 && h.has_edge(h1, h2)))
            b.add_edge(static_cast<Vertex>(g1 * nh + h1), static_cast<Vertex>(g2 * nh + h2));
  return std::move(b).build(g.label() + "[" + h.label() + "]");
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (const Edge& eg : g.edges())
    for (const Edge& eh : h.edges()) {
      b.add_edge(static_cast<Vertex>(eg.u * nh + eh.u), static_cast<Vertex>(eg.v * nh + eh.v));
      b.add_edge(static_cast<Vertex>(eg.u * nh + eh.v), static_cast<Vertex>(eg.v * nh + eh.u));
    }
  return std::move(b).build(g.label() + "x" + h.label());
}

std::optional<std::size_t> odd_girth(const Graph& g) {
  // Shortest path (v,0) -> (v,1) in the bipartite double cover.
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(2 * n, static_cast<std::size_t>(-1));
    std::queue<std::size_t> q;
    dist[2 * root] = 0;
    q.push(2 * root);
    while (!q.empty()) {
      const std::size_t state = q.front();
      q.pop();
      const Vertex v = static_cast<Vertex>(state / 2);
      const std::size_t parity = state % 2;
      g.neighbors(v).for_each([&](std::size_t w) {
        const std::size_t next = 2 * w + (1 - parity);
        if (dist[next] == static_cast<std::size_t>(-1)) {
          dist[next] = dist[state] + 1;
          q.push(next);
        }
      });
    }
    const std::size_t odd = dist[2 * root + 1];
    if (odd != static_cast<std::size_t>(-1) && (!best || odd < *best)) best = odd;
  }
  return best;
}

bool is_complete(const Graph& g) {
  if (g.has_loops()) return false;
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace hedetniemi
