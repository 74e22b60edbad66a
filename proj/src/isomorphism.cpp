#include "hedetniemi/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "hedetniemi/error.hpp"

namespace hedetniemi {
namespace {

// Stable color refinement run jointly on both graphs so that color ids are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  std::vector<int> ca(n), cb(n);
  {
    std::map<std::pair<std::size_t, bool>, int> ids;
    auto initial = [&](const Graph& g, Vertex v) {
      return ids.try_emplace({g.degree(v), g.has_loop(v)}, static_cast<int>(ids.size()))
          .first->second;
    };
    for (Vertex v = 0; v < n; ++v) ca[v] = initial(a, v);
    for (Vertex v = 0; v < n; ++v) cb[v] = initial(b, v);
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& col, Vertex v) {
      std::vector<int> nbr;
      g.neighbors(v).for_each([&](std::size_t w) { nbr.push_back(col[w]); });
      std::sort(nbr.begin(), nbr.end());
      return std::make_pair(col[v], std::move(nbr));
    };
    std::vector<int> na(n), nb(n);
    for (Vertex v = 0; v < n; ++v)
      na[v] = ids.try_emplace(signature(a, ca, v), static_cast<int>(ids.size())).first->second;
    for (Vertex v = 0; v < n; ++v)
      nb[v] = ids.try_emplace(signature(b, cb, v), static_cast<int>(ids.size())).first->second;
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.order(), kNoVertex), used_(b.order(), false) {
    build_order();
  }

  bool run() { return extend(0); }
  std::vector<Vertex> mapping() const { return map_; }

 private:
  // Connectivity-first order: each next vertex has as many already-ordered
  // neighbors as possible, so candidates are confined to a neighborhood.
  void build_order() {
    const std::size_t n = a_.order();
    std::vector<std::size_t> class_size(n * 2 + 1, 0);
    for (int c : ca_) ++class_size[static_cast<std::size_t>(c)];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = kNoVertex;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kNoVertex || links[v] > links[best] ||
            (links[v] == links[best] &&
             class_size[static_cast<std::size_t>(ca_[v])] <
                 class_size[static_cast<std::size_t>(ca_[best])]))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      a_.neighbors(best).for_each([&](std::size_t w) { ++links[w]; });
    }
    anchor_.assign(n, kNoVertex);
    std::vector<bool> seen(n, false);
    for (Vertex v : order_) {
      a_.neighbors(v).for_each([&](std::size_t w) {
        if (seen[w] && anchor_[v] == kNoVertex) anchor_[v] = static_cast<Vertex>(w);
      });
      seen[v] = true;
    }
  }

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    if (a_.has_loop(v) != b_.has_loop(w)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (a_.has_edge(v, u) != b_.has_edge(w, map_[u])) return false;
    }
    return true;
  }

  bool try_candidate(Vertex v, Vertex w, std::size_t depth) {
    if (used_[w] || cb_[w] != ca_[v] || !consistent(v, w, depth)) return false;
    map_[v] = w;
    used_[w] = true;
    if (extend(depth + 1)) return true;
    used_[w] = false;
    map_[v] = kNoVertex;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    if (anchor_[v] != kNoVertex) {
      const VertexSet& pool = b_.neighbors(map_[anchor_[v]]);
      for (std::size_t w = pool.find_first(); w != Bitset::npos; w = pool.find_next(w + 1))
        if (try_candidate(v, static_cast<Vertex>(w), depth)) return true;
      return false;
    }
    for (Vertex w = 0; w < b_.order(); ++w)
      if (try_candidate(v, w, depth)) return true;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options) {
  if (std::max(a.order(), b.order()) > options.max_vertices)
    throw SizeGuardExceeded("isomorphism: graphs exceed " +
                            std::to_string(options.max_vertices) + " vertices");
  if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
      a.loop_count() != b.loop_count())
    return std::nullopt;

  auto [ca, cb] = refine_colors(a, b);
  auto histogram = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(ca) != histogram(cb)) return std::nullopt;

  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.run()) return std::nullopt;
  return matcher.mapping();
}

bool is_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
  return find_isomorphism(a, b, options).has_value();
}

Graph permute_vertices(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw InvalidArgument("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges, g.label());
}

}  // namespace hedetniemi
