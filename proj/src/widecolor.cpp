#include "hedetniemi/widecolor.hpp"

#include <queue>

#include "hedetniemi/constructions.hpp"
#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"
#include "hedetniemi/parallel.hpp"

namespace hedetniemi {

ColorPair pair_of(std::uint32_t color, std::uint32_t k) {
  return {(color - 1) / k + 1, (color - 1) % k + 1};
}

std::vector<VertexSet> color_classes(const Graph& g, const WideColoring& gamma) {
  if (gamma.map.size() != g.order())
    throw InvalidArgument("wide coloring is not total");
  if (gamma.n == 0 || gamma.k == 0) throw InvalidArgument("wide coloring needs n, k >= 1");
  std::vector<VertexSet> classes(gamma.class_count(), g.empty_set());
  for (Vertex v = 0; v < g.order(); ++v) {
    const ColorPair p = gamma.map[v];
    if (p.a < 1 || p.a > gamma.n || p.b < 1 || p.b > gamma.k)
      throw InvalidArgument("color pair of vertex " + std::to_string(v) + " out of range");
    classes[gamma.class_of(v)].set(v);
  }
  return classes;
}

namespace {

bool two_colorable_with_class_on_one_side(const Graph& g, const VertexSet& cls,
                                          const VertexSet& region) {
  std::vector<signed char> side(g.order(), -1);
  std::queue<Vertex> frontier;
  cls.for_each([&](std::size_t v) {
    side[v] = 0;
    frontier.push(static_cast<Vertex>(v));
  });
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    bool ok = true;
    const VertexSet inside = g.neighbors(u) & region;
    inside.for_each([&](std::size_t w) {
      if (side[w] < 0) {
        side[w] = static_cast<signed char>(1 - side[u]);
        frontier.push(static_cast<Vertex>(w));
      } else if (side[w] == side[u]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool check_class(const Graph& g, const VertexSet& cls, std::uint32_t d, WideCondition condition) {
  switch (condition) {
    case WideCondition::exact_independent:
      return is_independent(g, n_exact(g, cls, d));
    case WideCondition::all_exact_independent: {
      VertexSet frontier = cls;
      for (std::uint32_t step = 0;; ++step) {
        if (!is_independent(g, frontier)) return false;
        if (step == d) return true;
        VertexSet next = g.empty_set();
        frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
        frontier = std::move(next);
      }
    }
    case WideCondition::upto_bipartite:
      return two_colorable_with_class_on_one_side(g, cls, n_upto(g, cls, d));
    case WideCondition::walk_power_coloring: break;
  }
  throw InvalidArgument("check_class: unsupported condition");
}

}  // namespace

bool check_wide(const Graph& g, const WideColoring& gamma, WideCondition condition,
                const WideCheckOptions& options) {
  if (g.has_isolated_vertex())
    throw InvalidArgument("check_wide: graph has an isolated vertex");
  const std::vector<VertexSet> classes = color_classes(g, gamma);

  if (condition == WideCondition::walk_power_coloring) {
    if (g.order() > options.max_power_vertices)
      throw SizeGuardExceeded("check_wide: walk power of " + std::to_string(g.order()) +
                              " vertices exceeds the guard");
    const Graph power = gamma_power(g, 2 * static_cast<std::size_t>(gamma.d) + 1);
    Coloring flat{"", gamma.class_count(), {}, false};
    flat.map.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      flat.map.push_back(static_cast<Color>(gamma.class_of(v) + 1));
    return verify_coloring(power, flat);
  }

  std::vector<char> ok(classes.size(), 0);
  parallel_for(classes.size(), [&](std::size_t i) {
    ok[i] = check_class(g, classes[i], gamma.d, condition) ? 1 : 0;
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

WideColoring zero_position_coloring(const OmegaGraph& omega, std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0 || static_cast<std::size_t>(n) * k != omega.n)
    throw InvalidArgument("zero_position_coloring: n*k must equal the omega color count");
  WideColoring gamma;
  gamma.graph_hash = graph_hash(omega.graph);
  gamma.n = n;
  gamma.k = k;
  gamma.d = static_cast<std::uint32_t>(omega.d);
  gamma.map.reserve(omega.vertices.size());
  for (const OmegaVertex& x : omega.vertices)
    gamma.map.push_back(pair_of(static_cast<std::uint32_t>(x.zero_position() + 1), k));
  if (!check_wide(omega.graph, gamma, WideCondition::exact_independent))
    throw InternalError("zero-position coloring is not wide");
  return gamma;
}

AdjunctionResult adjunction_check(const Graph& g, const Graph& h, std::size_t walk_length,
                                  const AdjunctionOptions& options) {
  if (walk_length % 2 == 0) throw InvalidArgument("adjunction needs an odd walk length");
  if (h.edge_count() == 0) throw InvalidArgument("adjunction needs a target with an edge");
  const std::size_t half = (walk_length - 1) / 2;

  AdjunctionResult result;
  const Graph power = gamma_power(g, walk_length);
  result.power_side = find_homomorphism(power, h, options.budget).verdict;

  Graph adjoint;
  if (half == 0) {
    adjoint = h;
  } else if (is_complete(h) && h.order() >= 2) {
    adjoint = omega_tuples(h.order(), half).graph;
  } else {
    adjoint = omega_sets(h, half, options.set_limits).graph;
  }
  result.omega_vertices = adjoint.order();
  result.omega_side = find_homomorphism(g, adjoint, options.budget).verdict;
  return result;
}

bool adjunction_holds(const Graph& g, const Graph& h, std::size_t walk_length,
                      const AdjunctionOptions& options) {
  const AdjunctionResult r = adjunction_check(g, h, walk_length, options);
  if (r.power_side == Verdict::exhausted || r.omega_side == Verdict::exhausted)
    throw SizeGuardExceeded("adjunction: a homomorphism search exhausted its budget");
  return r.agree();
}

}  // namespace hedetniemi
