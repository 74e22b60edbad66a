#include "hedetniemi/solver.hpp"

#include <chrono>

#include "hedetniemi/dimacs.hpp"
#include "hedetniemi/error.hpp"

namespace hedetniemi {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::none: return "none";
    case Verdict::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; false once a limit is hit.
  bool tick(std::uint64_t& nodes) {
    ++nodes;
    if (nodes > budget_.max_nodes) return false;
    if ((nodes & 0xFFF) == 0 && elapsed() > budget_.max_seconds) return false;
    return true;
  }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point start_;
};

enum class Outcome { success, failure, out_of_budget };

// DSATUR with conflict-directed backjumping. A failed subtree reports the
// set of assigned vertices that explains the failure; levels whose vertex is
// not in that set are skipped on the way back.
class Dsatur {
 public:
  Dsatur(const Graph& g, std::size_t c, const SearchBudget& budget)
      : g_(g), c_(c), clock_(budget), color_(g.order(), kUncolored),
        depth_(g.order(), kUncolored), counts_(g.order() * c, 0), sat_(g.order(), 0),
        degree_(g.order()), fixed_(g.order()), free_assigned_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) degree_[v] = g.degree(v);
  }

  void precolor(const std::vector<Vertex>& clique) {
    for (Vertex v : clique) {
      assign(v, used_);
      fixed_.set(v);
      ++used_;
    }
  }

  Outcome run(std::size_t remaining) {
    VertexSet conflict(g_.order());
    return search(remaining, conflict);
  }

  std::vector<Color> colors() const {
    std::vector<Color> out(color_.size());
    for (std::size_t v = 0; v < color_.size(); ++v) out[v] = static_cast<Color>(color_[v] + 1);
    return out;
  }

  double elapsed() const { return clock_.elapsed(); }

  SearchStats stats;

 private:
  static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

  // On failure `conflict` receives the explaining set of free (non-clique)
  // assigned vertices.
  Outcome search(std::size_t remaining, VertexSet& conflict) {
    if (remaining == 0) return Outcome::success;
    const Vertex v = select();
    conflict.clear();
    explain_blocked(v, conflict);
    if (sat_[v] == c_) return Outcome::failure;

    const std::size_t limit = std::min(used_ + 1, c_);
    if (limit < c_) conflict |= free_assigned_;  // interchangeable unused colors
    VertexSet child(g_.order());
    for (std::size_t col = 0; col < limit; ++col) {
      if (counts_[v * c_ + col] != 0) continue;
      if (!clock_.tick(stats.nodes)) return Outcome::out_of_budget;
      const bool fresh = col == used_;
      assign(v, col);
      free_assigned_.set(v);
      if (fresh) ++used_;
      const Outcome r = search(remaining - 1, child);
      if (r != Outcome::failure) return r;
      if (fresh) --used_;
      free_assigned_.reset(v);
      unassign(v, col);
      if (!child.test(v)) {
        // v's value played no part in the failure below: jump past it.
        conflict = child;
        return Outcome::failure;
      }
      child.reset(v);
      conflict |= child;
    }
    return Outcome::failure;
  }

  // For each color already present around v, the earliest-assigned free
  // neighbor carrying it.
  void explain_blocked(Vertex v, VertexSet& conflict) const {
    std::vector<Vertex> reason(c_, kNoVertex);
    g_.neighbors(v).for_each([&](std::size_t w) {
      const std::size_t col = color_[w];
      if (col == kUncolored) return;
      if (fixed_.test(w)) {
        reason[col] = static_cast<Vertex>(w);
        return;
      }
      if (reason[col] == kNoVertex ||
          (!fixed_.test(reason[col]) && depth_[w] < depth_[reason[col]]))
        reason[col] = static_cast<Vertex>(w);
    });
    for (Vertex w : reason)
      if (w != kNoVertex && !fixed_.test(w)) conflict.set(w);
  }

  Vertex select() const {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < color_.size(); ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == kNoVertex || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
        best = v;
    }
    return best;
  }

  void assign(Vertex v, std::size_t col) {
    color_[v] = col;
    depth_[v] = next_depth_++;
    g_.neighbors(v).for_each([&](std::size_t w) {
      if (counts_[w * c_ + col]++ == 0) ++sat_[w];
    });
  }

  void unassign(Vertex v, std::size_t col) {
    color_[v] = kUncolored;
    depth_[v] = kUncolored;
    --next_depth_;
    g_.neighbors(v).for_each([&](std::size_t w) {
      if (--counts_[w * c_ + col] == 0) --sat_[w];
    });
  }

  const Graph& g_;
  std::size_t c_;
  BudgetClock clock_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> depth_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> sat_;
  std::vector<std::size_t> degree_;
  VertexSet fixed_;
  VertexSet free_assigned_;
  std::size_t used_ = 0;
  std::size_t next_depth_ = 0;
};

class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, const SearchBudget& budget)
      : g_(g), h_(h), clock_(budget), map_(g.order(), kNoVertex) {
    VertexSet all = h.full_set();
    VertexSet looped = h.empty_set();
    for (Vertex w = 0; w < h.order(); ++w)
      if (h.has_loop(w)) looped.set(w);
    domains_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) domains_.push_back(g.has_loop(v) ? looped : all);
  }

  Outcome search(std::size_t remaining) {
    if (remaining == 0) return Outcome::success;
    Vertex v = kNoVertex;
    std::size_t best = 0;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (map_[u] != kNoVertex) continue;
      const std::size_t size = domains_[u].count();
      if (v == kNoVertex || size < best) {
        v = u;
        best = size;
      }
    }
    if (best == 0) return Outcome::failure;
    const VertexSet candidates = domains_[v];
    for (std::size_t w = candidates.find_first(); w != Bitset::npos;
         w = candidates.find_next(w + 1)) {
      if (!clock_.tick(stats.nodes)) return Outcome::out_of_budget;
      map_[v] = static_cast<Vertex>(w);
      std::vector<std::pair<Vertex, VertexSet>> saved;
      bool wiped = false;
      g_.neighbors(v).for_each([&](std::size_t u) {
        if (wiped || map_[u] != kNoVertex) return;
        saved.emplace_back(static_cast<Vertex>(u), domains_[u]);
        domains_[u] &= h_.neighbors(static_cast<Vertex>(w));
        if (domains_[u].none()) wiped = true;
      });
      if (!wiped) {
        const Outcome r = search(remaining - 1);
        if (r != Outcome::failure) return r;
      }
      for (auto& [u, dom] : saved) domains_[u] = std::move(dom);
      map_[v] = kNoVertex;
    }
    return Outcome::failure;
  }

  const std::vector<Vertex>& mapping() const { return map_; }
  double elapsed() const { return clock_.elapsed(); }

  SearchStats stats;

 private:
  const Graph& g_;
  const Graph& h_;
  BudgetClock clock_;
  std::vector<VertexSet> domains_;
  std::vector<Vertex> map_;
};

}  // namespace

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> clique;
  VertexSet candidates = g.full_set();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.has_loop(v)) candidates.reset(v);
  while (candidates.any()) {
    Vertex best = kNoVertex;
    candidates.for_each([&](std::size_t v) {
      if (best == kNoVertex || g.degree(static_cast<Vertex>(v)) > g.degree(best))
        best = static_cast<Vertex>(v);
    });
    clique.push_back(best);
    candidates &= g.neighbors(best);
    candidates.reset(best);
  }
  return clique;
}

ColoringResult find_coloring(const Graph& g, std::size_t c, const SearchBudget& budget) {
  if (c < 1) throw InvalidArgument("find_coloring needs c >= 1");
  ColoringResult result;
  if (g.has_loops()) {
    result.verdict = Verdict::none;
    return result;
  }
  std::vector<Vertex> clique;
  if (budget.clique_precolor) clique = greedy_clique(g);
  result.stats.clique_size = clique.size();
  if (clique.size() > c) {
    result.verdict = Verdict::none;
    return result;
  }
  Dsatur search(g, c, budget);
  search.precolor(clique);
  const Outcome outcome = search.run(g.order() - clique.size());
  result.stats.nodes = search.stats.nodes;
  result.stats.seconds = search.elapsed();
  switch (outcome) {
    case Outcome::success: {
      Coloring col{graph_hash(g), c, search.colors(), false};
      col.verified = verify_coloring(g, col);
      if (!col.verified) throw InternalError("find_coloring produced an improper coloring");
      result.verdict = Verdict::found;
      result.coloring = std::move(col);
      break;
    }
    case Outcome::failure: result.verdict = Verdict::none; break;
    case Outcome::out_of_budget: result.verdict = Verdict::exhausted; break;
  }
  return result;
}

HomomorphismResult find_homomorphism(const Graph& g, const Graph& h, const SearchBudget& budget) {
  HomomorphismResult result;
  HomSearch search(g, h, budget);
  const Outcome outcome = search.search(g.order());
  result.stats.nodes = search.stats.nodes;
  result.stats.seconds = search.elapsed();
  switch (outcome) {
    case Outcome::success:
      if (!verify_homomorphism(g, h, search.mapping()))
        throw InternalError("find_homomorphism produced an invalid map");
      result.verdict = Verdict::found;
      result.homomorphism = Homomorphism{graph_hash(g), graph_hash(h), search.mapping()};
      break;
    case Outcome::failure: result.verdict = Verdict::none; break;
    case Outcome::out_of_budget: result.verdict = Verdict::exhausted; break;
  }
  return result;
}

ChromaticResult chromatic_number(const Graph& g, std::size_t lo, std::size_t hi,
                                 const SearchBudget& budget) {
  if (lo < 1 || lo > hi) throw InvalidArgument("chromatic_number needs 1 <= lo <= hi");
  ChromaticResult result;
  if (g.has_loops()) {
    result.kind = ChromaticResult::Kind::infinite;
    return result;
  }
  for (std::size_t c = lo; c <= hi; ++c) {
    result.decisions.push_back(find_coloring(g, c, budget));
    const Verdict v = result.decisions.back().verdict;
    if (v == Verdict::exhausted) return result;
    if (v == Verdict::found) {
      result.kind = ChromaticResult::Kind::value;
      result.value = c;
      return result;
    }
  }
  return result;
}

bool verify_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.map.size() != g.order())
    throw InvalidArgument("coloring is not total: " + std::to_string(coloring.map.size()) +
                          " entries for " + std::to_string(g.order()) + " vertices");
  for (Color col : coloring.map)
    if (col < 1 || col > coloring.colors)
      throw InvalidArgument("color " + std::to_string(col) + " outside [1," +
                            std::to_string(coloring.colors) + "]");
  for (const Edge& e : g.edges())
    if (coloring.map[e.u] == coloring.map[e.v]) return false;
  return true;
}

bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (map.size() != g.order()) throw InvalidArgument("homomorphism map is not total");
  for (Vertex w : map)
    if (w >= h.order()) throw InvalidArgument("homomorphism image out of range");
  for (const Edge& e : g.edges())
    if (!h.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

CriticalSubgraph critical_subgraph(const Graph& g, std::size_t c, const SearchBudget& budget) {
  if (g.has_loops()) throw InvalidArgument("critical_subgraph needs a loopless graph");
  CriticalSubgraph result;
  const auto tally = [&](const ColoringResult& r) {
    ++result.searches;
    result.nodes += r.stats.nodes;
  };
  const ColoringResult whole = find_coloring(g, c, budget);
  tally(whole);
  if (whole.verdict != Verdict::none) {
    result.verdict = whole.verdict;
    result.graph = g;
    return result;
  }

  std::vector<Edge> kept = g.edges();
  std::vector<EdgeWitness> witnesses;
  std::size_t pos = 0;
  while (pos < kept.size()) {
    std::vector<Edge> trial;
    trial.reserve(kept.size() - 1);
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (i != pos) trial.push_back(kept[i]);
    const Graph h(g.order(), trial, g.label());
    const ColoringResult r = find_coloring(h, c, budget);
    tally(r);
    if (r.verdict == Verdict::exhausted) {
      result.graph = g;
      return result;
    }
    if (r.verdict == Verdict::none) {
      result.removed.push_back(kept[pos]);
      kept = std::move(trial);
    } else {
      // Later removals only shrink the graph, so this coloring stays a witness.
      witnesses.push_back({kept[pos], r.coloring->map});
      ++pos;
    }
  }
  result.verdict = Verdict::none;
  result.graph = Graph(g.order(), kept, g.label() + " critical");
  result.witnesses = std::move(witnesses);
  return result;
}

bool verify_edge_witnesses(const Graph& sub, std::size_t c,
                           const std::vector<EdgeWitness>& witnesses) {
  const std::vector<Edge> edges = sub.edges();
  if (witnesses.size() != edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeWitness& w = witnesses[i];
    if (!(w.edge == edges[i]) || w.map.size() != sub.order()) return false;
    for (Color col : w.map)
      if (col < 1 || col > c) return false;
    if (w.map[w.edge.u] != w.map[w.edge.v]) return false;
    for (const Edge& e : edges)
      if (!(e == w.edge) && w.map[e.u] == w.map[e.v]) return false;
  }
  return true;
}

}  // namespace hedetniemi
