#include "hedetniemi/omega.hpp"

#include <algorithm>
#include <unordered_map>

#include "hedetniemi/error.hpp"

namespace hedetniemi {

std::size_t OmegaVertex::zero_position() const {
  const auto it = std::find(x.begin(), x.end(), std::uint8_t{0});
  return static_cast<std::size_t>(it - x.begin());
}

std::string OmegaVertex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::uint64_t omega_vertex_count(std::size_t n, std::size_t d) {
  std::uint64_t hi = 1, lo = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    hi *= d + 1;
    lo *= d;
  }
  return n * (hi - lo);
}

OmegaGraph omega_tuples(std::size_t n, std::size_t d) {
  if (n < 2 || d < 1) throw InvalidArgument("omega_tuples needs n >= 2 and d >= 1");
  if (n > 16 || d > 30) throw InvalidArgument("omega_tuples parameters too large");
  const std::uint8_t top = static_cast<std::uint8_t>(d + 1);
  const std::uint64_t base = d + 2;

  OmegaGraph out;
  out.n = n;
  out.d = d;
  std::unordered_map<std::uint64_t, Vertex> index;
  auto encode = [&](const std::vector<std::uint8_t>& x) {
    std::uint64_t code = 0;
    for (std::uint8_t xi : x) code = code * base + xi;
    return code;
  };

  // Odometer over {0..d+1}^n, most significant coordinate first, so the
  // accepted tuples come out in lexicographic order.
  std::vector<std::uint8_t> x(n, 0);
  while (true) {
    const auto zeros = std::count(x.begin(), x.end(), std::uint8_t{0});
    const bool has_one = std::find(x.begin(), x.end(), std::uint8_t{1}) != x.end();
    if (zeros == 1 && has_one) {
      index.emplace(encode(x), static_cast<Vertex>(out.vertices.size()));
      out.vertices.push_back({x});
    }
    std::size_t i = n;
    while (i > 0 && x[i - 1] == top) x[--i] = 0;
    if (i == 0) break;
    ++x[i - 1];
  }
  if (out.vertices.size() != omega_vertex_count(n, d))
    throw InternalError("omega_tuples: enumerated " + std::to_string(out.vertices.size()) +
                        " vertices, formula gives " + std::to_string(omega_vertex_count(n, d)));

  // Neighbors are enumerated coordinate-wise: y_i in {x_i - 1, x_i + 1}, or
  // y_i = d+1 when x_i = d+1.
  GraphBuilder builder(out.vertices.size());
  std::vector<std::vector<std::uint8_t>> options(n);
  for (Vertex v = 0; v < out.vertices.size(); ++v) {
    const auto& xv = out.vertices[v].x;
    for (std::size_t i = 0; i < n; ++i) {
      options[i].clear();
      if (xv[i] > 0) options[i].push_back(static_cast<std::uint8_t>(xv[i] - 1));
      if (xv[i] < top) options[i].push_back(static_cast<std::uint8_t>(xv[i] + 1));
      if (xv[i] == top) options[i].push_back(top);
    }
    auto recurse = [&](auto&& self, std::size_t i, std::uint64_t code, int zeros) -> void {
      if (zeros > 1) return;
      if (i == n) {
        const auto it = index.find(code);
        if (it != index.end() && it->second > v) builder.add_edge(v, it->second);
        return;
      }
      for (std::uint8_t yi : options[i]) {
        self(self, i + 1, code * base + yi, zeros + (yi == 0 ? 1 : 0));
      }
    };
    recurse(recurse, 0, 0, 0);
  }
  out.graph = std::move(builder).build("Omega" + std::to_string(2 * d + 1) + "K" +
                                       std::to_string(n));
  return out;
}

std::string OmegaSetVertex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ',';
    s += '{';
    bool first = true;
    for (std::uint32_t b = 0; b < 32; ++b)
      if ((sets[i] >> b) & 1U) {
        if (!first) s += ' ';
        s += std::to_string(b);
        first = false;
      }
    s += '}';
  }
  return s + ")";
}

OmegaSetGraph omega_sets(const Graph& host, std::size_t d, const OmegaSetLimits& limits) {
  if (d < 1) throw InvalidArgument("omega_sets needs d >= 1");
  if (host.order() > limits.max_host_vertices || d > limits.max_d)
    throw SizeGuardExceeded("omega_sets: host of " + std::to_string(host.order()) +
                            " vertices with d = " + std::to_string(d) +
                            " exceeds the enumeration guard");
  const std::size_t m = host.order();
  const std::uint32_t subsets = std::uint32_t{1} << m;
  std::vector<std::uint32_t> nbr_mask(m, 0);
  for (Vertex u = 0; u < m; ++u)
    host.neighbors(u).for_each([&](std::size_t v) { nbr_mask[u] |= std::uint32_t{1} << v; });

  auto fully_adjacent = [&](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t u = 0; u < m; ++u)
      if (((a >> u) & 1U) && (b & ~nbr_mask[u]) != 0) return false;
    return true;
  };
  auto subset = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };

  OmegaSetGraph out;
  out.d = d;
  std::vector<std::uint32_t> sets(d + 1, 0);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == d + 1) {
      if (fully_adjacent(sets[d - 1], sets[d])) out.vertices.push_back({sets});
      return;
    }
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      if (i == 0 && std::popcount(mask) != 1) continue;
      if (i == 1 && mask == 0) continue;
      if (i >= 2 && !subset(sets[i - 2], mask)) continue;
      sets[i] = mask;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);

  GraphBuilder builder(out.vertices.size());
  for (Vertex a = 0; a < out.vertices.size(); ++a)
    for (Vertex b = a; b < out.vertices.size(); ++b) {
      const auto& sa = out.vertices[a].sets;
      const auto& sb = out.vertices[b].sets;
      bool adjacent = fully_adjacent(sa[d], sb[d]);
      for (std::size_t i = 0; adjacent && i < d; ++i)
        adjacent = subset(sa[i], sb[i + 1]) && subset(sb[i], sa[i + 1]);
      if (adjacent) builder.add_edge(a, b);
    }
  out.graph = std::move(builder).build("OmegaSets" + std::to_string(2 * d + 1) +
                                       (host.label().empty() ? "" : "(" + host.label() + ")"));
  return out;
}

}  // namespace hedetniemi
