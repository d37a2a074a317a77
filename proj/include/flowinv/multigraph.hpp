#pragma once

// Unlabeled abstract multi-graphs (loops and parallel edges allowed) and the
// conversion from multi-graph-like posets.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "flowinv/error.hpp"
#include "flowinv/finite_topology.hpp"

namespace flowinv {

struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(vertex_count, 0);
    for (auto [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    return deg;
  }

  bool connected() const {
    if (vertex_count == 0) return false;
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = vertex_count;
    for (auto [a, b] : edges) {
      auto x = find(a), y = find(b);
      if (x != y) {
        parent[x] = y;
        --parts;
      }
    }
    return parts == 1;
  }
};

/// Height-0 elements become vertices, height-1 elements edges with r(e) = downset(e) - {e}.
inline Multigraph multigraph_of(const FinPoset& poset) {
  if (!is_multigraph_like(poset).ok) throw Error(ErrorKind::InvalidInput, "poset is not multi-graph-like");
  const auto h = poset.heights();
  std::vector<std::size_t> vertex_id(poset.size(), 0);
  Multigraph g;
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (h[x] == 0) vertex_id[x] = g.vertex_count++;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (h[x] != 1) continue;
    std::vector<std::size_t> ends;
    for (auto y : poset.downset(x))
      if (y != x) ends.push_back(vertex_id[y]);
    g.edges.emplace_back(ends.front(), ends.back());
  }
  return g;
}

namespace detail {

inline std::vector<std::size_t> edge_multiset(const Multigraph& g, const std::vector<std::size_t>& map) {
  std::vector<std::size_t> keys;
  keys.reserve(g.edges.size());
  const std::size_t n = g.vertex_count;
  for (auto [a, b] : g.edges) {
    auto x = map[a], y = map[b];
    if (x > y) std::swap(x, y);
    keys.push_back(x * n + y);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

/// Backtracking over degree-preserving vertex bijections; intended for small graphs.
inline bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  const std::size_t n = a.vertex_count;
  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::size_t> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  const auto target = detail::edge_multiset(b, ident);

  // multiplicity[x][y] for pruning partial maps
  auto mult = [](const Multigraph& g) {
    std::vector<std::size_t> m(g.vertex_count * g.vertex_count, 0);
    for (auto [x, y] : g.edges) {
      ++m[x * g.vertex_count + y];
      if (x != y) ++m[y * g.vertex_count + x];
    }
    return m;
  };
  const auto ma = mult(a), mb = mult(b);

  std::vector<std::size_t> map(n, 0);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return detail::edge_multiset(a, map) == target;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u <= v && ok; ++u) {
        const auto mu = u == v ? w : map[u];
        ok = ma[v * n + u] == mb[w * n + mu];
      }
      if (!ok) continue;
      used[w] = 1;
      map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace flowinv
