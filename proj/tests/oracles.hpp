#pragma once

// Naive reference implementations the tests compare the library against.
// Deliberately slow and structure-free: subsets and permutations, nothing else.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gfree/graph.hpp"

namespace oracle {

using gfree::Graph;
using gfree::VertexSet;
using gfree::set_size;
using gfree::vbit;
using gfree::vertices_of;

// Subgraph containment by trying every |pat|-subset of s and every bijection.
inline bool naive_contains(const Graph& h, VertexSet s, const Graph& pat) {
  std::vector<int> hosts;
  for (int v : vertices_of(s)) hosts.push_back(v);
  int m = pat.n;
  if (m > static_cast<int>(hosts.size())) return false;
  std::vector<int> idx(hosts.size());
  std::iota(idx.begin(), idx.end(), 0);
  // choose m positions, then permute them
  std::vector<int> pick;
  std::function<bool(size_t)> choose = [&](size_t from) -> bool {
    if (static_cast<int>(pick.size()) == m) {
      std::vector<int> perm = pick;
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
          for (int b = a + 1; b < m && ok; ++b)
            if (pat.has_edge(a, b) && !h.has_edge(hosts[perm[a]], hosts[perm[b]])) ok = false;
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (size_t i = from; i < hosts.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      if (choose(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(0);
}

inline bool independent(const Graph& h, VertexSet s) {
  for (int v : vertices_of(s))
    if (h.adj[v] & s & ~vbit(v)) return false;
  return true;
}

// Forest test by union-find over the edges inside s.
inline bool acyclic(const Graph& h, VertexSet s) {
  std::vector<int> parent(static_cast<size_t>(h.n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (int v : vertices_of(s))
    for (int u : vertices_of(h.adj[v] & s))
      if (u < v) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
      }
  return true;
}

inline bool has_clique(const Graph& h, VertexSet s, int t) {
  if (t == 0) return true;
  std::vector<int> hosts;
  for (int v : vertices_of(s)) hosts.push_back(v);
  std::vector<int> pick;
  std::function<bool(size_t)> choose = [&](size_t from) -> bool {
    if (static_cast<int>(pick.size()) == t) return true;
    for (size_t i = from; i < hosts.size(); ++i) {
      bool ok = true;
      for (int p : pick)
        if (!h.has_edge(hosts[p], hosts[i])) { ok = false; break; }
      if (!ok) continue;
      pick.push_back(static_cast<int>(i));
      if (choose(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return choose(0);
}

// Independence number by scanning every subset.
inline int alpha(const Graph& h) {
  int best = 0;
  for (VertexSet s = 0; s < vbit(h.n); ++s)
    if (independent(h, s)) best = std::max(best, set_size(s));
  return best;
}

// Maximum free set size under an arbitrary freeness predicate, every subset.
template <class Free>
int naive_max_free(const Graph& h, Free&& free) {
  int best = 0;
  for (VertexSet s = 0; s < vbit(h.n); ++s)
    if (free(s)) best = std::max(best, set_size(s));
  return best;
}

inline bool naive_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(static_cast<size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < a.n && ok; ++v)
      for (int u = 0; u < v && ok; ++u)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Connected graphs on n vertices up to isomorphism, counted by brute force
// over all edge subsets with a permutation-minimized canonical key.
inline long count_connected_brute(int n) {
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);

  // edge_pos[perm][e]: where edge e lands after relabeling by perm
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> edge_pos;
  std::map<std::pair<int, int>, int> slot;
  for (int e = 0; e < m; ++e) slot[edges[static_cast<size_t>(e)]] = e;
  do {
    std::vector<int> row(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[static_cast<size_t>(e)];
      int a = perm[u], b = perm[v];
      row[static_cast<size_t>(e)] = slot[{std::min(a, b), std::max(a, b)}];
    }
    edge_pos.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Graph g(n);
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) g.add_edge(edges[static_cast<size_t>(e)].first,
                                      edges[static_cast<size_t>(e)].second);
    if (!gfree::is_connected(g)) continue;
    std::uint32_t canon = ~0u;
    for (const auto& row : edge_pos) {
      std::uint32_t img = 0;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) img |= 1u << row[static_cast<size_t>(e)];
      canon = std::min(canon, img);
    }
    seen.insert(canon);
  }
  return static_cast<long>(seen.size());
}

}  // namespace oracle
