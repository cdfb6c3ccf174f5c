#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/graph6.hpp"

namespace gfree {

namespace detail {

// Minimum upper-triangle bit string over all vertex labelings, found by
// position-by-position backtracking. Placing the vertex at position `pos`
// fixes the bits of column `pos`, so a branch dies as soon as its prefix
// exceeds the best known string.
struct CanonSearch {
  const Graph& g;
  std::vector<std::uint8_t> best, cur;
  std::vector<int> perm;  // position -> original vertex
  VertexSet used = 0;

  explicit CanonSearch(const Graph& graph) : g(graph) {
    int m = g.n * (g.n - 1) / 2;
    best.resize(static_cast<size_t>(m));
    int bit = 0;
    for (int col = 1; col < g.n; ++col)
      for (int row = 0; row < col; ++row) best[bit++] = g.has_edge(row, col);
    cur.assign(static_cast<size_t>(m), 0);
    perm.assign(static_cast<size_t>(g.n), -1);
    place(0, 0);
  }

  void place(int pos, int off) {
    if (pos == g.n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if ((used >> v) & 1) continue;
      for (int i = 0; i < pos; ++i)
        cur[static_cast<size_t>(off + i)] = g.has_edge(perm[static_cast<size_t>(i)], v);
      // full prefix compare: `best` may have shrunk under an earlier sibling
      if (std::lexicographical_compare(best.begin(), best.begin() + off + pos,
                                       cur.begin(), cur.begin() + off + pos))
        continue;
      used |= vbit(v);
      perm[static_cast<size_t>(pos)] = v;
      place(pos + 1, off + pos);
      used &= ~vbit(v);
    }
  }
};

}  // namespace detail

/// Minimum graph6 string over all relabelings; equal strings iff isomorphic.
inline std::string canonical_form(const Graph& g) {
  if (g.n > 10) throw std::invalid_argument("canonical_form: order above 10 unsupported");
  if (g.n <= 1) return write_graph6(g);
  detail::CanonSearch search(g);
  std::string out(1, static_cast<char>(g.n + 63));
  int group = 0, fill = 0;
  for (std::uint8_t b : search.best) {
    group = group << 1 | b;
    if (++fill == 6) {
      out.push_back(static_cast<char>(group + 63));
      group = fill = 0;
    }
  }
  if (fill) out.push_back(static_cast<char>((group << (6 - fill)) + 63));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

/// All graphs on n vertices up to isomorphism, grown one vertex at a time
/// and deduplicated by canonical form. Sorted by canonical graph6 string.
inline std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_all_graphs: n must be 1..8");
  std::vector<Graph> level = {Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      for (VertexSet mask = 0; mask < vbit(k - 1); ++mask) {
        Graph h(k);
        for (int v = 0; v < g.n; ++v)
          for (int u : vertices_of(g.adj[v]))
            if (u < v) h.add_edge(u, v);
        for (int v : vertices_of(mask)) h.add_edge(v, k - 1);
        std::string key = canonical_form(h);
        if (!next.count(key)) {
          Graph rep = parse_graph6(key);
          next.emplace(std::move(key), std::move(rep));
        }
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

/// Connected graphs on n vertices, one per isomorphism class, deterministic order.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace gfree
