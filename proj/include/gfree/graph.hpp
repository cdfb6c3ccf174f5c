#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfree {

// Vertex subsets of a graph on at most 62 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int max_vertices = 62;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_set(int n) { return n == 0 ? 0 : ~VertexSet{0} >> (64 - n); }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Range over the members of a VertexSet, lowest vertex first.
struct VertexRange {
  VertexSet bits;
  struct iterator {
    VertexSet rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};
inline VertexRange vertices_of(VertexSet s) { return {s}; }

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;

  Graph() = default;
  explicit Graph(int order) : n(order), adj(static_cast<size_t>(order), 0) {
    if (order < 0 || order > max_vertices)
      throw std::invalid_argument("graph order out of range: " + std::to_string(order));
  }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
  }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  VertexSet neighbors(int v) const { return adj[v]; }
  int degree(int v) const { return std::popcount(adj[v]); }
  VertexSet vertex_set() const { return full_set(n); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
  }
  int edge_count(VertexSet within) const {
    int total = 0;
    for (int v : vertices_of(within)) total += std::popcount(adj[v] & within);
    return total / 2;
  }

  bool operator==(const Graph&) const = default;
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("degree_stats: empty graph");
  DegreeStats st{0, max_vertices + 1};
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (d > st.max_degree) st.max_degree = d;
    if (d < st.min_degree) st.min_degree = d;
  }
  return st;
}

inline int max_degree(const Graph& g, VertexSet within) {
  int best = 0;
  for (int v : vertices_of(within))
    best = std::max(best, std::popcount(g.adj[v] & within));
  return best;
}

inline int min_degree(const Graph& g, VertexSet within) {
  int best = max_vertices + 1;
  for (int v : vertices_of(within))
    best = std::min(best, std::popcount(g.adj[v] & within));
  return best;
}

// Components of the subgraph induced on `within`, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (left) {
    VertexSet comp = vbit(lowest_vertex(left));
    for (;;) {
      VertexSet grow = comp;
      for (int v : vertices_of(comp)) grow |= g.adj[v] & within;
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  return connected_components(g, g.vertex_set()).size() == 1;
}

// Degree r such that every vertex of `within` has exactly r neighbors inside
// `within`, if such r exists. Empty `within` is rejected.
inline std::optional<int> is_regular(const Graph& g, VertexSet within) {
  if (within == 0) throw std::invalid_argument("is_regular: empty vertex set");
  int r = std::popcount(g.adj[lowest_vertex(within)] & within);
  for (int v : vertices_of(within))
    if (std::popcount(g.adj[v] & within) != r) return std::nullopt;
  return r;
}

inline bool is_acyclic(const Graph& g, VertexSet within) {
  // forest iff |E| = |V| - #components on every component union
  int comps = static_cast<int>(connected_components(g, within).size());
  return g.edge_count(within) == set_size(within) - comps;
}

inline bool is_complete(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != g.n - 1) return false;
  return true;
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  auto r = is_regular(g, g.vertex_set());
  return r && *r == 2;
}

inline bool is_odd_cycle(const Graph& g) { return is_cycle_graph(g) && g.n % 2 == 1; }

// Induced subgraph on `s` with vertices relabeled 0..|s|-1; second element maps
// new labels back to the originals.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> back;
  std::vector<int> fwd(static_cast<size_t>(g.n), -1);
  for (int v : vertices_of(s)) {
    fwd[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  Graph sub(static_cast<int>(back.size()));
  for (int v : vertices_of(s))
    for (int u : vertices_of(g.adj[v] & s))
      if (u < v) sub.add_edge(fwd[u], fwd[v]);
  return {std::move(sub), std::move(back)};
}

// perm[old] = new label.
inline Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u : vertices_of(g.adj[v]))
      if (u < v) out.add_edge(perm[u], perm[v]);
  return out;
}

inline Graph make_complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph make_complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("multipartite part size must be positive");
    n += p;
  }
  Graph g(n);
  int start_u = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int start_v = start_u + parts[i];
    for (size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = start_u; u < start_u + parts[i]; ++u)
        for (int v = start_v; v < start_v + parts[j]; ++v) g.add_edge(u, v);
      start_v += parts[j];
    }
    start_u += parts[i];
  }
  return g;
}

inline Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

// "n" on the first line, then "u v" per edge. Duplicates collapse.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("edge-list: " + what + " at line " + std::to_string(lineno));
  };
  int n = -1;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0 || n > max_vertices) fail("bad vertex count");
      std::string extra;
      if (ls >> extra) fail("trailing token");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(ls >> u)) {
      std::string tok;
      std::istringstream probe(line);
      if (probe >> tok) fail("non-integer token");
      continue;  // blank line
    }
    if (!(ls >> v)) fail("non-integer token");
    std::string extra;
    if (ls >> extra) fail("trailing token");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    g.add_edge(u, v);
  }
  if (n < 0) throw std::runtime_error("edge-list: empty input");
  return g;
}

// Named instances: "petersen", "K7", "C9", "P5", "K3,3,3".
inline std::optional<Graph> parse_named(const std::string& name) {
  if (name == "petersen") return make_petersen();
  if (name.size() < 2) return std::nullopt;
  char kind = name[0];
  std::string rest = name.substr(1);
  if (kind == 'K' && rest.find(',') != std::string::npos) {
    std::vector<int> parts;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        size_t used = 0;
        int p = std::stoi(tok, &used);
        if (used != tok.size() || p < 1) return std::nullopt;
        parts.push_back(p);
      } catch (...) {
        return std::nullopt;
      }
    }
    if (parts.empty()) return std::nullopt;
    return make_complete_multipartite(parts);
  }
  int m = 0;
  try {
    size_t used = 0;
    m = std::stoi(rest, &used);
    if (used != rest.size()) return std::nullopt;
  } catch (...) {
    return std::nullopt;
  }
  if (m < 1 || m > max_vertices) return std::nullopt;
  switch (kind) {
    case 'K': return make_complete(m);
    case 'C': return m >= 3 ? std::optional<Graph>(make_cycle(m)) : std::nullopt;
    case 'P': return make_path(m);
    default: return std::nullopt;
  }
}

}  // namespace gfree
