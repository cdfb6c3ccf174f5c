#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfree/canonical.hpp"
#include "gfree/graph.hpp"
#include "gfree/graph6.hpp"

namespace gfree {

/// What a color class must avoid. Containment is always subgraph containment,
/// not induced-subgraph containment.
struct Pattern {
  enum class Kind { Explicit, CompleteK, MinDegreeFamily, FamilyList };
  Kind kind = Kind::CompleteK;
  Graph graph;                // Explicit
  int param = 2;              // CompleteK order t / MinDegreeFamily bound p
  std::vector<Graph> family;  // FamilyList
  std::string name;
};

inline Pattern explicit_pattern(Graph g, std::string name = "") {
  if (g.n < 2) throw std::invalid_argument("pattern graph needs at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("pattern graph must be connected");
  Pattern p;
  p.kind = Pattern::Kind::Explicit;
  if (name.empty()) name = "g6:" + write_graph6(g);
  p.graph = std::move(g);
  p.name = std::move(name);
  return p;
}

inline Pattern complete_k(int t) {
  if (t < 2) throw std::invalid_argument("complete pattern needs t >= 2");
  Pattern p;
  p.kind = Pattern::Kind::CompleteK;
  p.param = t;
  p.name = "K" + std::to_string(t);
  return p;
}

inline Pattern min_degree_family(int p_bound) {
  if (p_bound < 1) throw std::invalid_argument("min-degree family needs p >= 1");
  Pattern p;
  p.kind = Pattern::Kind::MinDegreeFamily;
  p.param = p_bound;
  p.name = "mindeg>=" + std::to_string(p_bound);
  return p;
}

inline Pattern family_list(std::vector<Graph> members, std::string name = "") {
  if (members.empty()) throw std::invalid_argument("family list must be nonempty");
  for (const Graph& g : members) {
    if (g.n < 2) throw std::invalid_argument("family member needs at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("family member must be connected");
  }
  Pattern p;
  p.kind = Pattern::Kind::FamilyList;
  if (name.empty()) {
    for (const Graph& g : members) {
      if (!name.empty()) name += "+";
      name += "g6:" + write_graph6(g);
    }
  }
  p.family = std::move(members);
  p.name = std::move(name);
  return p;
}

inline int pattern_min_degree(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Explicit: return degree_stats(p.graph).min_degree;
    case Pattern::Kind::CompleteK: return p.param - 1;
    case Pattern::Kind::MinDegreeFamily: return p.param;
    case Pattern::Kind::FamilyList: {
      int d = max_vertices;
      for (const Graph& g : p.family) d = std::min(d, degree_stats(g).min_degree);
      return d;
    }
  }
  return 0;
}

// Canonical identity used for symmetry pruning and JSON.
inline std::string pattern_key(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Explicit: return "g6:" + canonical_form(p.graph);
    case Pattern::Kind::CompleteK: return "K" + std::to_string(p.param);
    case Pattern::Kind::MinDegreeFamily: return "mindeg>=" + std::to_string(p.param);
    case Pattern::Kind::FamilyList: {
      std::set<std::string> keys;
      for (const Graph& g : p.family) keys.insert(canonical_form(g));
      std::string out = "family:";
      for (const auto& k : keys) out += k + ";";
      return out;
    }
  }
  return "";
}

// True iff K_m is a member of the family the pattern denotes.
inline bool pattern_contains_complete(const Pattern& p, int m) {
  switch (p.kind) {
    case Pattern::Kind::Explicit: return p.graph.n == m && is_complete(p.graph);
    case Pattern::Kind::CompleteK: return p.param == m;
    case Pattern::Kind::MinDegreeFamily: return m - 1 >= p.param;
    case Pattern::Kind::FamilyList:
      for (const Graph& g : p.family)
        if (g.n == m && is_complete(g)) return true;
      return false;
  }
  return false;
}

// True iff the connected graph h is itself a member of the pattern's family.
inline bool pattern_matches_whole(const Pattern& p, const Graph& h) {
  switch (p.kind) {
    case Pattern::Kind::Explicit: return isomorphic(h, p.graph);
    case Pattern::Kind::CompleteK: return h.n == p.param && is_complete(h);
    case Pattern::Kind::MinDegreeFamily:
      return h.n > 0 && degree_stats(h).min_degree >= p.param;
    case Pattern::Kind::FamilyList:
      for (const Graph& g : p.family)
        if (isomorphic(h, g)) return true;
      return false;
  }
  return false;
}

struct Witness {
  VertexSet vertices = 0;      // vertex set of the found copy, or the p-core
  std::vector<int> embedding;  // pattern vertex -> host vertex; empty for cores
};

namespace detail {

// Pattern vertices by descending degree; candidates must have enough degree
// inside s and be consistent with already-mapped pattern neighbors.
template <class F>
bool for_each_embedding(const Graph& h, VertexSet s, const Graph& pat, F&& visit) {
  if (pat.n > set_size(s)) return true;
  std::vector<int> order(static_cast<size_t>(pat.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
  std::vector<int> map(static_cast<size_t>(pat.n), -1);
  VertexSet used = 0;

  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == pat.n) {
      std::vector<int> emb(static_cast<size_t>(pat.n));
      for (int i = 0; i < pat.n; ++i) emb[static_cast<size_t>(i)] = map[static_cast<size_t>(i)];
      return visit(emb);
    }
    int pv = order[static_cast<size_t>(idx)];
    int need = pat.degree(pv);
    for (int v : vertices_of(s & ~used)) {
      if (std::popcount(h.adj[v] & s) < need) continue;
      bool ok = true;
      for (int pu : vertices_of(pat.adj[pv])) {
        int hv = map[static_cast<size_t>(pu)];
        if (hv >= 0 && !h.has_edge(v, hv)) { ok = false; break; }
      }
      if (!ok) continue;
      map[static_cast<size_t>(pv)] = v;
      used |= vbit(v);
      bool keep = rec(idx + 1);
      used &= ~vbit(v);
      map[static_cast<size_t>(pv)] = -1;
      if (!keep) return false;
    }
    return true;
  };
  return rec(0);
}

inline std::optional<std::vector<int>> find_embedding(const Graph& h, VertexSet s,
                                                      const Graph& pat) {
  std::optional<std::vector<int>> found;
  for_each_embedding(h, s, pat, [&](const std::vector<int>& emb) {
    found = emb;
    return false;
  });
  return found;
}

inline std::optional<VertexSet> find_clique(const Graph& h, VertexSet s, int t) {
  if (t <= 0) return VertexSet{0};
  std::function<std::optional<VertexSet>(VertexSet, VertexSet, int)> rec =
      [&](VertexSet cur, VertexSet cand, int left) -> std::optional<VertexSet> {
    if (left == 0) return cur;
    if (set_size(cand) < left) return std::nullopt;
    int v = lowest_vertex(cand);
    if (auto hit = rec(cur | vbit(v), cand & h.adj[v], left - 1)) return hit;
    return rec(cur, cand & ~vbit(v), left);
  };
  return rec(0, s, t);
}

}  // namespace detail

// Nonempty p-core of H[s]: what is left after repeatedly deleting vertices of
// inside-degree below p.
inline VertexSet p_core(const Graph& h, VertexSet s, int p) {
  VertexSet core = s;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : vertices_of(core)) {
      if (std::popcount(h.adj[v] & core) < p) {
        core &= ~vbit(v);
        changed = true;
      }
    }
  }
  return core;
}

/// Witness of a forbidden subgraph inside H[s], if any.
inline std::optional<Witness> contains_pattern(const Graph& h, VertexSet s, const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Explicit: {
      auto emb = detail::find_embedding(h, s, p.graph);
      if (!emb) return std::nullopt;
      Witness w;
      for (int v : *emb) w.vertices |= vbit(v);
      w.embedding = std::move(*emb);
      return w;
    }
    case Pattern::Kind::CompleteK: {
      auto cl = detail::find_clique(h, s, p.param);
      if (!cl) return std::nullopt;
      Witness w;
      w.vertices = *cl;
      for (int v : vertices_of(*cl)) w.embedding.push_back(v);
      return w;
    }
    case Pattern::Kind::MinDegreeFamily: {
      VertexSet core = p_core(h, s, p.param);
      if (!core) return std::nullopt;
      Witness w;
      w.vertices = core;
      return w;
    }
    case Pattern::Kind::FamilyList: {
      for (const Graph& g : p.family) {
        Pattern member = explicit_pattern(g);
        if (auto w = contains_pattern(h, s, member)) return w;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline bool is_free(const Graph& h, VertexSet s, const Pattern& p) {
  return !contains_pattern(h, s, p);
}

struct Degeneracy {
  int k = 0;
  std::vector<int> order;  // removal sequence
};

inline Degeneracy degeneracy(const Graph& h, VertexSet s) {
  if (s == 0) throw std::invalid_argument("degeneracy: empty vertex set");
  Degeneracy out;
  VertexSet left = s;
  while (left) {
    int best = -1, best_deg = max_vertices + 1;
    for (int v : vertices_of(left)) {
      int d = std::popcount(h.adj[v] & left);
      if (d < best_deg) { best = v; best_deg = d; }
    }
    out.k = std::max(out.k, best_deg);
    out.order.push_back(best);
    left &= ~vbit(best);
  }
  return out;
}

/// Exact maximum clique size, branch and bound.
inline int clique_number(const Graph& h) {
  if (h.n > 12) throw std::invalid_argument("clique_number: order above 12 unsupported");
  int best = 0;
  std::function<void(VertexSet, int)> rec = [&](VertexSet cand, int size) {
    if (size > best) best = size;
    if (size + set_size(cand) <= best) return;
    while (cand) {
      if (size + set_size(cand) <= best) return;
      int v = lowest_vertex(cand);
      cand &= ~vbit(v);
      rec(cand & h.adj[v], size + 1);
    }
  };
  rec(h.vertex_set(), 0);
  return best;
}

// A concrete copy: its vertex set plus its edge set (subgraph, not induced).
struct PatternCopy {
  VertexSet vertices = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator<(const PatternCopy& o) const {
    if (vertices != o.vertices) return vertices < o.vertices;
    return edges < o.edges;
  }
};

/// All distinct copies of `pat` in H[s]. Distinct means different vertex set
/// or different edge set; automorphic re-embeddings collapse.
inline std::vector<PatternCopy> pattern_copies(const Graph& h, VertexSet s, const Graph& pat) {
  std::set<PatternCopy> copies;
  detail::for_each_embedding(h, s, pat, [&](const std::vector<int>& emb) {
    PatternCopy c;
    for (int v : emb) c.vertices |= vbit(v);
    for (int pv = 0; pv < pat.n; ++pv)
      for (int pu : vertices_of(pat.adj[pv]))
        if (pu < pv) {
          int a = emb[static_cast<size_t>(pu)], b = emb[static_cast<size_t>(pv)];
          c.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(c.edges.begin(), c.edges.end());
    copies.insert(std::move(c));
    return true;
  });
  return {copies.begin(), copies.end()};
}

// CLI pattern syntax: "K3", "C5", "P4", "mindeg>=2", "g6:<string>"; members of
// a family list joined with `sep`.
inline Pattern parse_pattern(const std::string& text, char sep = ',') {
  if (text.find(sep) != std::string::npos) {
    std::vector<Graph> members;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, sep)) {
      Pattern m = parse_pattern(tok, '\0');
      if (m.kind == Pattern::Kind::MinDegreeFamily)
        throw std::invalid_argument("pattern: min-degree family not allowed inside a family list");
      members.push_back(m.kind == Pattern::Kind::CompleteK ? make_complete(m.param) : m.graph);
    }
    return family_list(std::move(members), text);
  }
  if (text.rfind("mindeg>=", 0) == 0) {
    try {
      return min_degree_family(std::stoi(text.substr(8)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("pattern: bad min-degree bound in '" + text + "'");
    }
  }
  if (text.rfind("g6:", 0) == 0) return explicit_pattern(parse_graph6(text.substr(3)), text);
  if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'C' || text[0] == 'P')) {
    auto g = parse_named(text);
    if (!g) throw std::invalid_argument("pattern: unknown name '" + text + "'");
    if (text[0] == 'K' && text.find(',') == std::string::npos)
      return complete_k(static_cast<int>(g->n));
    return explicit_pattern(std::move(*g), text);
  }
  throw std::invalid_argument("pattern: cannot parse '" + text + "'");
}

}  // namespace gfree
