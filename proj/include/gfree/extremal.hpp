#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

/// Exact size of a maximum pattern-free subset, branch and bound over
/// include/exclude decisions. Freeness is hereditary, so a set that already
/// contains a copy never needs extending.
inline int max_free_size(const Graph& h, const Pattern& p, VertexSet* witness = nullptr) {
  if (h.n > 16) throw std::invalid_argument("max_free_size: order above 16 unsupported");
  int best = 0;
  VertexSet best_set = 0;
  std::function<void(int, VertexSet)> rec = [&](int v, VertexSet cur) {
    if (set_size(cur) + (h.n - v) <= best) return;
    if (v == h.n) {
      best = set_size(cur);
      best_set = cur;
      return;
    }
    if (is_free(h, cur | vbit(v), p)) rec(v + 1, cur | vbit(v));
    rec(v + 1, cur);
  };
  rec(0, 0);
  if (witness) *witness = best_set;
  return best;
}

/// Every maximum pattern-free subset, in ascending bitmask order.
inline std::vector<VertexSet> enumerate_max_free_sets(const Graph& h, const Pattern& p) {
  if (h.n > 10) throw std::invalid_argument("enumerate_max_free_sets: order above 10 unsupported");
  std::vector<std::uint8_t> free_table(static_cast<size_t>(1) << h.n);
  free_table[0] = 1;
  int best = 0;
  std::vector<VertexSet> out;
  for (VertexSet m = 1; m < vbit(h.n); ++m) {
    // if some one-vertex-smaller subset already has a copy, so does m
    bool f = free_table[m & (m - 1)] && is_free(h, m, p);
    free_table[m] = f;
    if (!f) continue;
    int sz = set_size(m);
    if (sz > best) {
      best = sz;
      out.clear();
    }
    if (sz == best) out.push_back(m);
  }
  return out;
}

/// Number of r-regular connected components of H[V \ s].
inline int count_regular_components(const Graph& h, VertexSet s, int r) {
  int count = 0;
  for (VertexSet comp : connected_components(h, h.vertex_set() & ~s)) {
    auto reg = is_regular(h, comp);
    if (reg && *reg == r) ++count;
  }
  return count;
}

/// Maximum pattern-free set with the lexicographic tie-breaking the extremal
/// lemma demands: fewest (Delta-d)-regular components of the complement, then
/// fewest components of H[S].
struct ExtremalSet {
  VertexSet set = 0;
  int size = 0;
  int regular_component_count = 0;
  int hs_component_count = 0;
};

inline ExtremalSet extremal_set(const Graph& h, const Pattern& p) {
  if (h.n == 0) throw std::invalid_argument("extremal_set: empty graph");
  int d = pattern_min_degree(p);
  int delta = degree_stats(h).max_degree;
  int r = delta - d;  // negative r matches nothing
  ExtremalSet best;
  bool have = false;
  for (VertexSet s : enumerate_max_free_sets(h, p)) {
    ExtremalSet cand;
    cand.set = s;
    cand.size = set_size(s);
    cand.regular_component_count = r < 0 ? 0 : count_regular_components(h, s, r);
    cand.hs_component_count = static_cast<int>(connected_components(h, s).size());
    if (!have || cand.regular_component_count < best.regular_component_count ||
        (cand.regular_component_count == best.regular_component_count &&
         cand.hs_component_count < best.hs_component_count)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

// Per-vertex outcomes of the extremal lemma's parts (a) and (b).
struct NeighborCheck {
  int vertex = 0;
  int neighbors_in_s = 0;
  bool ok = false;
};
struct CopyCheck {
  int vertex = 0;
  bool unique_vertex_set = false;
  bool unique_copy = false;
  bool d_regular_component = false;
  bool ok = false;
};

struct AuditReport {
  std::vector<VertexSet> regular_components;
  std::vector<NeighborCheck> part_a;
  std::vector<CopyCheck> part_b;
  std::string part_c_case;  // "none" | "complete" | "odd_cycle" | "h_iso_g" | "violation"
  bool passed = false;
};

/// Check the extremal lemma's conclusions (a), (b), (c) on an extremal set.
/// Only single-graph patterns are admissible; a non-extremal input is rejected.
inline AuditReport lemma1_audit(const Graph& h, const Pattern& p, const ExtremalSet& e) {
  if (p.kind != Pattern::Kind::Explicit && p.kind != Pattern::Kind::CompleteK)
    throw std::invalid_argument("lemma1_audit: pattern must be a single graph");
  ExtremalSet ref = extremal_set(h, p);
  if (!is_free(h, e.set, p) || set_size(e.set) != ref.size ||
      e.regular_component_count != ref.regular_component_count ||
      e.hs_component_count != ref.hs_component_count)
    throw std::invalid_argument("lemma1_audit: set is not extremal");

  Graph pat = p.kind == Pattern::Kind::CompleteK ? make_complete(p.param) : p.graph;
  int d = pattern_min_degree(p);
  int delta = degree_stats(h).max_degree;
  int r = delta - d;

  AuditReport rep;
  if (r >= 0)
    for (VertexSet comp : connected_components(h, h.vertex_set() & ~e.set)) {
      auto reg = is_regular(h, comp);
      if (reg && *reg == r) rep.regular_components.push_back(comp);
    }

  bool all_ok = true;
  for (VertexSet comp : rep.regular_components) {
    for (int v : vertices_of(comp)) {
      NeighborCheck a;
      a.vertex = v;
      a.neighbors_in_s = std::popcount(h.adj[v] & e.set);
      a.ok = a.neighbors_in_s == d;
      all_ok &= a.ok;
      rep.part_a.push_back(a);

      CopyCheck b;
      b.vertex = v;
      VertexSet su = e.set | vbit(v);
      auto copies = pattern_copies(h, su, pat);
      std::set<VertexSet> vsets;
      for (const auto& c : copies) vsets.insert(c.vertices);
      b.unique_vertex_set = vsets.size() == 1;
      b.unique_copy = copies.size() == 1;
      if (b.unique_copy) {
        const PatternCopy& c = copies.front();
        // the unique copy must be a d-regular component of H[S + v]
        bool is_comp = false;
        for (VertexSet cc : connected_components(h, su))
          if (cc == c.vertices) { is_comp = true; break; }
        bool d_regular = true;
        for (int u : vertices_of(c.vertices))
          if (std::popcount(h.adj[u] & c.vertices) != d) { d_regular = false; break; }
        b.d_regular_component = is_comp && d_regular;
      }
      b.ok = b.unique_vertex_set && b.unique_copy && b.d_regular_component;
      all_ok &= b.ok;
      rep.part_b.push_back(b);
    }
  }

  if (rep.regular_components.empty()) {
    rep.part_c_case = "none";
  } else if (pattern_contains_complete(p, d + 1) && is_complete(h) && h.n == delta + 1) {
    rep.part_c_case = "complete";
  } else if (d == 1 && pat.n == 2 && is_odd_cycle(h)) {
    rep.part_c_case = "odd_cycle";
  } else if (isomorphic(h, pat)) {
    rep.part_c_case = "h_iso_g";
  } else {
    rep.part_c_case = "violation";
  }
  rep.passed = all_ok && rep.part_c_case != "violation";
  return rep;
}

}  // namespace gfree
