#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gfree/extremal.hpp"
#include "gfree/graph.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

enum class ExceptionKind { None, SingleIso, AllCompleteAndHComplete, AllK2AndOddCycle };

inline const char* exception_name(ExceptionKind k) {
  switch (k) {
    case ExceptionKind::None: return "none";
    case ExceptionKind::SingleIso: return "single_iso";
    case ExceptionKind::AllCompleteAndHComplete: return "all_complete_h_complete";
    case ExceptionKind::AllK2AndOddCycle: return "all_k2_odd_cycle";
  }
  return "";
}

inline int spec_degree_sum(const std::vector<Pattern>& specs) {
  int sum = 0;
  for (const Pattern& p : specs) sum += pattern_min_degree(p);
  return sum;
}

/// The exceptional shapes the partition theorem excludes, checked in order.
/// Requires sum of pattern minimum degrees == Delta(h).
inline ExceptionKind exception_classify(const Graph& h, const std::vector<Pattern>& specs) {
  if (specs.empty()) throw std::invalid_argument("exception_classify: no patterns");
  int delta = degree_stats(h).max_degree;
  if (spec_degree_sum(specs) != delta)
    throw std::invalid_argument("exception_classify: degree sum does not match max degree");
  if (specs.size() == 1 && pattern_matches_whole(specs[0], h)) return ExceptionKind::SingleIso;

  bool all_complete = true;
  bool all_k2 = true;
  for (const Pattern& p : specs) {
    int d = pattern_min_degree(p);
    all_complete &= pattern_contains_complete(p, d + 1);
    all_k2 &= pattern_contains_complete(p, 2);
  }
  if (all_complete && is_complete(h) && h.n == delta + 1)
    return ExceptionKind::AllCompleteAndHComplete;
  if (all_k2 && is_odd_cycle(h)) return ExceptionKind::AllK2AndOddCycle;
  return ExceptionKind::None;
}

struct PartitionCertificate {
  std::vector<VertexSet> classes;
  int designated_max_class = 0;
  std::string method_tag;  // "extremal_recursion" | "exact_fallback"
};

struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive backtracking for a partition into pattern-free classes, with
/// symmetry pruning over repeated patterns. Definitive none when absent.
inline std::optional<std::vector<VertexSet>> exact_free_partition(
    const Graph& h, const std::vector<Pattern>& patterns) {
  size_t k = patterns.size();
  if (h.n > 16) throw std::invalid_argument("exact_free_partition: order above 16 unsupported");
  if (k == 0 || k > 8) throw std::invalid_argument("exact_free_partition: class count must be 1..8");

  // identical patterns give interchangeable classes: only the first empty
  // class of each group may be opened
  std::vector<int> group(k, 0);
  {
    std::vector<std::string> keys;
    for (const Pattern& p : patterns) keys.push_back(pattern_key(p));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < i; ++j)
        if (keys[i] == keys[j]) { group[i] = group[j]; break; }
    for (size_t i = 0; i < k; ++i)
      if (group[i] == 0) group[i] = static_cast<int>(i) + 1;
  }

  std::vector<VertexSet> classes(k, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == h.n) return true;
    for (size_t j = 0; j < k; ++j) {
      if (classes[j] == 0) {
        bool earlier_empty = false;
        for (size_t i = 0; i < j; ++i)
          if (group[i] == group[j] && classes[i] == 0) { earlier_empty = true; break; }
        if (earlier_empty) continue;
      }
      VertexSet next = classes[j] | vbit(v);
      if (!is_free(h, next, patterns[j])) continue;
      classes[j] = next;
      if (rec(v + 1)) return true;
      classes[j] &= ~vbit(v);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return classes;
}

namespace detail {

struct Theorem1Builder {
  const Graph& h;
  bool used_fallback = false;

  // Partition `region` by the remaining patterns. Classes come back indexed
  // by position within `rest`.
  std::vector<VertexSet> solve(VertexSet region, std::span<const Pattern> rest) {
    std::vector<VertexSet> classes(rest.size(), 0);
    if (region == 0) return classes;
    auto [sub, back] = induced_subgraph(h, region);
    int delta = degree_stats(sub).max_degree;
    int dsum = 0;
    for (const Pattern& p : rest) dsum += pattern_min_degree(p);

    std::vector<Pattern> rest_vec(rest.begin(), rest.end());
    if (delta < dsum || exception_classify(sub, rest_vec) != ExceptionKind::None) {
      auto exact = exact_free_partition(sub, rest_vec);
      if (!exact)
        throw TheoremViolation("no pattern-free partition of a residual component exists");
      used_fallback = true;
      for (size_t i = 0; i < exact->size(); ++i)
        for (int v : vertices_of((*exact)[i])) classes[i] |= vbit(back[static_cast<size_t>(v)]);
      return classes;
    }

    ExtremalSet e = extremal_set(sub, rest.front());
    for (int v : vertices_of(e.set)) classes[0] |= vbit(back[static_cast<size_t>(v)]);
    VertexSet remainder = region & ~classes[0];
    if (rest.size() == 1) {
      if (remainder != 0)
        throw TheoremViolation("single remaining pattern did not absorb its component");
      return classes;
    }
    for (VertexSet comp : connected_components(h, remainder)) {
      auto tail = solve(comp, rest.subspan(1));
      for (size_t i = 0; i < tail.size(); ++i) classes[i + 1] |= tail[i];
    }
    return classes;
  }
};

}  // namespace detail

/// Validate a certificate from scratch: disjoint cover, per-class freeness,
/// and designated class size against an independent exact search.
inline std::optional<std::string> certificate_error(const Graph& h,
                                                    const std::vector<Pattern>& specs,
                                                    const PartitionCertificate& cert) {
  if (cert.classes.size() != specs.size()) return "class count mismatch";
  VertexSet seen = 0;
  for (VertexSet c : cert.classes) {
    if (c & seen) return "classes overlap";
    seen |= c;
  }
  if (seen != h.vertex_set()) return "classes do not cover the vertex set";
  for (size_t i = 0; i < specs.size(); ++i)
    if (!is_free(h, cert.classes[i], specs[i]))
      return "class " + std::to_string(i) + " contains its pattern";
  int di = cert.designated_max_class;
  if (di < 0 || di >= static_cast<int>(cert.classes.size())) return "bad designated class index";
  if (set_size(cert.classes[static_cast<size_t>(di)]) !=
      max_free_size(h, specs[static_cast<size_t>(di)]))
    return "designated class is not maximum";
  return std::nullopt;
}

/// The partition the main theorem proves to exist: class 1 is a maximum
/// pattern-free set, the rest come from per-component recursion with an exact
/// fallback when a component's degree budget breaks the hypothesis.
inline std::variant<PartitionCertificate, ExceptionKind> theorem1_partition(
    const Graph& h, const std::vector<Pattern>& specs) {
  if (!is_connected(h)) throw std::invalid_argument("theorem1_partition: graph must be connected");
  ExceptionKind ex = exception_classify(h, specs);
  if (ex != ExceptionKind::None) return ex;

  detail::Theorem1Builder builder{h};
  PartitionCertificate cert;
  cert.classes = builder.solve(h.vertex_set(), specs);
  cert.designated_max_class = 0;
  cert.method_tag = builder.used_fallback ? "exact_fallback" : "extremal_recursion";
  if (auto err = certificate_error(h, specs, cert))
    throw std::logic_error("theorem1_partition produced an invalid certificate: " + *err);
  return cert;
}

/// Minimum k admitting a pattern-free k-partition.
inline int chi_free(const Graph& h, const Pattern& p) {
  if (h.n == 0) throw std::invalid_argument("chi_free: empty graph");
  for (int k = 1; k <= h.n; ++k) {
    std::vector<Pattern> patterns(static_cast<size_t>(k), p);
    if (exact_free_partition(h, patterns)) return k;
  }
  return h.n;  // singletons are always pattern-free
}

inline int chromatic_number(const Graph& h) { return chi_free(h, complete_k(2)); }

struct LovaszResult {
  std::vector<VertexSet> classes;
  long moves = 0;
};

/// Bounded-degree decomposition: class i ends with inside-degree <= d_i - 1.
/// Local search on the potential sum of e(H[V_i]) / d_i; every move drops it
/// by at least 1 / max d_i, so at most |E| * max d_i moves happen.
inline LovaszResult lovasz_partition(const Graph& h, const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("lovasz_partition: no degree bounds");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("lovasz_partition: degree bounds must be positive");
  int delta = h.n == 0 ? 0 : degree_stats(h).max_degree;
  int dsum = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (dsum < delta + 1)
    throw std::invalid_argument("lovasz_partition: degree bounds must sum to at least Delta+1");

  size_t k = degrees.size();
  size_t start = 0;
  for (size_t j = 1; j < k; ++j)
    if (degrees[j] > degrees[start]) start = j;

  std::vector<size_t> cls(static_cast<size_t>(h.n), start);
  LovaszResult out;
  out.classes.assign(k, 0);
  for (int v = 0; v < h.n; ++v) out.classes[start] |= vbit(v);

  long bound = static_cast<long>(h.edge_count()) *
               *std::max_element(degrees.begin(), degrees.end());
  for (bool moved = true; moved;) {
    moved = false;
    for (int v = 0; v < h.n && !moved; ++v) {
      size_t i = cls[static_cast<size_t>(v)];
      if (std::popcount(h.adj[v] & out.classes[i]) < degrees[i]) continue;
      for (size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        if (std::popcount(h.adj[v] & out.classes[j]) <= degrees[j] - 1) {
          out.classes[i] &= ~vbit(v);
          out.classes[j] |= vbit(v);
          cls[static_cast<size_t>(v)] = j;
          ++out.moves;
          moved = true;
          break;
        }
      }
      if (moved) break;
      throw std::logic_error("lovasz_partition: no admissible move for an overloaded vertex");
    }
    if (out.moves > bound)
      throw std::logic_error("lovasz_partition: move bound exceeded");
  }
  return out;
}

/// Backtracking partition where class j must satisfy an arbitrary hereditary
/// predicate. `group` marks interchangeable classes for symmetry pruning.
inline std::optional<std::vector<VertexSet>> exact_partition_with(
    const Graph& h, const std::vector<std::function<bool(const Graph&, VertexSet)>>& preds,
    const std::vector<int>& group) {
  size_t k = preds.size();
  std::vector<VertexSet> classes(k, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == h.n) return true;
    for (size_t j = 0; j < k; ++j) {
      if (classes[j] == 0) {
        bool earlier_empty = false;
        for (size_t i = 0; i < j; ++i)
          if (group[i] == group[j] && classes[i] == 0) { earlier_empty = true; break; }
        if (earlier_empty) continue;
      }
      VertexSet next = classes[j] | vbit(v);
      if (!preds[j](h, next)) continue;
      classes[j] = next;
      if (rec(v + 1)) return true;
      classes[j] &= ~vbit(v);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return classes;
}

struct CatlinLaiResult {
  enum class Status { Ok, ExcludedCycle, ExcludedOddComplete };
  Status status = Status::Ok;
  std::vector<VertexSet> classes;      // ceil(Delta/2) acyclic classes
  int designated_max_class = -1;       // maximum acyclic class when available
  bool options_applicable = false;     // odd Delta with at least 2 classes
  bool option_a = false;  // independent class + maximum acyclic class
  bool option_b = false;  // maximum independent class
};

/// Vertex-arboricity decomposition in the Catlin-Lai shape: ceil(Delta/2)
/// acyclic classes; for odd Delta the achievable extra properties (a)/(b)
/// are probed by exact search and recorded.
inline CatlinLaiResult catlin_lai_partition(const Graph& h) {
  if (!is_connected(h)) throw std::invalid_argument("catlin_lai_partition: graph must be connected");
  CatlinLaiResult out;
  if (is_cycle_graph(h)) {
    out.status = CatlinLaiResult::Status::ExcludedCycle;
    return out;
  }
  if (is_complete(h) && h.n % 2 == 1) {
    out.status = CatlinLaiResult::Status::ExcludedOddComplete;
    return out;
  }
  int delta = degree_stats(h).max_degree;
  if (delta <= 1) {  // K_2: a single acyclic class
    out.classes = {h.vertex_set()};
    out.designated_max_class = 0;
    return out;
  }
  int k = (delta + 1) / 2;
  Pattern acyclic = min_degree_family(2);

  std::vector<Pattern> specs(static_cast<size_t>(delta / 2), acyclic);
  if (delta % 2 == 1) specs.push_back(complete_k(2));
  auto res = theorem1_partition(h, specs);
  if (auto* cert = std::get_if<PartitionCertificate>(&res)) {
    out.classes = cert->classes;
    out.designated_max_class = 0;
  } else {
    // even-order complete graphs land here: fall back to any all-acyclic split
    auto pred = [](const Graph& g, VertexSet s) { return is_acyclic(g, s); };
    std::vector<std::function<bool(const Graph&, VertexSet)>> preds(static_cast<size_t>(k), pred);
    auto split = exact_partition_with(h, preds, std::vector<int>(static_cast<size_t>(k), 0));
    if (!split)
      throw TheoremViolation("no partition into ceil(Delta/2) acyclic classes exists");
    out.classes = *split;
  }

  if (delta % 2 == 1 && k >= 2) {
    out.options_applicable = true;
    auto acyclic_pred = [](const Graph& g, VertexSet s) { return is_acyclic(g, s); };
    auto indep_pred = [](const Graph& g, VertexSet s) {
      for (int v : vertices_of(s))
        if (g.adj[v] & s) return false;
      return true;
    };
    // (a): fix a maximum acyclic class, split the rest into acyclic classes
    // plus one independent class
    for (VertexSet a_class : enumerate_max_free_sets(h, acyclic)) {
      Graph sub = induced_subgraph(h, h.vertex_set() & ~a_class).first;
      std::vector<std::function<bool(const Graph&, VertexSet)>> preds(
          static_cast<size_t>(k - 2), acyclic_pred);
      preds.push_back(indep_pred);
      std::vector<int> group(static_cast<size_t>(k - 1), 0);
      group.back() = 1;
      if (sub.n == 0 || exact_partition_with(sub, preds, group)) {
        out.option_a = true;
        break;
      }
    }
    // (b): fix a maximum independent class, split the rest into acyclic classes
    for (VertexSet i_class : enumerate_max_free_sets(h, complete_k(2))) {
      Graph sub = induced_subgraph(h, h.vertex_set() & ~i_class).first;
      std::vector<std::function<bool(const Graph&, VertexSet)>> preds(
          static_cast<size_t>(k - 1), acyclic_pred);
      if (sub.n == 0 || exact_partition_with(sub, preds,
                                             std::vector<int>(static_cast<size_t>(k - 1), 0))) {
        out.option_b = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace gfree
