#pragma once

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gfree/canonical.hpp"
#include "gfree/graph.hpp"
#include "gfree/graph6.hpp"
#include "gfree/partition.hpp"
#include "gfree/pattern.hpp"

namespace gfree {

/// Default forbidden-pattern catalog for the corpus sweeps.
inline std::vector<Pattern> default_catalog() {
  return {
      complete_k(2),
      complete_k(3),
      complete_k(4),
      explicit_pattern(make_path(3), "P3"),
      explicit_pattern(make_path(4), "P4"),
      explicit_pattern(make_cycle(4), "C4"),
      explicit_pattern(make_cycle(5), "C5"),
      min_degree_family(2),
      min_degree_family(3),
  };
}

// Explicit single-graph members of the catalog (for the lemma/bounds suites).
inline std::vector<Pattern> single_graph_catalog(const std::vector<Pattern>& catalog) {
  std::vector<Pattern> out;
  for (const Pattern& p : catalog)
    if (p.kind == Pattern::Kind::Explicit || p.kind == Pattern::Kind::CompleteK)
      out.push_back(p);
  return out;
}

struct Failure {
  std::string graph6;
  std::string spec;
  std::string stage;
  std::string witness;
};

struct VerifyReport {
  std::string suite;
  int n_max = 0;
  long instances = 0;
  long exceptions = 0;
  std::map<std::string, long> notes;
  std::vector<Failure> failures;
  double wall_ms = 0;
};

/// Connected corpus for n = 1..n_max, cached across suites.
inline const std::vector<Graph>& corpus(int n_max) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_max);
  if (it != cache.end()) return it->second;
  std::vector<Graph> all;
  for (int n = 1; n <= n_max; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) all.push_back(std::move(g));
  return cache.emplace(n_max, std::move(all)).first->second;
}

namespace detail {

struct SuiteSlice {
  long instances = 0;
  long exceptions = 0;
  std::map<std::string, long> notes;
  std::vector<Failure> failures;
};

// Work-stealing over graphs; per-graph results merged in corpus order so the
// report is identical at any worker count.
template <class Fn>
VerifyReport run_suite(const std::string& name, int n_max, int jobs, Fn&& per_graph) {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Graph>& graphs = corpus(n_max);
  std::vector<SuiteSlice> slices(graphs.size());
  std::atomic<size_t> next{0};
  if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= graphs.size()) break;
      per_graph(graphs[i], slices[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerifyReport rep;
  rep.suite = name;
  rep.n_max = n_max;
  for (const SuiteSlice& s : slices) {
    rep.instances += s.instances;
    rep.exceptions += s.exceptions;
    for (const auto& [k, v] : s.notes) rep.notes[k] += v;
    rep.failures.insert(rep.failures.end(), s.failures.begin(), s.failures.end());
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::string spec_string(const std::vector<Pattern>& specs) {
  std::string out;
  for (const Pattern& p : specs) {
    if (!out.empty()) out += ",";
    out += p.name;
  }
  return out;
}

inline std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int v : vertices_of(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// All multisets of catalog indices, size 1..k_max, whose degrees sum to target.
inline void for_each_multiset(const std::vector<Pattern>& catalog, int target, int k_max,
                              const std::function<void(const std::vector<Pattern>&)>& f) {
  std::vector<int> degs;
  for (const Pattern& p : catalog) degs.push_back(pattern_min_degree(p));
  std::vector<size_t> pick;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0 && !pick.empty()) {
      std::vector<Pattern> specs;
      for (size_t i : pick) specs.push_back(catalog[i]);
      f(specs);
    }
    if (static_cast<int>(pick.size()) == k_max || left <= 0) return;
    for (size_t i = from; i < catalog.size(); ++i) {
      if (degs[i] > left) continue;
      pick.push_back(i);
      rec(i, left - degs[i]);
      pick.pop_back();
    }
  };
  rec(0, target);
}

}  // namespace detail

/// Partition theorem over the corpus: certificate XOR exception, per multiset.
inline VerifyReport verify_theorem1(int n_max, const std::vector<Pattern>& catalog,
                                    int jobs = 0, int k_max = 3) {
  return detail::run_suite("theorem1", n_max, jobs, [&](const Graph& g, detail::SuiteSlice& out) {
    if (g.n == 0) return;
    int delta = degree_stats(g).max_degree;
    if (delta == 0) return;
    std::string g6 = write_graph6(g);
    detail::for_each_multiset(catalog, delta, k_max, [&](const std::vector<Pattern>& specs) {
      ++out.instances;
      std::string spec = detail::spec_string(specs);
      try {
        auto res = theorem1_partition(g, specs);
        if (std::holds_alternative<ExceptionKind>(res)) {
          ++out.exceptions;
          ++out.notes[std::string("exception_") +
                      exception_name(std::get<ExceptionKind>(res))];
          return;
        }
        const auto& cert = std::get<PartitionCertificate>(res);
        ++out.notes["method_" + cert.method_tag];
        if (auto err = certificate_error(g, specs, cert))
          out.failures.push_back({g6, spec, "certificate", *err});
      } catch (const TheoremViolation& e) {
        out.failures.push_back({g6, spec, "theorem_violation", e.what()});
      } catch (const std::exception& e) {
        out.failures.push_back({g6, spec, "error", e.what()});
      }
    });
  });
}

/// Extremal lemma over the corpus with single-graph patterns.
inline VerifyReport verify_lemma1(int n_max, const std::vector<Pattern>& catalog, int jobs = 0) {
  std::vector<Pattern> singles = single_graph_catalog(catalog);
  return detail::run_suite("lemma1", n_max, jobs, [=](const Graph& g, detail::SuiteSlice& out) {
    if (g.n == 0) return;
    int delta = degree_stats(g).max_degree;
    std::string g6 = write_graph6(g);
    for (const Pattern& p : singles) {
      int d = pattern_min_degree(p);
      if (d < 1 || d > delta) continue;
      ++out.instances;
      try {
        ExtremalSet e = extremal_set(g, p);
        AuditReport rep = lemma1_audit(g, p, e);
        if (!rep.regular_components.empty()) ++out.notes["case_" + rep.part_c_case];
        if (!rep.passed)
          out.failures.push_back({g6, p.name, "lemma1_audit",
                                  "part_c=" + rep.part_c_case +
                                      " s=" + detail::set_string(e.set)});
      } catch (const std::exception& e) {
        out.failures.push_back({g6, p.name, "error", e.what()});
      }
    }
  });
}

/// The three chromatic bounds against the exact pattern-free chromatic number.
inline VerifyReport verify_bounds(int n_max, const std::vector<Pattern>& catalog, int jobs = 0) {
  std::vector<Pattern> singles = single_graph_catalog(catalog);
  return detail::run_suite("bounds", n_max, jobs, [=](const Graph& g, detail::SuiteSlice& out) {
    if (g.n == 0) return;
    int delta = degree_stats(g).max_degree;
    std::string g6 = write_graph6(g);
    int chi_h = chromatic_number(g);
    for (const Pattern& p : singles) {
      ++out.instances;
      try {
        int d = pattern_min_degree(p);
        int chi_gp = chi_free(g, p);
        Graph pat = p.kind == Pattern::Kind::CompleteK ? make_complete(p.param) : p.graph;
        int chi_pat = chromatic_number(pat);

        int ceil_lv = (delta + 1 + d - 1) / d;
        if (chi_gp > ceil_lv) {
          out.failures.push_back({g6, p.name, "bound_lovasz",
                                  std::to_string(chi_gp) + " > " + std::to_string(ceil_lv)});
          continue;
        }
        int ceil_chi = (chi_h + chi_pat - 2) / (chi_pat - 1);
        if (chi_gp > ceil_chi) {
          out.failures.push_back({g6, p.name, "bound_chi_ratio",
                                  std::to_string(chi_gp) + " > " + std::to_string(ceil_chi)});
          continue;
        }
        // Brooks-Catlin bound with the corollary's carve-outs; when d does not
        // divide Delta the bound follows from the Lovasz route with no carve-out
        if (delta == 0) {
          ++out.exceptions;
          continue;
        }
        int k = (delta + d - 1) / d;
        if (delta % d == 0) {
          std::vector<Pattern> specs(static_cast<size_t>(k), p);
          if (exception_classify(g, specs) != ExceptionKind::None) {
            ++out.exceptions;
            continue;
          }
        }
        if (chi_gp > k)
          out.failures.push_back({g6, p.name, "bound_brooks_catlin",
                                  std::to_string(chi_gp) + " > " + std::to_string(k)});
      } catch (const std::exception& e) {
        out.failures.push_back({g6, p.name, "error", e.what()});
      }
    }
  });
}

/// Bounded-degree decompositions at the minimal budget, plus the fixed
/// K_{3,3,3} instance that shows Delta+1 cannot drop to Delta.
inline VerifyReport verify_lovasz(int n_max, int jobs = 0, int k_max = 3) {
  VerifyReport rep =
      detail::run_suite("lovasz", n_max, jobs, [=](const Graph& g, detail::SuiteSlice& out) {
        if (g.n == 0) return;
        int delta = degree_stats(g).max_degree;
        std::string g6 = write_graph6(g);
        // descending degree vectors with sum Delta+1
        std::vector<int> vec;
        std::function<void(int, int)> rec = [&](int left, int cap) {
          if (left == 0 && !vec.empty()) {
            ++out.instances;
            std::string spec = "degrees=";
            for (size_t i = 0; i < vec.size(); ++i)
              spec += (i ? "," : "") + std::to_string(vec[i]);
            try {
              LovaszResult res = lovasz_partition(g, vec);
              for (size_t i = 0; i < vec.size(); ++i)
                if (max_degree(g, res.classes[i]) > vec[i] - 1) {
                  out.failures.push_back({g6, spec, "class_degree", detail::set_string(res.classes[i])});
                  return;
                }
              long bound = static_cast<long>(g.edge_count()) *
                           *std::max_element(vec.begin(), vec.end());
              if (res.moves > bound)
                out.failures.push_back({g6, spec, "move_bound", std::to_string(res.moves)});
            } catch (const std::exception& e) {
              out.failures.push_back({g6, spec, "error", e.what()});
            }
            return;
          }
          if (static_cast<int>(vec.size()) == k_max || left <= 0) return;
          for (int d = std::min(cap, left); d >= 1; --d) {
            vec.push_back(d);
            rec(left - d, d);
            vec.pop_back();
          }
        };
        rec(delta + 1, delta + 1);
      });

  // fixed negative instance: K_{3,3,3} has no 2-split with both degrees <= 2
  Graph k333 = make_complete_multipartite({3, 3, 3});
  ++rep.instances;
  auto deg_pred = [](int cap) {
    return [cap](const Graph& g, VertexSet s) { return max_degree(g, s) <= cap; };
  };
  std::vector<std::function<bool(const Graph&, VertexSet)>> preds(2, deg_pred(2));
  if (exact_partition_with(k333, preds, {0, 0}))
    rep.failures.push_back({write_graph6(k333), "degrees=3,3", "k333_negative",
                            "a forbidden 2-split with class degrees <= 2 exists"});
  ++rep.instances;
  try {
    LovaszResult res = lovasz_partition(k333, {4, 3});
    if (max_degree(k333, res.classes[0]) > 3 || max_degree(k333, res.classes[1]) > 2)
      rep.failures.push_back({write_graph6(k333), "degrees=4,3", "k333_positive", "degree bound broken"});
  } catch (const std::exception& e) {
    rep.failures.push_back({write_graph6(k333), "degrees=4,3", "error", e.what()});
  }
  return rep;
}

/// Catlin's theorem (all-K_2 specs) and the Catlin-Lai option bookkeeping.
inline VerifyReport verify_catlin_brooks(int n_max, int jobs = 0) {
  return detail::run_suite("catlin_brooks", n_max, jobs,
                           [](const Graph& g, detail::SuiteSlice& out) {
    if (g.n == 0) return;
    int delta = degree_stats(g).max_degree;
    std::string g6 = write_graph6(g);
    if (delta >= 1) {
      ++out.instances;
      std::vector<Pattern> specs(static_cast<size_t>(delta), complete_k(2));
      try {
        auto res = theorem1_partition(g, specs);
        if (std::holds_alternative<ExceptionKind>(res)) {
          ++out.exceptions;
        } else {
          const auto& cert = std::get<PartitionCertificate>(res);
          if (auto err = certificate_error(g, specs, cert))
            out.failures.push_back({g6, "catlin", "certificate", *err});
        }
      } catch (const TheoremViolation& e) {
        out.failures.push_back({g6, "catlin", "theorem_violation", e.what()});
      } catch (const std::exception& e) {
        out.failures.push_back({g6, "catlin", "error", e.what()});
      }
    }
    ++out.instances;
    try {
      CatlinLaiResult res = catlin_lai_partition(g);
      if (res.status != CatlinLaiResult::Status::Ok) {
        ++out.exceptions;
        return;
      }
      for (VertexSet c : res.classes)
        if (!is_acyclic(g, c)) {
          out.failures.push_back({g6, "catlin_lai", "acyclic_class", detail::set_string(c)});
          return;
        }
      if (res.options_applicable) {
        ++out.notes["catlin_lai_odd_delta"];
        if (res.option_a) ++out.notes["catlin_lai_option_a"];
        if (res.option_b) ++out.notes["catlin_lai_option_b"];
        if (!res.option_a && !res.option_b) ++out.notes["catlin_lai_neither_option"];
      }
    } catch (const std::exception& e) {
      out.failures.push_back({g6, "catlin_lai", "error", e.what()});
    }
  });
}

/// Degenerate partitions: the two-family partition theorem consequence and the
/// joint degree/degeneracy existence statement.
inline VerifyReport verify_degenerate(int n_max, int jobs = 0) {
  return detail::run_suite("degenerate", n_max, jobs,
                           [](const Graph& g, detail::SuiteSlice& out) {
    if (g.n == 0) return;
    int delta = degree_stats(g).max_degree;
    if (delta < 3 || clique_number(g) > delta) return;
    std::string g6 = write_graph6(g);
    for (int d1 = 1; d1 < delta; ++d1) {
      int d2 = delta - d1;
      ++out.instances;
      std::string spec = "d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      try {
        std::vector<Pattern> specs = {min_degree_family(d1), min_degree_family(d2)};
        auto res = theorem1_partition(g, specs);
        if (std::holds_alternative<ExceptionKind>(res)) {
          out.failures.push_back({g6, spec, "matamala_exception", "unexpected exception"});
        } else {
          const auto& cert = std::get<PartitionCertificate>(res);
          if (auto err = certificate_error(g, specs, cert))
            out.failures.push_back({g6, spec, "matamala_certificate", *err});
          else {
            // class degeneracy re-checked directly
            if (cert.classes[0] && degeneracy(g, cert.classes[0]).k > d1 - 1)
              out.failures.push_back({g6, spec, "matamala_degeneracy_1", ""});
            if (cert.classes[1] && degeneracy(g, cert.classes[1]).k > d2 - 1)
              out.failures.push_back({g6, spec, "matamala_degeneracy_2", ""});
          }
        }
      } catch (const std::exception& e) {
        out.failures.push_back({g6, spec, "error", e.what()});
      }

      if (d1 > d2) continue;  // existence check is symmetric
      ++out.instances;
      auto joint_pred = [](int cap) {
        return [cap](const Graph& h, VertexSet s) {
          if (max_degree(h, s) > cap) return false;
          return s == 0 || degeneracy(h, s).k <= cap - 1;
        };
      };
      std::vector<std::function<bool(const Graph&, VertexSet)>> preds = {joint_pred(d1),
                                                                         joint_pred(d2)};
      if (!exact_partition_with(g, preds, {0, d1 == d2 ? 0 : 1}))
        out.failures.push_back({g6, spec, "bollobas_manvel", "no joint partition found"});
    }
  });
}

}  // namespace gfree
