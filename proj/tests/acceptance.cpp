// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavier sweeps than the unit suites; pinned tolerances.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "ort/constructions.hpp"
#include "ort/core.hpp"
#include "ort/density.hpp"
#include "ort/lll.hpp"
#include "ort/ramsey.hpp"
#include "ort/scan.hpp"
#include "ort/shift.hpp"

using namespace ort;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " — " << detail
            << std::endl;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
void for_each_permutation(int n, F f) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do f(Permutation(images));
  while (std::next_permutation(images.begin(), images.end()));
}

template <typename F>
void for_each_matching(int max_vertices, F f) {
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> edges;
    std::vector<bool> used(n + 1, false);
    const auto rec = [&](auto&& self, int v) -> void {
      if (v > n) {
        f(OrderedMatching(OrderedGraph(n, edges)));
        return;
      }
      if (used[v]) {
        self(self, v + 1);
        return;
      }
      self(self, v + 1);
      for (int w = v + 1; w <= n; ++w)
        if (!used[w]) {
          used[v] = used[w] = true;
          edges.push_back({v, w});
          self(self, v + 1);
          edges.pop_back();
          used[v] = used[w] = false;
        }
    };
    rec(rec, 1);
  }
}

// 1. matching <-> permutation bijection, exhaustive over S_n, n <= 7
void criterion1() {
  const auto t0 = Clock::now();
  long long cases = 0;
  bool ok = true;
  for (int n = 1; n <= 7 && ok; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      const OrderedMatching m = matching_from_permutation(pi);
      if (!m.is_perfect_bipartite() || !(permutation_from_matching(m) == pi)) ok = false;
      ++cases;
    });
  const double dt = seconds_since(t0);
  report(1, ok && dt < 5.0,
         "correspondence round-trip, " + std::to_string(cases) + " cases in " +
             std::to_string(dt) + " s (limit 5 s)");
}

// 2. shift statistic DP vs brute force: all of S_n for n <= 7, 10^4 random
void criterion2() {
  const auto t0 = Clock::now();
  bool ok = true;
  long long cases = 0;
  for (int n = 1; n <= 7 && ok; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      if (shift_statistic(pi).l != shift_statistic_bruteforce(pi)) ok = false;
      ++cases;
    });
  Rng rng(2026, 0);
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Permutation pi = random_permutation(n, rng);
    if (shift_statistic(pi).l != shift_statistic_bruteforce(pi)) ok = false;
    ++cases;
  }
  const double dt = seconds_since(t0);
  report(2, ok && dt < 60.0,
         "shift statistic DP == brute force, " + std::to_string(cases) + " cases in " +
             std::to_string(dt) + " s (limit 60 s)");
}

// 3. thread success iff red copy in its rows, all 2^16 matrices at N = 4
void criterion3() {
  bool ok = true;
  long long disagreements = 0;
  std::vector<Permutation> perms;
  for_each_permutation(2, [&](const Permutation& pi) { perms.push_back(pi); });
  for_each_permutation(3, [&](const Permutation& pi) { perms.push_back(pi); });
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    ColorMatrix a(4);
    for (int bit = 0; bit < 16; ++bit)
      if (mask >> bit & 1u) a.set(bit / 4 + 1, bit % 4 + 1, CellColor::Blue);
    for (const Permutation& pi : perms) {
      const int n = pi.size();
      const int threads = 4 - n + 1;  // all valid offsets at once
      const ScanTrace tr = multi_thread_scan(a, pi, threads);
      for (int t = 0; t < threads; ++t)
        if (tr.threads[t].success != red_copy_in_rows(a, pi, t)) {
          ok = false;
          ++disagreements;
        }
    }
  }
  report(3, ok,
         "scan success iff red copy in rows, 65536 matrices x 8 permutations, " +
             std::to_string(disagreements) + " disagreements");
}

// 4. cross-thread segment intersections <= L(pi), 10^4 random instances
void criterion4() {
  Rng rng(44, 0);
  long long violations = 0, checked = 0;
  int instances = 0;
  while (instances < 10000) {
    const int n = 2 + static_cast<int>(rng.below(7));  // n <= 8
    const int big = n + 2 + static_cast<int>(rng.below(40 - n - 1));  // N <= 40
    const double blue_prob = 0.5 + 0.05 * static_cast<double>(rng.below(10));
    const ColorMatrix a = ColorMatrix::random(big, blue_prob, rng);
    const Permutation pi = random_permutation(n, rng);
    const int threads = 2 + static_cast<int>(rng.below(big - n));
    const ScanTrace tr = multi_thread_scan(a, pi, threads);
    ++instances;
    const int l = shift_statistic(pi).l;
    for (int t = 0; t < threads; ++t) {
      if (tr.threads[t].success) continue;
      for (int t2 = 0; t2 < threads; ++t2) {
        if (t2 == t || tr.threads[t2].success) continue;
        ++checked;
        if (cross_thread_intersections(tr, t, t2) > l) ++violations;
      }
    }
  }
  report(4, violations == 0,
         "segment-intersection bound, 10^4 instances, " + std::to_string(checked) +
             " failed thread pairs, " + std::to_string(violations) + " violations");
}

// 5. constructions: densities, superblock isomorphy, interval chromatic number
void criterion5() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  for (int t = 2; t <= 8 && ok; ++t)
    if (!verify_M_t_density(t).ok) {
      ok = false;
      why = "grid density failed at t=" + std::to_string(t);
    }
  for (int k = 3; k <= 4 && ok; ++k)
    for (int t = 2; t <= 6 && ok; ++t) {
      const Lemma6Report rep = verify_lemma6(k, t);
      if (!rep.part_a || !rep.part_b) {
        ok = false;
        why = "block density failed at k=" + std::to_string(k) + ", t=" + std::to_string(t);
      }
      if (interval_chromatic_number(build_M_kt(k, t).matching.graph()).chi != k) {
        ok = false;
        why = "chi != k at k=" + std::to_string(k) + ", t=" + std::to_string(t);
      }
    }
  for (int k = 3; k <= 4 && ok; ++k)
    for (int t = 1; t <= 4 && ok; ++t) {
      const MktResult r = build_M_kt(k, t);
      const OrderedGraph mt = build_M_t(t).matching.graph();
      for (int i = 1; i <= k && ok; ++i)
        for (int j = i + 1; j <= k && ok; ++j) {
          std::vector<int> verts;
          for (const auto& [lo, hi] : r.layout.superblock(i, j))
            for (int v = lo; v <= hi; ++v) verts.push_back(v);
          for (const auto& [lo, hi] : r.layout.superblock(j, i))
            for (int v = lo; v <= hi; ++v) verts.push_back(v);
          std::sort(verts.begin(), verts.end());
          if (!(r.matching.graph().induced(verts) == mt)) {
            ok = false;
            why = "superblock pair not a grid-matching copy";
          }
        }
    }
  const double dt = seconds_since(t0);
  report(5, ok && dt < 120.0,
         ok ? "construction sweep in " + std::to_string(dt) + " s (limit 120 s)" : why);
}

// 6. exact values and specialized-search equivalence
void criterion6() {
  const auto t0 = Clock::now();
  const OrderedGraph edge = OrderedGraph::single_edge();
  const OrderedGraph k3 = OrderedGraph::complete(3);
  bool ok = true;
  std::string why;
  if (ordered_ramsey(edge, edge, 4).value != 2) {
    ok = false;
    why = "r(edge,edge) != 2";
  }
  if (ok && ordered_ramsey(edge, k3, 6).value != 3) {
    ok = false;
    why = "r(edge,K3) != 3";
  }
  if (ok && ordered_ramsey(k3, k3, 7).value != 6) {
    ok = false;
    why = "r(K3,K3) != 6";
  }
  long long cases = 0;
  if (ok) {
    for_each_matching(6, [&](const OrderedMatching& m) {
      if (!ok) return;
      for (int n = 1; n <= 6; ++n) {
        const ArrowingResult gen = arrows(n, m.graph(), k3);
        const ArrowingResult spec = triangle_free_blue_search(n, m.graph());
        ++cases;
        if (gen.status != spec.status) {
          ok = false;
          why = "specialized search disagrees at N=" + std::to_string(n);
          return;
        }
      }
    });
  }
  const double dt = seconds_since(t0);
  report(6, ok && dt < 600.0,
         ok ? "exact values + " + std::to_string(cases) + " cross-solver cases in " +
                  std::to_string(dt) + " s (limit 600 s)"
            : why);
}

// Two ordered cliques with a complete bipartite blue graph between them:
// triangle-free blue, and the red side cannot host a perfect-bipartite
// matching on 2n vertices when both cliques are smaller than 2n (every gap
// in the vertex order cuts some matching edge).
EdgeColoring two_clique_coloring(int n_vertices, int split) {
  EdgeColoring chi(n_vertices);
  for (int u = 1; u <= split; ++u)
    for (int v = split + 1; v <= n_vertices; ++v) chi.set(u, v, CellColor::Blue);
  return chi;
}

// 7. computed r(M, K3) below the trichotomy threshold; closed-form value
void criterion7() {
  const OrderedGraph k3 = OrderedGraph::complete(3);
  bool ok = theorem5_bound(16, 12) == 951;
  std::string why = ok ? "" : "bound(16,12) != 951";
  // 12 = ceil(3 sqrt(16)): the composed bound 4n(sqrt(3 n^{3/2}) + 1) at n=16
  int resolved = 0, lower_bounded = 0;
  for (int n = 1; n <= 4 && ok; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      if (!ok) return;
      const OrderedMatching m = matching_from_permutation(pi);
      const int l = std::max(1, shift_statistic(pi).l);
      const long long bound = theorem5_bound(n, l);
      if (n <= 3) {
        // exact value, searched all the way to the threshold if need be
        const RamseyResult r =
            ordered_ramsey(m.graph(), k3, static_cast<int>(bound), kDefaultNodeBudget, true);
        if (!r.known) {
          ok = false;
          why = "r(M, K3) exceeds the threshold at n=" + std::to_string(n);
          return;
        }
        if (r.value > bound) {
          ok = false;
          why = "computed value exceeds the threshold at n=" + std::to_string(n);
          return;
        }
        ++resolved;
      } else {
        // n = 4: the threshold (>= 62) dwarfs the feasible search ceiling,
        // so the exact value stays open here; the two-clique coloring pins
        // r >= 4n - 1 = 15, far below the threshold, and no desk-scale
        // counterexample can exist. Verified rather than assumed:
        const EdgeColoring chi = two_clique_coloring(4 * n - 2, 2 * n - 1);
        if (!certificate_is_good(chi, m.graph(), k3)) {
          ok = false;
          why = "two-clique coloring failed to verify at n=4";
          return;
        }
        if (bound < 4 * n - 1) {
          ok = false;
          why = "threshold unexpectedly below the generic lower bound";
          return;
        }
        ++lower_bounded;
      }
    });
  report(7, ok,
         ok ? "trichotomy threshold consistent: " + std::to_string(resolved) +
                  " exact values (2n <= 6), " + std::to_string(lower_bounded) +
                  " verified lower bounds (2n = 8, threshold beyond desk scale)"
            : why);
}

// 8. parameter inequalities + audit margins at n = 10^6
void criterion8() {
  const LLLParams tuple1{{3, 4}, {1, 2}, {1, 4}, {0, 1}};
  const LLLParams tuple2{{2, 3}, {2, 3}, {1, 3}, {1, 6}};
  const LLLParams bad{{1, 1}, {1, 1}, {1, 1}, {0, 1}};
  bool ok = check_param_inequalities(tuple1).ok && check_param_inequalities(tuple2).ok &&
            !check_param_inequalities(bad).ok;
  std::string detail = "inequalities exact";
  if (ok) {
    for (const LLLParams& p : {tuple1, tuple2}) {
      const AuditReport a = audit_lll_conditions(p, 1e6);
      const AuditReport b = audit_lll_conditions(p, 1e6);
      const CrossoverReport c = crossover_scan(p);
      if (!a.all_positive() || !c.found) ok = false;
      if (a.margin_p != b.margin_p || a.margin_q != b.margin_q || a.margin_r != b.margin_r)
        ok = false;
      if (ok)
        detail += "; crossover n = " + std::to_string(c.crossover_n);
    }
    detail += "; margins positive at n = 10^6, deterministic";
  }
  report(8, ok, detail);
}

// 9. density Monte Carlo at n = 2000 plus exhaustive n <= 6
void criterion9() {
  const auto t0 = Clock::now();
  const DensityReport rep = run_density_experiment(2000, 200, 0);
  bool ok = rep.prop1_fail_rate <= 0.05 && rep.prop2_fail_rate <= 0.05;
  std::string why = ok ? "" : "failure rate above 5%";
  for (int n = 4; n <= 6 && ok; ++n) {
    const DensityReport ex = enumerate_density_experiment(n);
    long long idx = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
      if (!ok) return;
      // independent recomputation with the exact interval scanners
      bool p1 = true;
      if (ex.min_len <= n) p1 = min_cross_edges(pi, ex.min_len).count > 0;
      bool p2 = true;
      for (int s = ex.min_len; s <= 2 * n && p2; ++s)
        if (max_small_interval_edges(pi, ex.max_first_len, s).count >
            ex.cap_per_unit * s + 1e-9)
          p2 = false;
      if (ex.rows[idx].prop1_ok != p1 || ex.rows[idx].prop2_ok != p2) {
        ok = false;
        why = "enumeration mode disagrees with recomputation at n=" + std::to_string(n);
      }
      ++idx;
    });
  }
  const double dt = seconds_since(t0);
  report(9, ok && dt < 600.0,
         ok ? "fail rates " + std::to_string(rep.prop1_fail_rate) + " / " +
                  std::to_string(rep.prop2_fail_rate) + " (cap 0.05), exhaustive n <= 6 agrees, " +
                  std::to_string(dt) + " s (limit 600 s)"
            : why);
}

// 10. L(pi) concentration at n = 400 and the exact S_4 distribution
void criterion10() {
  const LDistribution d = sample_L_distribution(400, 1000, 0);
  bool ok = d.exceedance_rate <= 0.01 && d.threshold == 60.0;
  std::string why = ok ? "" : "exceedance above 1%";
  if (ok) {
    const LDistribution exact = enumerate_L_distribution(4);
    std::map<int, long long> expect;
    for_each_permutation(4, [&](const Permutation& pi) {
      ++expect[shift_statistic_bruteforce(pi)];
    });
    if (exact.histogram != expect) {
      ok = false;
      why = "S_4 enumeration disagrees with brute force";
    }
  }
  report(10, ok,
         ok ? "exceedance of L > 60 at n=400: " + std::to_string(d.exceedance_rate) +
                  " (cap 0.01); S_4 distribution exact"
            : why);
}

// 11. byte-identical CLI reports for fixed seeds
void criterion11() {
  const std::vector<std::string> cmds = {
      "bound --n 16 --ell 12",
      "lstat --n 50 --samples 100 --seed 3",
      "density --n 40 --samples 10 --seed 1",
      "lll sample --v 40 --gamma-scale 2.0 --seed 8",
      "construct m-kt --k 3 --t 3 --format json",
  };
  bool ok = true;
  std::string why;
  for (const std::string& args : cmds) {
    const std::string cmd = std::string(ORT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string outs[2];
    for (int run = 0; run < 2 && ok; ++run) {
      FILE* pipe = popen(cmd.c_str(), "r");
      if (!pipe) {
        ok = false;
        why = "cannot launch the CLI";
        break;
      }
      char buf[4096];
      std::size_t got;
      while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) outs[run].append(buf, got);
      if (pclose(pipe) != 0) {
        ok = false;
        why = "CLI run failed: " + args;
      }
    }
    if (ok && (outs[0] != outs[1] || outs[0].empty())) {
      ok = false;
      why = "outputs differ for: " + args;
    }
    if (!ok) break;
  }
  report(11, ok, ok ? "reruns byte-identical for " + std::to_string(cmds.size()) + " invocations"
                    : why);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures == 0)
    std::cout << "all 11 criteria passed" << std::endl;
  else
    std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
