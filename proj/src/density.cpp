#include "ort/density.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "ort/rect_count.hpp"

namespace ort {

namespace {

RectCounter permutation_counter(const Permutation& pi) {
  std::vector<std::pair<int, int>> points;
  points.reserve(pi.size());
  for (int i = 1; i <= pi.size(); ++i) points.emplace_back(i, pi(i));
  return RectCounter(pi.size(), pi.size(), points);
}

// Matching edges between arbitrary intervals C, D of [2n]; counter holds the
// permutation points (i, pi(i)).
int cross_count(const RectCounter& counter, int n, std::pair<int, int> c,
                std::pair<int, int> d) {
  const auto left = [&](std::pair<int, int> r) {
    return std::pair<int, int>{std::max(r.first, 1), std::min(r.second, n)};
  };
  const auto right = [&](std::pair<int, int> r) {
    return std::pair<int, int>{std::max(r.first, n + 1) - n, std::min(r.second, 2 * n) - n};
  };
  const auto [cl1, cl2] = left(c);
  const auto [cr1, cr2] = right(c);
  const auto [dl1, dl2] = left(d);
  const auto [dr1, dr2] = right(d);
  return counter.count(cl1, cl2, dr1, dr2) + counter.count(dl1, dl2, cr1, cr2);
}

}  // namespace

IntervalWitness min_cross_edges(const Permutation& pi, int min_len) {
  const int n = pi.size();
  if (min_len < 1 || min_len > n) throw std::invalid_argument("min_cross_edges: 1 <= L <= n");
  const RectCounter counter = permutation_counter(pi);
  IntervalWitness best;
  best.count = n + 1;
  for (int a = 1; a + min_len - 1 <= n; ++a)
    for (int b = 1; b + min_len - 1 <= n; ++b) {
      const int c = counter.count(a, a + min_len - 1, b, b + min_len - 1);
      if (c < best.count) {
        best.count = c;
        best.first_interval = {a, a + min_len - 1};
        best.second_interval = {n + b, n + b + min_len - 1};
        if (c == 0) return best;
      }
    }
  return best;
}

IntervalWitness min_cross_edges(const OrderedMatching& m, int min_len) {
  return min_cross_edges(permutation_from_matching(m), min_len);
}

IntervalWitness max_small_interval_edges(const Permutation& pi, int max_first_len,
                                         int second_len) {
  const int n = pi.size();
  const int total = 2 * n;
  if (max_first_len < 1 || second_len < 1 || second_len > total)
    throw std::invalid_argument("max_small_interval_edges: bad interval sizes");
  const RectCounter counter = permutation_counter(pi);
  IntervalWitness best;
  best.count = -1;
  for (int c1 = 1; c1 <= total; ++c1)
    for (int len = 1; len <= max_first_len && c1 + len - 1 <= total; ++len) {
      const std::pair<int, int> c{c1, c1 + len - 1};
      for (int d1 = 1; d1 + second_len - 1 <= total; ++d1) {
        const std::pair<int, int> d{d1, d1 + second_len - 1};
        if (d.first <= c.second && c.first <= d.second) continue;  // overlap
        const int cnt = cross_count(counter, n, c, d);
        if (cnt > best.count) {
          best.count = cnt;
          best.first_interval = c;
          best.second_interval = d;
        }
      }
    }
  return best;
}

IntervalWitness max_small_interval_edges(const OrderedMatching& m, int max_first_len,
                                         int second_len) {
  return max_small_interval_edges(permutation_from_matching(m), max_first_len, second_len);
}

namespace {

struct Thresholds {
  int min_len = 0;        // part 1: qualifying interval length
  int max_first_len = 0;  // part 2: cap on |C|
  int s_min = 0;          // part 2: smallest |D|
  double cap_per_unit = 0;
};

Thresholds thresholds_for(int n, bool natural_log) {
  const double logn = natural_log ? std::log(static_cast<double>(n))
                                  : std::log2(static_cast<double>(n));
  const double raw = 2.0 * std::sqrt(static_cast<double>(n) * logn);
  Thresholds t;
  t.min_len = static_cast<int>(std::ceil(raw));
  t.max_first_len = std::max(1, static_cast<int>(std::floor(raw)));
  t.s_min = static_cast<int>(std::ceil(raw));
  t.cap_per_unit = 12.0 * std::sqrt(logn / static_cast<double>(n));
  return t;
}

// Partner position of p in [2n] under the matching of pi.
int partner(const Permutation& pi, const Permutation& inv, int p) {
  const int n = pi.size();
  return p <= n ? n + pi(p) : inv(p - n);
}

// Largest value of edges(C, D) - cap(|D|) over windows D of size in
// [s_min, s_max] inside [lo, hi], where val[p] = inc[p] - cap_per_unit.
// Sliding-window minimum over the prefix sums.
double best_window_excess(const std::vector<double>& prefix, int lo, int hi, int s_min,
                          int s_max, std::pair<int, int>* where) {
  double best = -1e300;
  std::deque<int> mins;  // candidate window starts b-1, prefix increasing
  for (int e = lo + s_min - 1; e <= hi; ++e) {
    const int enter = e - s_min;          // b-1 becomes admissible
    const int leave = e - s_max - 1;      // b-1 below range
    if (enter >= lo - 1) {
      while (!mins.empty() && prefix[mins.back()] >= prefix[enter]) mins.pop_back();
      mins.push_back(enter);
    }
    while (!mins.empty() && mins.front() <= leave) mins.pop_front();
    if (mins.empty()) continue;
    const double excess = prefix[e] - prefix[mins.front()];
    if (excess > best) {
      best = excess;
      if (where) *where = {mins.front() + 1, e};
    }
  }
  return best;
}

struct Prop2Scan {
  bool ok = true;
  double worst_excess = -1e300;
  IntervalWitness worst;
};

// Property 2 over all C with |C| <= max_first_len and all admissible D.
// Scanning C at full length plus boundary-pinned prefixes/suffixes is
// exhaustive: any other violating C extends (away from D) to one of these.
Prop2Scan scan_prop2(const Permutation& pi, const Thresholds& th) {
  const int n = pi.size();
  const int total = 2 * n;
  const Permutation inv = pi.inverse();
  Prop2Scan res;

  // Violations need cap(s) < min(|C|, s); past that s the bound is free.
  const int s_cap_limit =
      static_cast<int>(std::ceil(static_cast<double>(th.max_first_len) / th.cap_per_unit));
  const int s_max = std::min(total, s_cap_limit);
  if (th.s_min > s_max) return res;

  std::vector<double> prefix(total + 1, 0.0);
  const auto scan_c = [&](int c1, int c2) {
    // prefix over val[p] = [partner(p) in C] - cap_per_unit
    for (int p = 1; p <= total; ++p) {
      const int q = partner(pi, inv, p);
      const double inc = (q >= c1 && q <= c2) ? 1.0 : 0.0;
      prefix[p] = prefix[p - 1] + inc - th.cap_per_unit;
    }
    std::pair<int, int> where;
    for (const auto& [lo, hi] : {std::pair<int, int>{1, c1 - 1}, {c2 + 1, total}}) {
      if (hi - lo + 1 < th.s_min) continue;
      const double excess = best_window_excess(prefix, lo, hi, th.s_min,
                                               std::min(s_max, hi - lo + 1), &where);
      if (excess > res.worst_excess) {
        res.worst_excess = excess;
        res.worst.first_interval = {c1, c2};
        res.worst.second_interval = where;
        const int s = where.second - where.first + 1;
        res.worst.count = static_cast<int>(std::llround(excess + th.cap_per_unit * s));
      }
      if (excess > 1e-9) res.ok = false;
    }
  };

  const int len = std::min(th.max_first_len, total);
  for (int c1 = 1; c1 + len - 1 <= total; ++c1) scan_c(c1, c1 + len - 1);
  for (int c = 1; c < len; ++c) {
    scan_c(1, c);              // prefix-pinned C shorter than the cap
    scan_c(total - c + 1, total);
  }
  return res;
}

DensityReport run_samples(int n, std::uint64_t seed, bool natural_log, bool exhaustive,
                          long long samples) {
  if (n < 4) throw std::invalid_argument("density experiment: n >= 4 required");
  DensityReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.exhaustive = exhaustive;
  rep.natural_log = natural_log;
  const Thresholds th = thresholds_for(n, natural_log);
  rep.min_len = th.min_len;
  rep.max_first_len = th.max_first_len;
  rep.cap_per_unit = th.cap_per_unit;

  long long prop1_fail = 0, prop2_fail = 0;
  double worst_excess = -1e300;
  int worst_min = n + 1;

  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);

  long long total = 0;
  for (long long i = 0;; ++i) {
    Permutation pi = Permutation::identity(n);
    if (exhaustive) {
      pi = Permutation(images);
    } else {
      if (i >= samples) break;
      Rng rng(seed, static_cast<std::uint64_t>(i));
      pi = random_permutation(n, rng);
    }

    DensitySampleRow row;
    row.sample_id = i;
    if (th.min_len <= n) {
      const IntervalWitness w = min_cross_edges(pi, th.min_len);
      row.worst_min_cross = w.count;
      if (w.count == 0) {
        row.prop1_ok = false;
        ++prop1_fail;
        if (!rep.worst_prop1) rep.worst_prop1 = w;
      }
      worst_min = std::min(worst_min, w.count);
    }
    const Prop2Scan p2 = scan_prop2(pi, th);
    row.worst_excess = p2.worst_excess;
    if (!p2.ok) {
      row.prop2_ok = false;
      ++prop2_fail;
    }
    if (p2.worst_excess > worst_excess) {
      worst_excess = p2.worst_excess;
      rep.worst_prop2 = p2.worst;
    }
    rep.rows.push_back(row);
    ++total;

    if (exhaustive && !std::next_permutation(images.begin(), images.end())) break;
  }
  rep.samples = total;
  rep.prop1_fail_rate = total ? static_cast<double>(prop1_fail) / total : 0;
  rep.prop2_fail_rate = total ? static_cast<double>(prop2_fail) / total : 0;
  return rep;
}

}  // namespace

DensityReport run_density_experiment(int n, long long samples, std::uint64_t seed,
                                     bool natural_log) {
  return run_samples(n, seed, natural_log, false, samples);
}

DensityReport enumerate_density_experiment(int n, bool natural_log) {
  if (n > 8) throw std::invalid_argument("exhaustive density limited to n <= 8");
  return run_samples(n, 0, natural_log, true, 0);
}

}  // namespace ort
