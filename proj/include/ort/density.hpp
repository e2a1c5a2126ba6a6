#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ort/core.hpp"

namespace ort {

struct IntervalWitness {
  std::pair<int, int> first_interval{0, 0};
  std::pair<int, int> second_interval{0, 0};
  int count = 0;
};

// Exact minimum edge count over interval pairs I in [n], J in {n+1,..,2n},
// each of length >= min_len. The minimum is attained at length exactly
// min_len, so only those pairs are scanned. Requires min_len <= n.
IntervalWitness min_cross_edges(const Permutation& pi, int min_len);
IntervalWitness min_cross_edges(const OrderedMatching& m, int min_len);

// Exact maximum edge count over disjoint interval pairs C, D anywhere in
// [2n] with |C| <= max_first_len and |D| = second_len.
IntervalWitness max_small_interval_edges(const Permutation& pi, int max_first_len,
                                         int second_len);
IntervalWitness max_small_interval_edges(const OrderedMatching& m, int max_first_len,
                                         int second_len);

struct DensitySampleRow {
  long long sample_id = 0;
  bool prop1_ok = true;
  bool prop2_ok = true;
  int worst_min_cross = 0;   // minimum over qualifying pairs (property 1)
  double worst_excess = 0;   // max of edges - cap over qualifying pairs (property 2)
};

struct DensityReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool natural_log = false;  // default: base-2 logs in the thresholds
  int min_len = 0;           // ceil(2 sqrt(n log n))
  int max_first_len = 0;     // floor(2 sqrt(n log n))
  double cap_per_unit = 0;   // 12 sqrt(log n / n)
  double prop1_fail_rate = 0;
  double prop2_fail_rate = 0;
  std::optional<IntervalWitness> worst_prop1;  // a no-edge qualifying pair
  std::optional<IntervalWitness> worst_prop2;  // the pair with largest excess
  std::vector<DensitySampleRow> rows;
};

// Monte Carlo check of both density properties of uniform random
// perfect-bipartite matchings at the stated thresholds. Sample i uses the
// permutation drawn from substream (seed, i).
DensityReport run_density_experiment(int n, long long samples, std::uint64_t seed,
                                     bool natural_log = false);

// Exhaustive version over all of S_n (n <= 8).
DensityReport enumerate_density_experiment(int n, bool natural_log = false);

}  // namespace ort
