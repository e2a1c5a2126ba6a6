#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ort/core.hpp"

namespace ort {

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Witness for L(pi): increasing index sets C and D of equal size with
// pi(c_i) = pi(d_i) + delta. Empty with delta = 0 when L = 0.
struct ShiftWitness {
  int delta = 0;
  std::vector<int> c_indices;
  std::vector<int> d_indices;
};

struct ShiftResult {
  int l = 0;
  ShiftWitness witness;
};

// Largest k such that some C is a shift of some D in pi. For each delta the
// admissible pairs are (pi^-1(v+delta), pi^-1(v)); sorting by the d
// coordinate and taking the longest increasing subsequence of c coordinates
// gives the optimum. O(n^2 log n).
ShiftResult shift_statistic(const Permutation& pi);

// Exhaustive maximum over all deltas and pair subsets. Oracle; n <= 10.
int shift_statistic_bruteforce(const Permutation& pi);

struct LDistribution {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;        // enumerated all of S_n instead of sampling
  std::map<int, long long> histogram;
  double threshold = 0;           // 3 * sqrt(n)
  double exceedance_rate = 0;     // fraction with L > threshold
  double mean = 0;
  int max = 0;
};

// Empirical distribution of L over uniform random permutations, seeded and
// deterministic. Trial i uses substream (seed, i).
LDistribution sample_L_distribution(int n, long long samples, std::uint64_t seed);

// Exact distribution of L over all of S_n (n <= 10).
LDistribution enumerate_L_distribution(int n);

}  // namespace ort
