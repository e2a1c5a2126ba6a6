#include "ort/shift.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ort {

namespace {

// Longest strictly increasing subsequence of vals; returns chosen positions.
std::vector<int> lis_positions(const std::vector<int>& vals) {
  const int m = static_cast<int>(vals.size());
  std::vector<int> tails;        // positions of smallest tail per length
  std::vector<int> prev(m, -1);  // predecessor position in the chain
  for (int i = 0; i < m; ++i) {
    const auto it = std::lower_bound(
        tails.begin(), tails.end(), vals[i],
        [&](int pos, int val) { return vals[pos] < val; });
    if (it != tails.begin()) prev[i] = *(it - 1);
    if (it == tails.end())
      tails.push_back(i);
    else
      *it = i;
  }
  std::vector<int> chain;
  if (!tails.empty()) {
    for (int p = tails.back(); p != -1; p = prev[p]) chain.push_back(p);
    std::reverse(chain.begin(), chain.end());
  }
  return chain;
}

}  // namespace

ShiftResult shift_statistic(const Permutation& pi) {
  const int n = pi.size();
  ShiftResult best;
  if (n <= 1) return best;
  const Permutation inv = pi.inverse();
  for (int delta = 1; delta <= n - 1; ++delta) {
    // Pair for value v: (d, c) = (pi^-1(v), pi^-1(v + delta)).
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n - delta);
    for (int v = 1; v + delta <= n; ++v) pairs.emplace_back(inv(v), inv(v + delta));
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> cs(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) cs[i] = pairs[i].second;
    const std::vector<int> chain = lis_positions(cs);
    if (static_cast<int>(chain.size()) > best.l) {
      best.l = static_cast<int>(chain.size());
      best.witness.delta = delta;
      best.witness.c_indices.clear();
      best.witness.d_indices.clear();
      for (int p : chain) {
        best.witness.d_indices.push_back(pairs[p].first);
        best.witness.c_indices.push_back(pairs[p].second);
      }
    }
  }
  return best;
}

int shift_statistic_bruteforce(const Permutation& pi) {
  const int n = pi.size();
  if (n > 10) throw TooLarge("shift_statistic_bruteforce: n <= 10 required");
  if (n <= 1) return 0;
  const Permutation inv = pi.inverse();
  int best = 0;
  for (int delta = 1; delta <= n - 1; ++delta) {
    std::vector<std::pair<int, int>> pairs;  // (d, c), sorted by d
    for (int v = 1; v + delta <= n; ++v) pairs.emplace_back(inv(v), inv(v + delta));
    std::sort(pairs.begin(), pairs.end());
    const int m = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      int prev_c = 0, size = 0;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i)
        if (mask & (1u << i)) {
          if (pairs[i].second <= prev_c) ok = false;
          prev_c = pairs[i].second;
          ++size;
        }
      if (ok) best = std::max(best, size);
    }
  }
  return best;
}

namespace {

void finish_distribution(LDistribution& d) {
  long long total = 0;
  long long exceed = 0;
  double sum = 0;
  for (const auto& [l, cnt] : d.histogram) {
    total += cnt;
    sum += static_cast<double>(l) * static_cast<double>(cnt);
    if (static_cast<double>(l) > d.threshold) exceed += cnt;
    d.max = std::max(d.max, l);
  }
  d.samples = total;
  d.mean = total ? sum / static_cast<double>(total) : 0;
  d.exceedance_rate = total ? static_cast<double>(exceed) / static_cast<double>(total) : 0;
}

}  // namespace

LDistribution sample_L_distribution(int n, long long samples, std::uint64_t seed) {
  LDistribution d;
  d.n = n;
  d.seed = seed;
  d.threshold = 3.0 * std::sqrt(static_cast<double>(n));
  for (long long i = 0; i < samples; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    const Permutation pi = random_permutation(n, rng);
    d.histogram[shift_statistic(pi).l] += 1;
  }
  finish_distribution(d);
  return d;
}

LDistribution enumerate_L_distribution(int n) {
  if (n > 10) throw TooLarge("enumerate_L_distribution: n <= 10 required");
  LDistribution d;
  d.n = n;
  d.exhaustive = true;
  d.threshold = 3.0 * std::sqrt(static_cast<double>(n));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    d.histogram[shift_statistic(Permutation(images)).l] += 1;
  } while (std::next_permutation(images.begin(), images.end()));
  finish_distribution(d);
  return d;
}

}  // namespace ort
