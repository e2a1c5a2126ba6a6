#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ort/density.hpp"

using namespace ort;

namespace {

int cross_oracle(const Permutation& pi, std::pair<int, int> c, std::pair<int, int> d) {
  const int n = pi.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int u = i, v = n + pi(i);
    const bool uc = u >= c.first && u <= c.second, vd = v >= d.first && v <= d.second;
    const bool ud = u >= d.first && u <= d.second, vc = v >= c.first && v <= c.second;
    if ((uc && vd) || (ud && vc)) ++count;
  }
  return count;
}

template <typename F>
void for_each_permutation(int n, F f) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do f(Permutation(images));
  while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

TEST_CASE("minimum cross edges: identity cases") {
  const Permutation id = Permutation::identity(5);
  CHECK(min_cross_edges(id, 1).count == 0);
  CHECK(min_cross_edges(id, 5).count == 5);
  CHECK(min_cross_edges(matching_from_permutation(id), 5).count == 5);
  CHECK_THROWS_AS(min_cross_edges(id, 6), std::invalid_argument);
}

TEST_CASE("minimum cross edges equals the full enumeration, all lengths >= L") {
  Rng rng(19, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(5));
    const Permutation pi = random_permutation(n, rng);
    for (int len = 1; len <= n; ++len) {
      const IntervalWitness w = min_cross_edges(pi, len);
      int best = n + 1;
      for (int a = 1; a <= n; ++a)
        for (int a2 = a + len - 1; a2 <= n; ++a2)
          for (int b = n + 1; b <= 2 * n; ++b)
            for (int b2 = b + len - 1; b2 <= 2 * n; ++b2)
              best = std::min(best, cross_oracle(pi, {a, a2}, {b, b2}));
      CHECK(w.count == best);
      CHECK(cross_oracle(pi, w.first_interval, w.second_interval) == w.count);
    }
  }
}

TEST_CASE("monotonicity in the length threshold") {
  Rng rng(29, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(6));
    const Permutation pi = random_permutation(n, rng);
    int prev = -1;
    for (int len = 1; len <= n; ++len) {
      const int cur = min_cross_edges(pi, len).count;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("maximum small-interval edges against the quadratic oracle") {
  Rng rng(37, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(5));
    const Permutation pi = random_permutation(n, rng);
    const int len_c = 1 + static_cast<int>(rng.below(4));
    const int s = 1 + static_cast<int>(rng.below(2 * n - 1));
    const IntervalWitness w = max_small_interval_edges(pi, len_c, s);
    int best = -1;
    for (int c1 = 1; c1 <= 2 * n; ++c1)
      for (int len = 1; len <= len_c && c1 + len - 1 <= 2 * n; ++len)
        for (int d1 = 1; d1 + s - 1 <= 2 * n; ++d1) {
          if (d1 <= c1 + len - 1 && c1 <= d1 + s - 1) continue;
          best = std::max(best, cross_oracle(pi, {c1, c1 + len - 1}, {d1, d1 + s - 1}));
        }
    CHECK(w.count == best);
    if (best >= 0)
      CHECK(cross_oracle(pi, w.first_interval, w.second_interval) == w.count);
  }
  CHECK(max_small_interval_edges(Permutation::identity(6), 1, 1).count <= 1);
  // aligned halves of the identity: k against k
  CHECK(max_small_interval_edges(Permutation::identity(6), 4, 4).count == 4);
}

TEST_CASE("experiment is seeded and deterministic") {
  const DensityReport a = run_density_experiment(40, 10, 5);
  const DensityReport b = run_density_experiment(40, 10, 5);
  CHECK(a.samples == 10);
  CHECK(a.prop1_fail_rate == b.prop1_fail_rate);
  CHECK(a.prop2_fail_rate == b.prop2_fail_rate);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].worst_min_cross == b.rows[i].worst_min_cross);
    CHECK(a.rows[i].worst_excess == b.rows[i].worst_excess);
  }
}

TEST_CASE("enumeration mode matches per-permutation recomputation at n = 4") {
  const DensityReport rep = enumerate_density_experiment(4);
  CHECK(rep.exhaustive);
  CHECK(rep.samples == 24);
  // thresholds: 2 sqrt(4 log2 4) = 2 sqrt(8) = 5.65...; no interval of
  // length 6 fits in [4], so property 1 is vacuous
  CHECK(rep.min_len == 6);
  CHECK(rep.prop1_fail_rate == 0);

  // property 2 re-derived per permutation with the exact scanner
  long long idx = 0;
  double cap = rep.cap_per_unit;
  for_each_permutation(4, [&](const Permutation& pi) {
    bool viol = false;
    for (int s = rep.min_len; s <= 8 && !viol; ++s) {
      const IntervalWitness w = max_small_interval_edges(pi, rep.max_first_len, s);
      if (w.count > cap * s + 1e-9) viol = true;
    }
    CHECK(rep.rows[idx].prop2_ok == !viol);
    ++idx;
  });
  CHECK(rep.prop2_fail_rate == 0);  // cap(6) = 50.9 can never be exceeded here
}

TEST_CASE("violation verdicts agree with the direct scan on small random cases") {
  // n = 9: min_len = ceil(2 sqrt(9 log2 9)) = 11 > 9 so prop1 is vacuous,
  // but prop2 windows exist inside [18]
  const DensityReport rep = run_density_experiment(9, 30, 3);
  Rng rng_check(0, 0);
  for (const DensitySampleRow& row : rep.rows) {
    Rng rng(3, static_cast<std::uint64_t>(row.sample_id));
    const Permutation pi = random_permutation(9, rng);
    bool viol = false;
    for (int s = rep.min_len; s <= 18 && !viol; ++s) {
      const IntervalWitness w = max_small_interval_edges(pi, rep.max_first_len, s);
      if (w.count > rep.cap_per_unit * s + 1e-9) viol = true;
    }
    CHECK(row.prop2_ok == !viol);
  }
}

TEST_CASE("witnesses in the report re-verify") {
  const DensityReport rep = run_density_experiment(60, 20, 11);
  if (rep.worst_prop1) {
    Rng rng(11, 0);
    // the stored witness belongs to some sample; re-check only shape here
    CHECK(rep.worst_prop1->count == 0);
  }
  CHECK(rep.min_len == static_cast<int>(std::ceil(2.0 * std::sqrt(60.0 * std::log2(60.0)))));
  CHECK(rep.cap_per_unit ==
        doctest::Approx(12.0 * std::sqrt(std::log2(60.0) / 60.0)).epsilon(1e-12));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_density_experiment(9), std::invalid_argument);
  CHECK_THROWS_AS(run_density_experiment(3, 1, 0), std::invalid_argument);
}
