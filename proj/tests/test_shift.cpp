#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ort/shift.hpp"

using namespace ort;

namespace {

void check_witness(const Permutation& pi, const ShiftResult& r) {
  const auto& w = r.witness;
  REQUIRE(w.c_indices.size() == w.d_indices.size());
  CHECK(static_cast<int>(w.c_indices.size()) == r.l);
  if (r.l == 0) return;
  CHECK(w.delta > 0);
  for (std::size_t i = 0; i < w.c_indices.size(); ++i) {
    CHECK(pi(w.c_indices[i]) == pi(w.d_indices[i]) + w.delta);
    if (i > 0) {
      CHECK(w.c_indices[i - 1] < w.c_indices[i]);
      CHECK(w.d_indices[i - 1] < w.d_indices[i]);
    }
  }
}

Permutation reverse_complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[n - i] = n + 1 - pi(i);
  return Permutation(std::move(images));
}

template <typename F>
void for_each_permutation(int n, F f) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do f(Permutation(images));
  while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

TEST_CASE("shift statistic examples") {
  CHECK(shift_statistic(Permutation::identity(5)).l == 4);
  CHECK(shift_statistic(Permutation({2, 1})).l == 1);
  CHECK(shift_statistic(Permutation({1})).l == 0);
  CHECK(shift_statistic(Permutation({3, 2, 1})).l == 2);
  CHECK(shift_statistic(Permutation::identity(3)).l == 2);
  CHECK(shift_statistic_bruteforce(Permutation({3, 2, 1})) == 2);
  CHECK(shift_statistic_bruteforce(Permutation({1})) == 0);
}

TEST_CASE("brute force guard") {
  CHECK_THROWS_AS(shift_statistic_bruteforce(Permutation::identity(11)), TooLarge);
}

TEST_CASE("dp equals brute force exhaustively, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& pi) {
      const ShiftResult r = shift_statistic(pi);
      CHECK(r.l == shift_statistic_bruteforce(pi));
      check_witness(pi, r);
    });
}

TEST_CASE("dp equals brute force on random permutations, n <= 10") {
  Rng rng(3, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Permutation pi = random_permutation(n, rng);
    const ShiftResult r = shift_statistic(pi);
    CHECK(r.l == shift_statistic_bruteforce(pi));
    check_witness(pi, r);
  }
}

TEST_CASE("reverse-complement symmetry and bounds") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [n](const Permutation& pi) {
      const int l = shift_statistic(pi).l;
      CHECK(l == shift_statistic(reverse_complement(pi)).l);
      CHECK(l <= n - 1);
    });
  for (int n = 1; n <= 12; ++n)
    CHECK(shift_statistic(Permutation::identity(n)).l == n - 1);
}

TEST_CASE("sampled distribution is seeded and deterministic") {
  const LDistribution a = sample_L_distribution(30, 200, 42);
  const LDistribution b = sample_L_distribution(30, 200, 42);
  CHECK(a.histogram == b.histogram);
  CHECK(a.mean == b.mean);
  CHECK(a.exceedance_rate == b.exceedance_rate);
  const LDistribution c = sample_L_distribution(30, 200, 43);
  CHECK(a.histogram != c.histogram);  // different seed, different draw

  long long total = 0;
  for (const auto& [v, cnt] : a.histogram) total += cnt;
  CHECK(total == 200);
}

TEST_CASE("n = 1 distribution is all zero") {
  const LDistribution d = sample_L_distribution(1, 5, 0);
  CHECK(d.histogram == std::map<int, long long>{{0, 5}});
  CHECK(d.exceedance_rate == 0);
  CHECK(d.max == 0);
}

TEST_CASE("enumeration over S_4 matches brute force") {
  const LDistribution d = enumerate_L_distribution(4);
  CHECK(d.exhaustive);
  CHECK(d.samples == 24);
  std::map<int, long long> expect;
  for_each_permutation(4, [&expect](const Permutation& pi) {
    ++expect[shift_statistic_bruteforce(pi)];
  });
  CHECK(d.histogram == expect);
}
