#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ort/lll.hpp"

using namespace ort;

namespace {

const LLLParams kTuple1{{3, 4}, {1, 2}, {1, 4}, {0, 1}};
const LLLParams kTuple2{{2, 3}, {2, 3}, {1, 3}, {1, 6}};

// all 4-subsets {a<b} x {c<d} of [v] with every cross pair red
long long red_k22_oracle(const EdgeColoring& chi) {
  long long total = 0;
  const int v = chi.num_vertices();
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b)
      for (int c = b + 1; c <= v; ++c)
        for (int d = c + 1; d <= v; ++d)
          if (!chi.is_blue(a, c) && !chi.is_blue(a, d) && !chi.is_blue(b, c) &&
              !chi.is_blue(b, d))
            ++total;
  return total;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("2") == Rational(2, 1));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 3) <= Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parameter inequalities are exact") {
  CHECK(check_param_inequalities(kTuple1).ok);
  CHECK(check_param_inequalities(kTuple2).ok);
  const ParamCheck bad = check_param_inequalities({{1, 1}, {1, 1}, {1, 1}, {0, 1}});
  CHECK(!bad.ok);
  CHECK(bad.violated == std::vector<std::string>{"alpha + beta + gamma - delta <= 3/2",
                                                 "alpha + gamma <= 1"});
}

TEST_CASE("weights match their closed forms in log space") {
  for (double n : {10.0, 1000.0, 1e6}) {
    const LLLWeights w = lll_weights(kTuple1, n);
    CHECK(w.log_x == doctest::Approx(-std::log(4.0 * std::pow(n, 0.75))).epsilon(1e-12));
    CHECK(w.log_y == doctest::Approx(-2.0 * std::sqrt(n) * std::log2(n)).epsilon(1e-12));
    CHECK(w.log_z ==
          doctest::Approx(-21.0 * std::pow(n, 0.25) * std::pow(std::log2(n), 2))
              .epsilon(1e-12));
  }
}

TEST_CASE("margins positive at n = 10^6 for both accepted tuples") {
  for (const LLLParams& p : {kTuple1, kTuple2}) {
    const AuditReport r = audit_lll_conditions(p, 1e6);
    CHECK(r.margin_p > 0);
    CHECK(r.margin_q > 0);
    CHECK(r.margin_r > 0);
    CHECK(r.o1 >= 0);
    CHECK(r.o1 < 1);
  }
}

TEST_CASE("audit is deterministic") {
  const AuditReport a = audit_lll_conditions(kTuple1, 1e6);
  const AuditReport b = audit_lll_conditions(kTuple1, 1e6);
  CHECK(a.margin_p == b.margin_p);
  CHECK(a.margin_q == b.margin_q);
  CHECK(a.margin_r == b.margin_r);
}

TEST_CASE("crossover scan finds a threshold and stays positive past it") {
  for (const LLLParams& p : {kTuple1, kTuple2}) {
    const CrossoverReport r = crossover_scan(p);
    CHECK(r.found);
    CHECK(r.monotone_after_crossover);
    CHECK(r.crossover_n >= 2.0);
    CHECK(r.crossover_n <= 1e8);
    CHECK(audit_lll_conditions(p, r.crossover_n).all_positive());
  }
}

TEST_CASE("census: blue triangles and red K22 against brute force") {
  Rng rng(77, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int v = 5 + static_cast<int>(rng.below(4));
    const EdgeColoring chi = EdgeColoring::random(v, 0.5, rng);
    const ColoringCensus c = census_coloring(chi, 2, 0);
    CHECK(c.red_kss_exact);
    CHECK(c.red_kss == static_cast<double>(red_k22_oracle(chi)));
    // triangle count by independent triple loop
    long long tri = 0;
    for (int a = 1; a <= v; ++a)
      for (int b = a + 1; b <= v; ++b)
        for (int d = b + 1; d <= v; ++d)
          if (chi.is_blue(a, b) && chi.is_blue(a, d) && chi.is_blue(b, d)) ++tri;
    CHECK(c.blue_triangles == tri);
  }
}

TEST_CASE("sampled census recounts identically") {
  const LLLSample s = sample_lll_coloring(50, std::pow(50.0, 0.25), 9, 2);
  const ColoringCensus again = census_coloring(s.coloring, 2, 9);
  CHECK(s.census.blue_edges == again.blue_edges);
  CHECK(s.census.blue_triangles == again.blue_triangles);
  CHECK(s.census.red_kss == again.red_kss);
  // determinism across a fresh draw with the same seed
  const LLLSample t = sample_lll_coloring(50, std::pow(50.0, 0.25), 9, 2);
  CHECK(t.coloring == s.coloring);
}

TEST_CASE("sampled estimator reports a standard error for s > 3") {
  Rng rng(13, 0);
  const EdgeColoring chi = EdgeColoring::random(16, 0.3, rng);
  const ColoringCensus c = census_coloring(chi, 4, 5);
  CHECK(!c.red_kss_exact);
  CHECK(c.red_kss >= 0);
  CHECK(c.red_kss_stderr >= 0);
  const ColoringCensus again = census_coloring(chi, 4, 5);
  CHECK(c.red_kss == again.red_kss);  // seeded, reproducible
}

TEST_CASE("triangle rate at v = 3, p = 1/2 approaches 1/8") {
  long long tris = 0;
  const int trials = 20000;
  for (int seed = 0; seed < trials; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed), 1);
    tris += census_coloring(EdgeColoring::random(3, 0.5, rng), 1, 0).blue_triangles;
  }
  const double mean = static_cast<double>(tris) / trials;
  // sd of a Bernoulli(1/8) over 2*10^4 trials is ~0.0023
  CHECK(mean == doctest::Approx(0.125).epsilon(0.1));
}

TEST_CASE("blue edge count matches the binomial mean") {
  const int v = 30, trials = 10000;
  const double p = 0.5;
  long long blue = 0;
  for (int seed = 0; seed < trials; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed), 2);
    blue += EdgeColoring::random(v, p, rng).blue_count();
  }
  const double edges = v * (v - 1) / 2.0;
  const double mean = static_cast<double>(blue) / trials;
  const double se = std::sqrt(edges * p * (1 - p) / trials);
  CHECK(std::abs(mean - edges * p) < 5 * se);
}
