#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ort/coloring.hpp"

namespace ort {

struct NumericInstability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational, normalized with positive denominator. Verdicts on the
// parameter inequalities never touch floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational parse(const std::string& text);  // "3/4" or "0.75"-free "3"

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend bool operator<=(Rational a, Rational b);
  bool operator==(const Rational& o) const = default;
};

struct LLLParams {
  Rational alpha, beta, gamma, delta;
};

struct ParamCheck {
  bool ok = false;
  std::vector<std::string> violated;
};

// alpha + beta + gamma - delta <= 3/2, beta <= 2 gamma, alpha + gamma <= 1;
// evaluated exactly.
ParamCheck check_param_inequalities(const LLLParams& p);

// Local-lemma weights at scale n, stored as natural logs. "log n" inside the
// paper-style exponents is base 2; the outer exponentials are base e.
struct LLLWeights {
  double log_x = 0;  // x = 1/(4 n^{3 gamma})
  double log_y = 0;  // y = exp(-2 n^beta log2 n)
  double log_z = 0;  // z = exp(-21 n^{1-alpha} log2^2 n)
};

LLLWeights lll_weights(const LLLParams& p, double n);

// Log-scale sizes of the three event families (upper bounds).
struct EventBudget {
  double log_ip = 0;  // <= 3 beta ln n
  double log_iq = 0;  // <= n^beta log2 n
  double log_ir = 0;  // <= 20 n^{1-alpha} log2^2 n
};

EventBudget event_budget(const LLLParams& p, double n);

// Signed margins (RHS of the sufficient condition minus LHS, on the log
// scale) for the three event families, with the 1 - o(1) factor evaluated
// concretely as exp(-y|I_Q| - z|I_R|) and folded in.
struct AuditReport {
  double margin_p = 0;
  double margin_q = 0;
  double margin_r = 0;
  double o1 = 0;  // y|I_Q| + z|I_R|

  bool all_positive() const { return margin_p > 0 && margin_q > 0 && margin_r > 0; }
};

AuditReport audit_lll_conditions(const LLLParams& p, double n);

struct CrossoverReport {
  bool found = false;
  double crossover_n = 0;            // first grid point with all margins positive
  bool monotone_after_crossover = false;  // no sign change later in the grid
  std::vector<double> grid;
};

// Log-spaced scan of n in [2, 10^8].
CrossoverReport crossover_scan(const LLLParams& p);

struct ColoringCensus {
  int v = 0;
  double blue_prob = 0;
  long long blue_edges = 0;
  long long blue_triangles = 0;  // exact
  int s = 0;
  bool red_kss_exact = false;
  double red_kss = 0;            // count (exact) or estimate
  double red_kss_stderr = 0;     // 0 when exact
};

// Random coloring of K^<_v, each edge blue independently with probability
// 1/(2 * gamma_scale), plus a census of the bad events. Red K^<_{s,s}
// occurrences are counted exactly for s <= 3 and estimated by seeded
// subset sampling above that.
struct LLLSample {
  EdgeColoring coloring;
  ColoringCensus census;
};

LLLSample sample_lll_coloring(int v, double gamma_scale, std::uint64_t seed, int s = 2);

// Re-census an existing coloring (the recount oracle for the sampler).
ColoringCensus census_coloring(const EdgeColoring& chi, int s, std::uint64_t seed);

}  // namespace ort
