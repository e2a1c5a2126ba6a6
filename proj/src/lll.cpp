#include "ort/lll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ort {

namespace {

long long checked_gcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b); }

double pow_checked(double base, double exp, const char* what) {
  const double r = std::pow(base, exp);
  if (!std::isfinite(r)) throw NumericInstability(std::string("term overflowed: ") + what);
  return r;
}

double exp_clamped(double log_value) {
  return log_value < -700.0 ? 0.0 : std::exp(log_value);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (const long long g = checked_gcd(num, den); g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text), 1);
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

ParamCheck check_param_inequalities(const LLLParams& p) {
  ParamCheck res;
  const Rational three_half(3, 2), one(1, 1);
  if (!(p.alpha + p.beta + p.gamma - p.delta <= three_half))
    res.violated.push_back("alpha + beta + gamma - delta <= 3/2");
  if (!(p.beta <= p.gamma + p.gamma))
    res.violated.push_back("beta <= 2*gamma");
  if (!(p.alpha + p.gamma <= one)) res.violated.push_back("alpha + gamma <= 1");
  res.ok = res.violated.empty();
  return res;
}

LLLWeights lll_weights(const LLLParams& p, double n) {
  const double log2n = std::log2(n);
  LLLWeights w;
  w.log_x = -std::log(4.0) - 3.0 * p.gamma.value() * std::log(n);
  w.log_y = -2.0 * pow_checked(n, p.beta.value(), "n^beta") * log2n;
  w.log_z = -21.0 * pow_checked(n, 1.0 - p.alpha.value(), "n^(1-alpha)") * log2n * log2n;
  return w;
}

EventBudget event_budget(const LLLParams& p, double n) {
  const double log2n = std::log2(n);
  EventBudget b;
  b.log_ip = 3.0 * p.beta.value() * std::log(n);
  b.log_iq = pow_checked(n, p.beta.value(), "n^beta") * log2n;
  b.log_ir = 20.0 * pow_checked(n, 1.0 - p.alpha.value(), "n^(1-alpha)") * log2n * log2n;
  return b;
}

AuditReport audit_lll_conditions(const LLLParams& p, double n) {
  if (n < 2) throw std::invalid_argument("audit: n >= 2 required");
  const double a = p.alpha.value(), b = p.beta.value(), g = p.gamma.value(),
               d = p.delta.value();
  const double log2n = std::log2(n);

  const LLLWeights w = lll_weights(p, n);
  const EventBudget budget = event_budget(p, n);

  AuditReport rep;
  rep.o1 = exp_clamped(w.log_y + budget.log_iq) + exp_clamped(w.log_z + budget.log_ir);
  const double log_one_minus_o1 =
      rep.o1 < 1.0 ? std::log1p(-rep.o1) : -std::numeric_limits<double>::max();

  // (i)  (1-o(1)) * x * e^{-3 x n^beta} >= 1/(8 n^{3 gamma}), in logs.
  rep.margin_p = std::log(2.0) - 0.75 * pow_checked(n, b - 3.0 * g, "n^(beta-3gamma)") +
                 log_one_minus_o1;

  // (ii) 2 n^beta + 10 n^{3/2-alpha+beta-3gamma+delta} <= 20 n^{3/2-alpha-gamma+delta},
  // scaled by log n, with the 1-o(1) factor folded in.
  rep.margin_q = (20.0 * pow_checked(n, 1.5 - a - g + d, "n^(3/2-a-g+d)") -
                  2.0 * pow_checked(n, b, "n^beta") -
                  10.0 * pow_checked(n, 1.5 - a + b - 3.0 * g + d, "n^(3/2-a+b-3g+d)")) *
                     log2n +
                 log_one_minus_o1;

  // (iii) 21 n^{1-alpha} + 25 n^{2-2alpha+beta-3gamma} <= 50 n^{2-2alpha-gamma},
  // scaled by log^2 n.
  rep.margin_r = (50.0 * pow_checked(n, 2.0 - 2.0 * a - g, "n^(2-2a-g)") -
                  21.0 * pow_checked(n, 1.0 - a, "n^(1-a)") -
                  25.0 * pow_checked(n, 2.0 - 2.0 * a + b - 3.0 * g, "n^(2-2a+b-3g)")) *
                     log2n * log2n +
                 log_one_minus_o1;
  return rep;
}

CrossoverReport crossover_scan(const LLLParams& p) {
  CrossoverReport rep;
  const double lo = 2.0, hi = 1e8;
  const int points = 81;
  for (int i = 0; i < points; ++i)
    rep.grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));

  bool seen_positive = false;
  rep.monotone_after_crossover = true;
  for (double n : rep.grid) {
    const bool pos = audit_lll_conditions(p, n).all_positive();
    if (pos && !seen_positive) {
      seen_positive = true;
      rep.found = true;
      rep.crossover_n = n;
    } else if (!pos && seen_positive) {
      rep.monotone_after_crossover = false;
    }
  }
  return rep;
}

namespace {

long long binom(long long n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// For a fixed increasing left class S1 of size s, every right-class vertex
// must lie above max(S1) and be red-adjacent to all of S1; the right class
// itself is unconstrained, so each S1 contributes C(#candidates, s).
long long right_candidates(const EdgeColoring& chi, const std::vector<int>& s1) {
  const int v = chi.num_vertices();
  long long m = 0;
  for (int w = s1.back() + 1; w <= v; ++w) {
    bool ok = true;
    for (int u : s1)
      if (chi.is_blue(u, w)) {
        ok = false;
        break;
      }
    if (ok) ++m;
  }
  return m;
}

void count_kss_exact(const EdgeColoring& chi, int s, std::vector<int>& s1, int next,
                     long long& total) {
  if (static_cast<int>(s1.size()) == s) {
    total += binom(right_candidates(chi, s1), s);
    return;
  }
  const int v = chi.num_vertices();
  for (int u = next; u <= v - (2 * s - static_cast<int>(s1.size())) + 1; ++u) {
    s1.push_back(u);
    count_kss_exact(chi, s, s1, u + 1, total);
    s1.pop_back();
  }
}

}  // namespace

ColoringCensus census_coloring(const EdgeColoring& chi, int s, std::uint64_t seed) {
  const int v = chi.num_vertices();
  ColoringCensus c;
  c.v = v;
  c.s = s;
  c.blue_edges = chi.blue_count();
  for (int u = 1; u <= v; ++u)
    for (int w = u + 1; w <= v; ++w) {
      if (!chi.is_blue(u, w)) continue;
      for (int x = w + 1; x <= v; ++x)
        if (chi.is_blue(u, x) && chi.is_blue(w, x)) ++c.blue_triangles;
    }

  if (s >= 1 && 2 * s <= v) {
    if (s <= 3) {
      long long total = 0;
      std::vector<int> s1;
      count_kss_exact(chi, s, s1, 1, total);
      c.red_kss_exact = true;
      c.red_kss = static_cast<double>(total);
    } else {
      // Seeded estimate: sample left classes uniformly, average the exact
      // per-class contribution.
      const long long trials = 20000;
      Rng rng(seed, 0x4b5353ull);
      double sum = 0, sum_sq = 0;
      for (long long i = 0; i < trials; ++i) {
        std::vector<int> s1;
        // Uniform s-subset by partial shuffle positions.
        std::vector<int> pool(v);
        for (int j = 0; j < v; ++j) pool[j] = j + 1;
        for (int j = 0; j < s; ++j) {
          const int k = j + static_cast<int>(rng.below(v - j));
          std::swap(pool[j], pool[k]);
        }
        s1.assign(pool.begin(), pool.begin() + s);
        std::sort(s1.begin(), s1.end());
        const double contrib = static_cast<double>(binom(right_candidates(chi, s1), s));
        sum += contrib;
        sum_sq += contrib * contrib;
      }
      const double mean = sum / trials;
      const double var = std::max(0.0, sum_sq / trials - mean * mean);
      const double scale = static_cast<double>(binom(v, s));
      c.red_kss = mean * scale;
      c.red_kss_stderr = std::sqrt(var / trials) * scale;
    }
  }
  return c;
}

LLLSample sample_lll_coloring(int v, double gamma_scale, std::uint64_t seed, int s) {
  if (v < 2) throw std::invalid_argument("sample_lll_coloring: v >= 2");
  if (gamma_scale < 1.0) throw std::invalid_argument("sample_lll_coloring: gamma_scale >= 1");
  const double p = 1.0 / (2.0 * gamma_scale);
  Rng rng(seed, 0);
  LLLSample sample{EdgeColoring::random(v, p, rng), {}};
  sample.census = census_coloring(sample.coloring, s, seed);
  sample.census.blue_prob = p;
  return sample;
}

}  // namespace ort
