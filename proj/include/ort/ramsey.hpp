#pragma once

#include <cstdint>
#include <optional>

#include "ort/coloring.hpp"
#include "ort/core.hpp"

namespace ort {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ull;

struct ArrowingResult {
  enum class Status { Arrows, Colorable, BudgetExceeded };

  Status status = Status::BudgetExceeded;
  int n = 0;
  // Good coloring avoiding a red G and a blue H, when status == Colorable.
  std::optional<EdgeColoring> certificate;
  std::uint64_t nodes_explored = 0;

  bool arrows() const { return status == Status::Arrows; }
};

// True result iff every red-blue coloring of K^<_N contains a red ordered
// copy of red_pattern or a blue ordered copy of blue_pattern. DFS over edges
// in lexicographic order, red branch first, with incremental containment
// monitors on both color classes. Deterministic; single-threaded.
ArrowingResult arrows(int n, const OrderedGraph& red_pattern, const OrderedGraph& blue_pattern,
                      std::uint64_t node_budget = kDefaultNodeBudget);

// Specialization for blue_pattern = K^<_3: explores only colorings whose
// blue graph stays triangle-free, with forced-red propagation, and tests the
// red side against red_pattern. Agrees with arrows(n, red_pattern, K_3).
ArrowingResult triangle_free_blue_search(int n, const OrderedGraph& red_pattern,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

struct RamseyResult {
  bool known = false;    // false: no arrowing N <= n_max found (or budget hit)
  bool budget_hit = false;
  int value = 0;         // r_<(G, H) when known
  int n_max = 0;
  std::uint64_t nodes_explored = 0;
  std::optional<EdgeColoring> certificate;  // good coloring at value-1 (or n_max)
};

// Smallest N <= n_max with arrows(N, g, h); exploits monotonicity by
// searching upward from N = 1.
RamseyResult ordered_ramsey(const OrderedGraph& g, const OrderedGraph& h, int n_max,
                            std::uint64_t node_budget = kDefaultNodeBudget,
                            bool specialize_triangle = false);

// Independent re-verification of a claimed good coloring: neither a red copy
// of g nor a blue copy of h.
bool certificate_is_good(const EdgeColoring& chi, const OrderedGraph& g, const OrderedGraph& h);

}  // namespace ort
