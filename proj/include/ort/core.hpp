#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ort/rng.hpp"

namespace ort {

// Vertices are 1-based throughout; edges are stored canonically with u < v
// and sorted lexicographically.
using Edge = std::pair<int, int>;

struct NotBipartiteMatching : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidEmbedding : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A graph with a fixed linear order on its vertex set [n].
class OrderedGraph {
 public:
  OrderedGraph() = default;
  OrderedGraph(int n_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;

  // Vertices adjacent to v (any direction), ascending.
  std::vector<int> neighbors(int v) const;

  // Subgraph induced by an ascending vertex list, relabeled to [k].
  OrderedGraph induced(const std::vector<int>& vertices) const;

  static OrderedGraph empty(int n) { return OrderedGraph(n, {}); }
  static OrderedGraph complete(int n);
  static OrderedGraph single_edge() { return OrderedGraph(2, {{1, 2}}); }

  bool operator==(const OrderedGraph& o) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// 1-regular ordered graph. Perfect-bipartite matchings on [2n] carry the
// permutation correspondence.
class OrderedMatching {
 public:
  explicit OrderedMatching(OrderedGraph g);

  const OrderedGraph& graph() const { return g_; }
  int num_vertices() const { return g_.num_vertices(); }
  const std::vector<Edge>& edges() const { return g_.edges(); }

  // True when n_vertices = 2n, every vertex is matched and every edge has
  // one endpoint in [n] and one in {n+1,...,2n}.
  bool is_perfect_bipartite() const;

 private:
  OrderedGraph g_;
};

class Permutation {
 public:
  // images[i-1] = pi(i); must be a bijection on [n].
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  static Permutation identity(int n);

  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> images_;
};

Permutation random_permutation(int n, Rng& rng);

// Consecutive nonempty intervals covering [n]; stored as inclusive interval
// end positions (the last one equals n).
struct IntervalPartition {
  std::vector<int> ends;

  int num_intervals() const { return static_cast<int>(ends.size()); }
  int covered() const { return ends.empty() ? 0 : ends.back(); }
  // 1-based interval index containing position v.
  int interval_of(int v) const;
  std::pair<int, int> interval(int k) const;  // k is 1-based

  static IntervalPartition singletons(int n);
  static IntervalPartition uniform(int n, int parts);  // n divisible by parts

  bool operator==(const IntervalPartition& o) const = default;
};

// pi on [n] -> perfect-bipartite matching on [2n] with edges {i, n + pi(i)}.
OrderedMatching matching_from_permutation(const Permutation& pi);

// Inverse of matching_from_permutation. Throws NotBipartiteMatching when an
// edge fails to cross the midpoint or some vertex is unmatched.
Permutation permutation_from_matching(const OrderedMatching& m);

struct ChiResult {
  int chi;
  IntervalPartition partition;  // witness with no intra-interval edge
};

// Greedy left-to-right sweep; leftmost-maximal intervals are optimal by an
// exchange argument (tested against the exhaustive minimum).
ChiResult interval_chromatic_number(const OrderedGraph& g);

// Exhaustive minimum over all interval partitions. Test oracle; n <= 20.
int interval_chromatic_number_bruteforce(const OrderedGraph& g);

// Order-preserving injection of pattern into host mapping pattern edges onto
// host edges. Returns the lexicographically least witness (witness[i-1] is
// the host image of pattern vertex i) or nullopt.
std::optional<std::vector<int>> find_ordered_subgraph(const OrderedGraph& host,
                                                      const OrderedGraph& pattern);

bool contains_ordered_subgraph(const OrderedGraph& host, const OrderedGraph& pattern);

// Quotient of an embedded matching by an interval partition: one vertex per
// interval, an edge {i,j}, i != j, when some matching edge runs between
// interval i and interval j under the embedding.
OrderedGraph quotient_graph(const OrderedMatching& m, const std::vector<int>& embedding,
                            const IntervalPartition& partition);

}  // namespace ort
