#include "ort/core.hpp"

#include <algorithm>
#include <numeric>

namespace ort {

OrderedGraph::OrderedGraph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 1 || v > n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool OrderedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> OrderedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderedGraph OrderedGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> label(n_ + 1, 0);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const int v = vertices[i];
    if (v < 1 || v > n_) throw std::invalid_argument("induced: vertex out of range");
    if (i > 0 && vertices[i - 1] >= v) throw std::invalid_argument("induced: not ascending");
    label[v] = i + 1;
  }
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges_)
    if (label[u] && label[v]) sub.emplace_back(label[u], label[v]);
  return OrderedGraph(static_cast<int>(vertices.size()), std::move(sub));
}

OrderedGraph OrderedGraph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return OrderedGraph(n, std::move(e));
}

OrderedMatching::OrderedMatching(OrderedGraph g) : g_(std::move(g)) {
  std::vector<int> deg(g_.num_vertices() + 1, 0);
  for (const auto& [u, v] : g_.edges()) {
    if (++deg[u] > 1 || ++deg[v] > 1)
      throw std::invalid_argument("matching: vertex of degree > 1");
  }
}

bool OrderedMatching::is_perfect_bipartite() const {
  const int m = num_vertices();
  if (m == 0 || m % 2 != 0) return false;
  const int n = m / 2;
  if (static_cast<int>(edges().size()) != n) return false;
  for (const auto& [u, v] : edges())
    if (!(u <= n && v > n)) return false;
  return true;  // n edges, degree <= 1, all crossing => perfect
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(v[i], v[j]);
  }
  return Permutation(std::move(v));
}

int IntervalPartition::interval_of(int v) const {
  const auto it = std::lower_bound(ends.begin(), ends.end(), v);
  if (v < 1 || it == ends.end()) throw std::out_of_range("position outside partition");
  return static_cast<int>(it - ends.begin()) + 1;
}

std::pair<int, int> IntervalPartition::interval(int k) const {
  return {k == 1 ? 1 : ends[k - 2] + 1, ends[k - 1]};
}

IntervalPartition IntervalPartition::singletons(int n) {
  IntervalPartition p;
  p.ends.resize(n);
  std::iota(p.ends.begin(), p.ends.end(), 1);
  return p;
}

IntervalPartition IntervalPartition::uniform(int n, int parts) {
  if (parts <= 0 || n % parts != 0) throw std::invalid_argument("uneven uniform partition");
  IntervalPartition p;
  const int len = n / parts;
  for (int k = 1; k <= parts; ++k) p.ends.push_back(k * len);
  return p;
}

OrderedMatching matching_from_permutation(const Permutation& pi) {
  const int n = pi.size();
  std::vector<Edge> e;
  e.reserve(n);
  for (int i = 1; i <= n; ++i) e.emplace_back(i, n + pi(i));
  return OrderedMatching(OrderedGraph(2 * n, std::move(e)));
}

Permutation permutation_from_matching(const OrderedMatching& m) {
  if (!m.is_perfect_bipartite())
    throw NotBipartiteMatching("matching is not perfect-bipartite on [2n]");
  const int n = m.num_vertices() / 2;
  std::vector<int> images(n, 0);
  for (const auto& [u, v] : m.edges()) images[u - 1] = v - n;
  return Permutation(std::move(images));
}

ChiResult interval_chromatic_number(const OrderedGraph& g) {
  const int n = g.num_vertices();
  ChiResult res;
  res.chi = 0;
  if (n == 0) return res;  // chi of the empty vertex set fixed as 0
  // Extend the current interval until an edge would become internal.
  std::vector<std::vector<int>> back_nbrs(n + 1);
  for (const auto& [u, v] : g.edges()) back_nbrs[v].push_back(u);
  int start = 1;
  for (int v = 1; v <= n; ++v) {
    bool internal = false;
    for (int u : back_nbrs[v])
      if (u >= start) {
        internal = true;
        break;
      }
    if (internal) {
      res.partition.ends.push_back(v - 1);
      start = v;
    }
  }
  res.partition.ends.push_back(n);
  res.chi = res.partition.num_intervals();
  return res;
}

int interval_chromatic_number_bruteforce(const OrderedGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  if (n > 20) throw std::invalid_argument("bruteforce chi limited to n <= 20");
  int best = n;
  // Cut set over the n-1 gaps.
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      bool cut_between = false;
      for (int gap = u; gap < v && !cut_between; ++gap)
        if (cuts & (1u << (gap - 1))) cut_between = true;
      if (!cut_between) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, 1 + __builtin_popcount(cuts));
  }
  return best;
}

namespace {

bool embed_from(const OrderedGraph& host, const OrderedGraph& pattern,
                const std::vector<std::vector<int>>& earlier, int next, std::vector<int>& map) {
  const int p = pattern.num_vertices();
  if (next > p) return true;
  const int lo = next == 1 ? 1 : map[next - 2] + 1;
  for (int pos = lo; pos <= host.num_vertices() - (p - next); ++pos) {
    bool ok = true;
    for (int u : earlier[next])
      if (!host.has_edge(map[u - 1], pos)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[next - 1] = pos;
    if (embed_from(host, pattern, earlier, next + 1, map)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_ordered_subgraph(const OrderedGraph& host,
                                                      const OrderedGraph& pattern) {
  const int p = pattern.num_vertices();
  if (p > host.num_vertices()) return std::nullopt;
  std::vector<std::vector<int>> earlier(p + 1);
  for (const auto& [u, v] : pattern.edges()) earlier[v].push_back(u);
  std::vector<int> map(p, 0);
  if (embed_from(host, pattern, earlier, 1, map)) return map;
  return std::nullopt;
}

bool contains_ordered_subgraph(const OrderedGraph& host, const OrderedGraph& pattern) {
  return find_ordered_subgraph(host, pattern).has_value();
}

OrderedGraph quotient_graph(const OrderedMatching& m, const std::vector<int>& embedding,
                            const IntervalPartition& partition) {
  const int mv = m.num_vertices();
  if (static_cast<int>(embedding.size()) != mv)
    throw InvalidEmbedding("embedding size mismatch");
  const int cover = partition.covered();
  for (int i = 0; i < mv; ++i) {
    if (embedding[i] < 1 || embedding[i] > cover)
      throw InvalidEmbedding("embedding image out of range");
    if (i > 0 && embedding[i - 1] >= embedding[i])
      throw InvalidEmbedding("embedding not order-preserving");
  }
  std::vector<Edge> q;
  for (const auto& [u, v] : m.edges()) {
    const int i = partition.interval_of(embedding[u - 1]);
    const int j = partition.interval_of(embedding[v - 1]);
    if (i != j) q.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return OrderedGraph(partition.num_intervals(), std::move(q));
}

}  // namespace ort
