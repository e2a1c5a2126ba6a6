#include "ort/ramsey.hpp"

#include <algorithm>
#include <vector>

namespace ort {

namespace {

constexpr int kMaxVertices = 64;

struct EdgeList {
  std::vector<Edge> edges;  // lexicographic
  explicit EdgeList(int n) {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
};

// Adjacency of one color class as per-vertex bitmasks (N <= 64).
struct MaskGraph {
  std::vector<std::uint64_t> adj;
  explicit MaskGraph(int n) : adj(n + 1, 0) {}

  bool has(int u, int v) const { return adj[u] >> (v - 1) & 1; }
  void add(int u, int v) {
    adj[u] |= 1ull << (v - 1);
    adj[v] |= 1ull << (u - 1);
  }
  void remove(int u, int v) {
    adj[u] &= ~(1ull << (v - 1));
    adj[v] &= ~(1ull << (u - 1));
  }
};

// Does the pattern embed order-preservingly into the mask graph with the
// pinned pattern vertices mapped as given? pin[i] == 0 means free.
bool embed_pinned(const MaskGraph& g, int n, const OrderedGraph& pattern,
                  const std::vector<std::vector<int>>& earlier, std::vector<int>& map,
                  const std::vector<int>& pin, int next) {
  const int p = pattern.num_vertices();
  if (next > p) return true;
  const int lo = next == 1 ? 1 : map[next - 2] + 1;
  const int hi = n - (p - next);
  const int from = pin[next] ? pin[next] : lo;
  const int to = pin[next] ? pin[next] : hi;
  for (int pos = from; pos <= to; ++pos) {
    if (pos < lo || pos > hi) break;
    bool ok = true;
    for (int u : earlier[next])
      if (!g.has(map[u - 1], pos)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[next - 1] = pos;
    if (embed_pinned(g, n, pattern, earlier, map, pin, next + 1)) return true;
  }
  return false;
}

// Containment monitor: the mask graph was pattern-free before (u,v) was
// added, so any new copy must use that edge.
struct PatternMonitor {
  const OrderedGraph* pattern;
  std::vector<std::vector<int>> earlier;

  explicit PatternMonitor(const OrderedGraph& pat) : pattern(&pat) {
    earlier.resize(pat.num_vertices() + 1);
    for (const auto& [a, b] : pat.edges()) earlier[b].push_back(a);
  }

  bool completes_copy(const MaskGraph& g, int n, int u, int v) const {
    const int p = pattern->num_vertices();
    if (p > n) return false;
    std::vector<int> map(p, 0);
    std::vector<int> pin(p + 1, 0);
    for (const auto& [a, b] : pattern->edges()) {
      pin[a] = u;
      pin[b] = v;
      if (embed_pinned(g, n, *pattern, earlier, map, pin, 1)) return true;
      pin[a] = 0;
      pin[b] = 0;
    }
    return false;
  }
};

struct BudgetStop {};

// DFS over edges in lexicographic order, red branch first.
struct GeneralSearch {
  int n;
  const EdgeList& list;
  PatternMonitor red_monitor, blue_monitor;
  MaskGraph red, blue;
  std::vector<CellColor> assignment;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  GeneralSearch(int n_, const EdgeList& l, const OrderedGraph& g, const OrderedGraph& h,
                std::uint64_t budget_)
      : n(n_), list(l), red_monitor(g), blue_monitor(h), red(n_), blue(n_),
        assignment(l.edges.size(), CellColor::Red), budget(budget_) {}

  bool find_good(std::size_t k) {
    if (k == list.edges.size()) return true;
    if (++nodes > budget) throw BudgetStop{};
    const auto [u, v] = list.edges[k];
    red.add(u, v);
    if (!red_monitor.completes_copy(red, n, u, v)) {
      assignment[k] = CellColor::Red;
      if (find_good(k + 1)) return true;
    }
    red.remove(u, v);
    blue.add(u, v);
    if (!blue_monitor.completes_copy(blue, n, u, v)) {
      assignment[k] = CellColor::Blue;
      if (find_good(k + 1)) return true;
    }
    blue.remove(u, v);
    return false;
  }
};

bool edgeless_pattern_fits(const OrderedGraph& pattern, int n) {
  return pattern.num_edges() == 0 && pattern.num_vertices() <= n;
}

}  // namespace

ArrowingResult arrows(int n, const OrderedGraph& red_pattern, const OrderedGraph& blue_pattern,
                      std::uint64_t node_budget) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("arrows: 1 <= N <= 64");
  ArrowingResult res;
  res.n = n;
  // Edgeless patterns embed into every coloring.
  if (edgeless_pattern_fits(red_pattern, n) || edgeless_pattern_fits(blue_pattern, n)) {
    res.status = ArrowingResult::Status::Arrows;
    return res;
  }
  const EdgeList list(n);
  GeneralSearch search(n, list, red_pattern, blue_pattern, node_budget);
  try {
    if (search.find_good(0)) {
      res.status = ArrowingResult::Status::Colorable;
      EdgeColoring chi(n);
      for (std::size_t k = 0; k < list.edges.size(); ++k)
        chi.set(list.edges[k].first, list.edges[k].second, search.assignment[k]);
      res.certificate = std::move(chi);
    } else {
      res.status = ArrowingResult::Status::Arrows;
    }
  } catch (const BudgetStop&) {
    res.status = ArrowingResult::Status::BudgetExceeded;
  }
  res.nodes_explored = search.nodes;
  return res;
}

namespace {

// Specialized search for blue = K_3. Branches blue-first so dense
// triangle-free blue graphs are reached early; a blue edge {u,v} forces
// {v,w} red for every existing blue edge {u,w} (and symmetrically), which
// feeds the red containment monitor ahead of the branching.
struct TriangleFreeSearch {
  int n;
  const EdgeList& list;
  std::vector<std::vector<int>> edge_id;  // (u,v) -> index into list
  PatternMonitor red_monitor;
  MaskGraph red, blue;
  std::vector<std::int8_t> color;  // -1 unassigned, 0 red, 1 blue
  std::vector<int> trail;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  TriangleFreeSearch(int n_, const EdgeList& l, const OrderedGraph& g, std::uint64_t budget_)
      : n(n_), list(l), edge_id(n_ + 1, std::vector<int>(n_ + 1, -1)), red_monitor(g),
        red(n_), blue(n_), color(l.edges.size(), -1), budget(budget_) {
    for (int k = 0; k < static_cast<int>(l.edges.size()); ++k) {
      const auto [u, v] = l.edges[k];
      edge_id[u][v] = edge_id[v][u] = k;
    }
  }

  // Assigns edge k and propagates forced reds. Returns false on conflict;
  // either way all assignments land on the trail above the saved mark.
  bool assign(int k, std::int8_t c) {
    std::size_t head = trail.size();
    color[k] = c;
    trail.push_back(k);
    std::vector<int> new_red;
    while (head < trail.size()) {
      const int e = trail[head++];
      const auto [u, v] = list.edges[e];
      if (color[e] == 1) {
        if (blue.adj[u] & blue.adj[v]) return false;  // blue triangle
        for (int w = 1; w <= n; ++w) {
          if (!(blue.adj[u] >> (w - 1) & 1) && !(blue.adj[v] >> (w - 1) & 1)) continue;
          const int other = (blue.adj[u] >> (w - 1) & 1) ? v : u;
          const int f = edge_id[other][w];
          if (color[f] == 1) return false;
          if (color[f] == -1) {
            color[f] = 0;
            trail.push_back(f);
          }
        }
        blue.add(u, v);
      } else {
        red.add(u, v);
        new_red.push_back(e);
      }
    }
    for (int e : new_red) {
      const auto [u, v] = list.edges[e];
      if (red_monitor.completes_copy(red, n, u, v)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      const int e = trail.back();
      trail.pop_back();
      const auto [u, v] = list.edges[e];
      if (color[e] == 1) {
        if (blue.has(u, v)) blue.remove(u, v);
      } else if (red.has(u, v)) {
        red.remove(u, v);
      }
      color[e] = -1;
    }
  }

  bool find_good() {
    int k = 0;
    while (k < static_cast<int>(color.size()) && color[k] != -1) ++k;
    if (k == static_cast<int>(color.size())) return true;
    if (++nodes > budget) throw BudgetStop{};
    for (std::int8_t c : {std::int8_t{1}, std::int8_t{0}}) {
      const std::size_t mark = trail.size();
      if (assign(k, c) && find_good()) return true;
      undo(mark);
    }
    return false;
  }
};

}  // namespace

ArrowingResult triangle_free_blue_search(int n, const OrderedGraph& red_pattern,
                                         std::uint64_t node_budget) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("search: 1 <= N <= 64");
  ArrowingResult res;
  res.n = n;
  if (edgeless_pattern_fits(red_pattern, n)) {
    res.status = ArrowingResult::Status::Arrows;
    return res;
  }
  const EdgeList list(n);
  TriangleFreeSearch search(n, list, red_pattern, node_budget);
  try {
    if (search.find_good()) {
      res.status = ArrowingResult::Status::Colorable;
      EdgeColoring chi(n);
      for (std::size_t k = 0; k < list.edges.size(); ++k)
        chi.set(list.edges[k].first, list.edges[k].second,
                search.color[k] == 1 ? CellColor::Blue : CellColor::Red);
      res.certificate = std::move(chi);
    } else {
      res.status = ArrowingResult::Status::Arrows;
    }
  } catch (const BudgetStop&) {
    res.status = ArrowingResult::Status::BudgetExceeded;
  }
  res.nodes_explored = search.nodes;
  return res;
}

RamseyResult ordered_ramsey(const OrderedGraph& g, const OrderedGraph& h, int n_max,
                            std::uint64_t node_budget, bool specialize_triangle) {
  RamseyResult res;
  res.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const ArrowingResult a = specialize_triangle ? triangle_free_blue_search(n, g, node_budget)
                                                 : arrows(n, g, h, node_budget);
    res.nodes_explored += a.nodes_explored;
    if (a.status == ArrowingResult::Status::BudgetExceeded) {
      res.budget_hit = true;
      return res;
    }
    if (a.arrows()) {
      res.known = true;
      res.value = n;
      return res;
    }
    res.certificate = a.certificate;
  }
  return res;
}

bool certificate_is_good(const EdgeColoring& chi, const OrderedGraph& g, const OrderedGraph& h) {
  const int n = chi.num_vertices();
  std::vector<Edge> red_edges, blue_edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      (chi.is_blue(u, v) ? blue_edges : red_edges).emplace_back(u, v);
  const OrderedGraph red(n, std::move(red_edges));
  const OrderedGraph blue(n, std::move(blue_edges));
  return !contains_ordered_subgraph(red, g) && !contains_ordered_subgraph(blue, h);
}

}  // namespace ort
