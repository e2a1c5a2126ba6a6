#include "ort/constructions.hpp"

#include <algorithm>

#include "ort/rect_count.hpp"

namespace ort {

MtResult build_M_t(int t) {
  if (t < 1) throw InvalidParameters("build_M_t: t >= 1 required");
  const BipartiteGridLayout layout{t};
  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      if (i == j) continue;
      const int u = layout.I(i).first + (j - 1);  // jth vertex of I_i
      const int v = layout.J(j).first + (i - 1);  // ith vertex of J_j
      edges.emplace_back(u, v);
    }
  return {OrderedMatching(OrderedGraph(2 * t * t, std::move(edges))), layout};
}

DensityCheck verify_M_t_density(int t, std::optional<int> threshold) {
  const MtResult mt = build_M_t(t);
  const int half = t * t;
  const int L = threshold.value_or(2 * t);

  std::vector<std::pair<int, int>> points;
  for (const auto& [u, v] : mt.matching.edges()) points.emplace_back(u, v - half);
  const RectCounter counter(half, half, points);

  DensityCheck res;
  res.threshold = L;
  res.ok = true;
  if (L > half) return res;  // no qualifying intervals
  for (int a = 1; a + L - 1 <= half; ++a)
    for (int a2 = a + L - 1; a2 <= half; ++a2)
      for (int b = 1; b + L - 1 <= half; ++b)
        for (int b2 = b + L - 1; b2 <= half; ++b2)
          if (counter.count(a, a2, b, b2) == 0) {
            res.ok = false;
            res.witness = {{a, a2}, {half + b, half + b2}};
            return res;
          }
  return res;
}

std::pair<int, int> BlockLayout::class_range(int i) const {
  const int sz = class_size();
  return {(i - 1) * sz + 1, i * sz};
}

std::pair<int, int> BlockLayout::block_range(int i, int l) const {
  const int base = class_range(i).first - 1 + (l - 1) * t;
  return {base + 1, base + t};
}

std::vector<int> BlockLayout::superblock_blocks(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > k || j > k)
    throw InvalidParameters("superblock: need distinct classes in [k]");
  // j is the (idx+1)st smallest element of [k] \ {i}.
  int idx = 0;
  for (int c = 1; c < j; ++c)
    if (c != i) ++idx;
  std::vector<int> blocks;
  for (int l = 1; l <= blocks_per_class(); ++l)
    if (l % (k - 1) == idx % (k - 1)) blocks.push_back(l);
  return blocks;
}

std::vector<std::pair<int, int>> BlockLayout::superblock(int i, int j) const {
  std::vector<std::pair<int, int>> out;
  for (int l : superblock_blocks(i, j)) out.push_back(block_range(i, l));
  return out;
}

MktResult build_M_kt(int k, int t) {
  if (k < 3) throw InvalidParameters("build_M_kt: k >= 3 required");
  if (t < 1) throw InvalidParameters("build_M_kt: t >= 1 required");
  const BlockLayout layout{k, t};
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto I = layout.superblock(i, j);  // t blocks, increasing
      const auto J = layout.superblock(j, i);
      for (int a = 1; a <= t; ++a)
        for (int b = 1; b <= t; ++b) {
          if (a == b) continue;
          const int u = I[a - 1].first + (b - 1);  // bth vertex of ath block
          const int v = J[b - 1].first + (a - 1);
          edges.emplace_back(u, v);
        }
    }
  return {OrderedMatching(OrderedGraph(layout.num_vertices(), std::move(edges))), layout};
}

Lemma6Report verify_lemma6(int k, int t) {
  const MktResult mkt = build_M_kt(k, t);
  const BlockLayout& lay = mkt.layout;
  const int cls = lay.class_size();
  const int L = 2 * k * t;

  Lemma6Report rep;
  rep.part_b_cap = (2 * k + 1) * (2 * k + 1);
  rep.part_a = true;
  rep.part_b = true;
  rep.part_a_vacuous = L > cls;

  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      // Edges between P_i and P_j in class-local coordinates.
      std::vector<std::pair<int, int>> points;
      const int oi = lay.class_range(i).first - 1;
      const int oj = lay.class_range(j).first - 1;
      for (const auto& [u, v] : mkt.matching.edges())
        if (u > oi && u <= oi + cls && v > oj && v <= oj + cls)
          points.emplace_back(u - oi, v - oj);
      const RectCounter counter(cls, cls, points);

      // Part a at length exactly L (edge counts grow with the intervals).
      if (!rep.part_a_vacuous) {
        for (int a = 1; a + L - 1 <= cls && rep.part_a; ++a)
          for (int b = 1; b + L - 1 <= cls; ++b)
            if (counter.count(a, a + L - 1, b, b + L - 1) == 0) {
              rep.part_a = false;
              break;
            }
      }

      // Part b at the largest admissible length.
      const int S = std::min(L, cls);
      for (int a = 1; a + S - 1 <= cls; ++a)
        for (int b = 1; b + S - 1 <= cls; ++b)
          rep.max_small_pair_edges =
              std::max(rep.max_small_pair_edges, counter.count(a, a + S - 1, b, b + S - 1));
    }
  rep.part_b = rep.max_small_pair_edges <= rep.part_b_cap;
  return rep;
}

}  // namespace ort
