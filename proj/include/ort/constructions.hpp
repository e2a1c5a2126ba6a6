#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ort/core.hpp"

namespace ort {

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Layout of the bipartite grid matching on [2t^2]: intervals I_1..I_t over
// the left half and J_1..J_t over the right half, each of length t.
struct BipartiteGridLayout {
  int t = 0;

  std::pair<int, int> I(int i) const { return {(i - 1) * t + 1, i * t}; }
  std::pair<int, int> J(int j) const { return {t * t + (j - 1) * t + 1, t * t + j * t}; }
};

struct MtResult {
  OrderedMatching matching;
  BipartiteGridLayout layout;
};

// The matching on 2t^2 vertices with one edge between I_i and J_j for every
// pair i != j: the jth vertex of I_i is joined to the ith vertex of J_j.
MtResult build_M_t(int t);

struct DensityCheck {
  bool ok = false;
  int threshold = 0;  // minimal interval length used
  // Offending (I, J) interval pair with no edge, when ok is false.
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> witness;
};

// Checks that every interval pair I in the left half, J in the right half,
// each of length >= threshold (default 2t), carries at least one edge.
// Exhaustive over all qualifying interval pairs.
DensityCheck verify_M_t_density(int t, std::optional<int> threshold = std::nullopt);

// Layout of the k-class block construction on m = k(k-1)t^2 vertices.
struct BlockLayout {
  int k = 0;
  int t = 0;

  int num_vertices() const { return k * (k - 1) * t * t; }
  int class_size() const { return (k - 1) * t * t; }
  int blocks_per_class() const { return (k - 1) * t; }

  std::pair<int, int> class_range(int i) const;        // P_i, i in [k]
  std::pair<int, int> block_range(int i, int l) const; // B_{i,l}, l in [(k-1)t]
  // Block indices l forming the superblock C_{i,j}, ascending. j != i.
  std::vector<int> superblock_blocks(int i, int j) const;
  // The t block ranges of C_{i,j} in increasing position.
  std::vector<std::pair<int, int>> superblock(int i, int j) const;
};

struct MktResult {
  OrderedMatching matching;
  BlockLayout layout;
};

// Intertwined union of copies of build_M_t(t): for each class pair {i,j} the
// superblocks C_{i,j} and C_{j,i} induce a copy of M_t whose I-intervals are
// the blocks of C_{i,j} and whose J-intervals are the blocks of C_{j,i}.
MktResult build_M_kt(int k, int t);

struct Lemma6Report {
  bool part_a = false;
  bool part_a_vacuous = false;  // no interval of length 2kt fits in a class
  bool part_b = false;
  int max_small_pair_edges = 0;  // observed maximum for part b
  int part_b_cap = 0;            // (2k+1)^2
};

// Part a: every cross-class interval pair of length >= 2kt carries an edge.
// Part b: no cross-class interval pair of lengths <= 2kt carries more than
// (2k+1)^2 edges. Both sides scanned at the extremal interval length; edge
// counts are monotone in interval growth, so this is equivalent to the full
// sweep.
Lemma6Report verify_lemma6(int k, int t);

}  // namespace ort
