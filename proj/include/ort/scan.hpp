#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ort/coloring.hpp"
#include "ort/core.hpp"

namespace ort {

struct RowOverflow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ThreadSucceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// N x N red/blue matrix; cell (i,j) holds the color of edge {i, N+j} of a
// coloring of K^<_{2N}.
class ColorMatrix {
 public:
  explicit ColorMatrix(int n, CellColor fill = CellColor::Red)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  CellColor at(int row, int col) const { return cells_[idx(row, col)]; }
  void set(int row, int col, CellColor c) { cells_[idx(row, col)] = c; }
  bool is_red(int row, int col) const { return at(row, col) == CellColor::Red; }

  static ColorMatrix random(int n, double blue_prob, Rng& rng);

  // Grid format: first line N, then N rows of R/B characters.
  std::string to_text() const;
  static ColorMatrix from_text(const std::string& text);

  bool operator==(const ColorMatrix& o) const = default;

 private:
  std::size_t idx(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("cell");
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  int n_;
  std::vector<CellColor> cells_;
};

ColorMatrix color_matrix_from_coloring(const EdgeColoring& chi);

// Maximal run of blue cells revealed by one thread within one row.
struct Segment {
  int row = 0;
  int col_begin = 0;
  int col_end = 0;  // inclusive
  int thread = 0;

  bool intersects(const Segment& o) const {
    return row == o.row && col_begin <= o.col_end && o.col_begin <= col_end;
  }
};

struct ThreadOutcome {
  int thread = 0;
  bool success = false;
  // On success: (row, column) of the red cell chosen for i = 1..n; columns
  // strictly increasing.
  std::vector<std::pair<int, int>> embedding;
  // On failure: revealed blue runs and their total size. The thread aborts
  // on the first row it exhausts without finding a red entry.
  std::vector<Segment> segments;
  long long revealed_blue = 0;
};

struct ScanTrace {
  int n = 0;  // pattern size (permutation length)
  std::vector<ThreadOutcome> threads;
};

// Greedy multi-thread scan: thread t walks rows pi(i)+t for i = 1..n, each
// time scanning left to right from the previous column + 1 until a red cell
// appears. Requires n + T - 1 <= N.
ScanTrace multi_thread_scan(const ColorMatrix& a, const Permutation& pi, int num_threads);

// Existence of columns j_1 < ... < j_n with (pi(i)+offset, j_i) red, by
// backtracking. Oracle for the thread-success iff property.
bool red_copy_in_rows(const ColorMatrix& a, const Permutation& pi, int offset);

// Number of segments of thread t sharing a cell with a segment of thread t2.
// Both threads must have failed.
int cross_thread_intersections(const ScanTrace& trace, int t, int t2);

// Smallest N covered by the trichotomy: ceil(4n(sqrt(n*ell) + 1)). Exact
// integer arithmetic.
long long theorem5_bound(long long n, long long ell);

// ceil(sqrt(n/ell)), the thread count used in the trichotomy proof.
int default_thread_count(int n, long long ell);

enum class ScanVerdict {
  BlueTriangle,
  RedClique2n,
  RedMatchingCopy,
  BoundViolatedCounterexample,
};

struct CertificateCheck {
  ScanVerdict verdict = ScanVerdict::BoundViolatedCounterexample;
  bool precondition_ok = false;  // N >= bound and L(pi) <= ell
  std::vector<int> witness;      // vertices of the triangle / clique / matching copy
  std::optional<std::string> counterexample;  // serialized coloring, worst case
};

// Searches chi (on K^<_{2N}) for a blue triangle, then a red K^<_{2n}, then
// a red copy of the matching between the halves. A coloring admitting none
// of the three would falsify the trichotomy.
CertificateCheck scan_certificate_check(const EdgeColoring& chi, const OrderedMatching& m,
                                        long long ell);

}  // namespace ort
