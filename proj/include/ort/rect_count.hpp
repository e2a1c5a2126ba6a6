#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ort {

// 2D prefix counts over a point set in [1,rows] x [1,cols]; answers
// "how many points in [r1,r2] x [c1,c2]" in O(1). Used for interval-pair
// edge counting.
class RectCounter {
 public:
  RectCounter(int rows, int cols, const std::vector<std::pair<int, int>>& points)
      : rows_(rows), cols_(cols), pre_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0) {
    for (const auto& [r, c] : points) pre_[idx(r, c)] += 1;
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c)
        pre_[idx(r, c)] += pre_[idx(r - 1, c)] + pre_[idx(r, c - 1)] - pre_[idx(r - 1, c - 1)];
  }

  int count(int r1, int r2, int c1, int c2) const {
    if (r1 > r2 || c1 > c2) return 0;
    return pre_[idx(r2, c2)] - pre_[idx(r1 - 1, c2)] - pre_[idx(r2, c1 - 1)] +
           pre_[idx(r1 - 1, c1 - 1)];
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * (cols_ + 1) + c;
  }

  int rows_, cols_;
  std::vector<std::int32_t> pre_;
};

}  // namespace ort
