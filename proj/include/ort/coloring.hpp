#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ort/rng.hpp"

namespace ort {

enum class CellColor : std::uint8_t { Red = 0, Blue = 1 };

// Red-blue coloring of the edges of K^<_N, bit-packed over the C(N,2) edges
// in lexicographic order of (u,v), u < v. Red = 0, Blue = 1.
class EdgeColoring {
 public:
  explicit EdgeColoring(int n_vertices, CellColor fill = CellColor::Red)
      : n_(n_vertices), bits_(static_cast<std::size_t>(n_vertices) * (n_vertices - 1) / 2,
                              fill == CellColor::Blue) {}

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return bits_.size(); }

  // Lexicographic index of edge {u,v}, 1 <= u < v <= N.
  static std::size_t edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) throw std::out_of_range("edge out of range");
    return static_cast<std::size_t>(u - 1) * (2 * n - u) / 2 + (v - u - 1);
  }

  CellColor color(int u, int v) const {
    return bits_[edge_index(n_, u, v)] ? CellColor::Blue : CellColor::Red;
  }
  bool is_blue(int u, int v) const { return bits_[edge_index(n_, u, v)]; }
  void set(int u, int v, CellColor c) { bits_[edge_index(n_, u, v)] = (c == CellColor::Blue); }

  // Each edge blue independently with probability blue_prob.
  static EdgeColoring random(int n, double blue_prob, Rng& rng) {
    EdgeColoring chi(n);
    for (std::size_t i = 0; i < chi.bits_.size(); ++i) chi.bits_[i] = rng.bernoulli(blue_prob);
    return chi;
  }

  long long blue_count() const {
    long long c = 0;
    for (bool b : bits_) c += b;
    return c;
  }

  // Text format: first line N, second line C(N,2) R/B characters.
  std::string to_text() const;
  static EdgeColoring from_text(const std::string& text);

  bool operator==(const EdgeColoring& o) const = default;

 private:
  int n_;
  std::vector<bool> bits_;
};

}  // namespace ort
