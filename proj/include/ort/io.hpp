#pragma once

#include <iosfwd>
#include <string>

#include "ort/core.hpp"

namespace ort {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered-graph text format (.og): first line "n m", then m lines "u v".
OrderedGraph read_ordered_graph(std::istream& in);
OrderedGraph parse_ordered_graph(const std::string& text);
std::string format_ordered_graph(const OrderedGraph& g);

// Permutation format: one line of space-separated images "pi(1) ... pi(n)".
Permutation parse_permutation(const std::string& line);
std::string format_permutation(const Permutation& pi);

OrderedGraph load_ordered_graph(const std::string& path);
Permutation load_permutation(const std::string& path);
std::string load_file(const std::string& path);

}  // namespace ort
