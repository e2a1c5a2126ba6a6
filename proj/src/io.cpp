#include "ort/io.hpp"

#include <fstream>
#include <sstream>

#include "ort/coloring.hpp"

namespace ort {

OrderedGraph read_ordered_graph(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("ordered graph: expected header 'n m'");
  if (n < 0 || m < 0) throw ParseError("ordered graph: negative count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("ordered graph: truncated edge list");
    edges.emplace_back(u, v);
  }
  try {
    return OrderedGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ordered graph: ") + e.what());
  }
}

OrderedGraph parse_ordered_graph(const std::string& text) {
  std::istringstream in(text);
  return read_ordered_graph(in);
}

std::string format_ordered_graph(const OrderedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Permutation parse_permutation(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> images;
  int x = 0;
  while (in >> x) images.push_back(x);
  if (!in.eof()) throw ParseError("permutation: non-numeric token");
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("permutation: ") + e.what());
  }
}

std::string format_permutation(const Permutation& pi) {
  std::ostringstream out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out << ' ';
    out << pi(i);
  }
  out << '\n';
  return out.str();
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OrderedGraph load_ordered_graph(const std::string& path) {
  return parse_ordered_graph(load_file(path));
}

Permutation load_permutation(const std::string& path) {
  return parse_permutation(load_file(path));
}

std::string EdgeColoring::to_text() const {
  std::string out = std::to_string(n_);
  out += '\n';
  for (bool b : bits_) out += b ? 'B' : 'R';
  out += '\n';
  return out;
}

EdgeColoring EdgeColoring::from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  std::string row;
  if (!(in >> n) || n < 0) throw ParseError("edge coloring: expected vertex count");
  if (!(in >> row) && n > 1) throw ParseError("edge coloring: missing color row");
  EdgeColoring chi(n);
  if (row.size() != chi.bits_.size())
    throw ParseError("edge coloring: wrong number of colors");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 'B')
      chi.bits_[i] = true;
    else if (row[i] != 'R')
      throw ParseError("edge coloring: characters must be R or B");
  }
  return chi;
}

}  // namespace ort
