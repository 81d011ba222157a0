#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ocdlab {

using Vertex = int;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the text parsers; the message always names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a parsed coloring breaks a ColoredGraph invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex identifiers.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet all(int n);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Throws ContractViolation unless every member is in [0, n).
  void check_range(int n) const;

  /// Vertices of 0..n-1 not in this set.
  VertexSet complement(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::size_t m() const { return edge_count_; }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edges(std::span<const std::pair<Vertex, Vertex>> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A graph with a proper k-coloring; colors are 1..k and every class is
/// nonempty and independent.
class ColoredGraph {
 public:
  /// Validates the coloring and throws ValidationError on violation.
  ColoredGraph(Graph graph, std::vector<int> color);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  int color(Vertex v) const { return color_[v]; }
  std::span<const int> colors() const { return color_; }

  /// Members of color class c (1-based), ascending.
  std::span<const Vertex> color_class(int c) const { return classes_[c - 1]; }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Graph graph_;
  std::vector<int> color_;
  int k_ = 0;
  std::vector<std::vector<Vertex>> classes_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
ColoredGraph parse_colored_graph(std::istream& in);
ColoredGraph parse_colored_graph(std::string_view text);

void write_graph(std::ostream& out, const Graph& g);
void write_colored_graph(std::ostream& out, const ColoredGraph& cg);
std::string to_text(const Graph& g);
std::string to_text(const ColoredGraph& cg);

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending order of the
/// original identifiers.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// True iff every pair of vertices is joined by a path. Graphs with zero or
/// one vertex count as connected.
bool is_connected(const Graph& g);

/// Connected components as ascending vertex lists, ordered by their smallest
/// member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace ocdlab
