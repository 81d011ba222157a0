#include "ocdlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace ocdlab {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(int n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int v = 0; v < n; ++v) s.members_[v] = v;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::check_range(int n) const {
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n)) {
    throw ContractViolation("vertex set member out of range for graph with " +
                            std::to_string(n) + " vertices");
  }
}

VertexSet VertexSet::complement(int n) const {
  VertexSet out;
  auto it = members_.begin();
  for (Vertex v = 0; v < n; ++v) {
    while (it != members_.end() && *it < v) ++it;
    if (it == members_.end() || *it != v) out.members_.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) {
  if (n < 0) throw ContractViolation("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  add_edges(edges);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  add_edges(std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

void Graph::add_edges(std::span<const std::pair<Vertex, Vertex>> edges) {
  const int count = n();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= count || v >= count) {
      throw ContractViolation("edge endpoint out of range");
    }
    if (u == v) throw ContractViolation("self-loop on vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    total += row.size();
  }
  edge_count_ = total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ColoredGraph

ColoredGraph::ColoredGraph(Graph graph, std::vector<int> color)
    : graph_(std::move(graph)), color_(std::move(color)) {
  if (static_cast<int>(color_.size()) != graph_.n()) {
    throw ValidationError("coloring covers " + std::to_string(color_.size()) +
                          " vertices, graph has " + std::to_string(graph_.n()));
  }
  for (Vertex v = 0; v < graph_.n(); ++v) {
    if (color_[v] < 1) {
      throw ValidationError("vertex " + std::to_string(v + 1) +
                            " has no valid color");
    }
    k_ = std::max(k_, color_[v]);
  }
  classes_.resize(static_cast<std::size_t>(k_));
  for (Vertex v = 0; v < graph_.n(); ++v) classes_[color_[v] - 1].push_back(v);
  for (int c = 1; c <= k_; ++c) {
    if (classes_[c - 1].empty()) {
      throw ValidationError("color class " + std::to_string(c) + " is empty");
    }
  }
  for (auto [u, v] : graph_.edges()) {
    if (color_[u] == color_[v]) {
      throw ValidationError("monochromatic edge " + std::to_string(u + 1) + " " +
                            std::to_string(v + 1) + " (color " +
                            std::to_string(color_[u]) + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::optional<int>> color;
  std::vector<std::size_t> color_line;
};

long parse_int(std::istringstream& fields, std::size_t line, const char* what) {
  long value = 0;
  if (!(fields >> value)) throw ParseError(line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& fields, std::size_t line) {
  std::string extra;
  if (fields >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

RawGraph read_raw(std::istream& in, bool allow_colors) {
  RawGraph raw;
  bool have_header = false;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream fields(text);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;

    if (!have_header) {
      if (tag != "p") throw ParseError(line, "expected 'p ocd <n> <m>' header");
      std::string format;
      fields >> format;
      if (format != "ocd") throw ParseError(line, "unknown format '" + format + "'");
      long n = parse_int(fields, line, "vertex count");
      long m = parse_int(fields, line, "edge count");
      expect_end(fields, line);
      if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw ParseError(line, "invalid header counts");
      }
      raw.n = static_cast<int>(n);
      raw.color.resize(static_cast<std::size_t>(n));
      raw.color_line.resize(static_cast<std::size_t>(n), 0);
      have_header = true;
      continue;
    }

    auto vertex = [&](const char* what) {
      long v = parse_int(fields, line, what);
      if (v < 1 || v > raw.n) {
        throw ParseError(line, "vertex " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(raw.n));
      }
      return static_cast<Vertex>(v - 1);
    };

    if (tag == "e") {
      Vertex u = vertex("edge endpoint");
      Vertex v = vertex("edge endpoint");
      expect_end(fields, line);
      if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u + 1));
      raw.edges.emplace_back(u, v);
    } else if (tag == "n" && allow_colors) {
      Vertex v = vertex("vertex");
      long c = parse_int(fields, line, "color");
      expect_end(fields, line);
      if (c < 1 || c > std::numeric_limits<int>::max()) {
        throw ParseError(line, "color must be a positive integer");
      }
      if (raw.color[v] && *raw.color[v] != c) {
        throw ParseError(line, "vertex " + std::to_string(v + 1) + " colored twice");
      }
      raw.color[v] = static_cast<int>(c);
      raw.color_line[v] = line;
    } else {
      throw ParseError(line, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(line + 1, "missing 'p ocd <n> <m>' header");
  return raw;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  RawGraph raw = read_raw(in, false);
  return Graph(raw.n, raw.edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

ColoredGraph parse_colored_graph(std::istream& in) {
  RawGraph raw = read_raw(in, true);
  std::vector<int> color(raw.color.size());
  for (std::size_t v = 0; v < raw.color.size(); ++v) {
    if (!raw.color[v]) {
      throw ValidationError("vertex " + std::to_string(v + 1) + " has no color line");
    }
    color[v] = *raw.color[v];
  }
  return ColoredGraph(Graph(raw.n, raw.edges), std::move(color));
}

ColoredGraph parse_colored_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_colored_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p ocd " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_colored_graph(std::ostream& out, const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  out << "p ocd " << g.n() << ' ' << g.m() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) out << "n " << v + 1 << ' ' << cg.color(v) << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::string to_text(const ColoredGraph& cg) {
  std::ostringstream out;
  write_colored_graph(out, cg);
  return out.str();
}

// ---------------------------------------------------------------------------
// Structure

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.check_range(g.n());
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (Vertex v : s) index[v] = next++;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    }
  }
  return Graph(next, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    auto& comp = components.emplace_back();
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace ocdlab
