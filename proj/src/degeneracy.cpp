#include "ocdlab/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

namespace ocdlab {

EliminationOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.n();
  EliminationOrdering result;
  result.order.reserve(static_cast<std::size_t>(n));
  if (n == 0) return result;

  std::vector<int> degree(static_cast<std::size_t>(n));
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(g.degree(v));
    max_degree = std::max(max_degree, degree[v]);
  }

  // Ordered buckets keep the lowest-id tie-break without a rescan.
  std::vector<std::set<Vertex>> bucket(static_cast<std::size_t>(max_degree) + 1);
  for (Vertex v = 0; v < n; ++v) bucket[degree[v]].insert(v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);

  int low = 0;
  for (int step = 0; step < n; ++step) {
    while (bucket[low].empty()) ++low;
    Vertex v = *bucket[low].begin();
    bucket[low].erase(bucket[low].begin());
    removed[v] = 1;
    result.order.push_back(v);
    result.d = std::max(result.d, low);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      bucket[degree[u]].erase(u);
      --degree[u];
      bucket[degree[u]].insert(u);
    }
    // A neighbor may now sit one bucket below the current minimum.
    if (low > 0) --low;
  }
  return result;
}

bool verify_ordering(const Graph& g, const EliminationOrdering& cert) {
  const int n = g.n();
  if (static_cast<int>(cert.order.size()) != n || cert.d < 0) return false;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = cert.order[i];
    if (v < 0 || v >= n || position[v] != -1) return false;
    position[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    int later = 0;
    for (Vertex u : g.neighbors(v)) {
      if (position[u] > position[v]) ++later;
    }
    if (later > cert.d) return false;
  }
  return true;
}

int naive_degeneracy(const Graph& g) {
  const int n = g.n();
  if (n > kNaiveDegeneracyMaxVertices) {
    throw ContractViolation("naive_degeneracy supports at most " +
                            std::to_string(kNaiveDegeneracyMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> row(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) row[v] |= std::uint32_t{1} << u;
  }
  int best = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    int min_degree = n;
    for (Vertex v = 0; v < n; ++v) {
      if (subset >> v & 1u) {
        min_degree = std::min(min_degree, std::popcount(row[v] & subset));
      }
    }
    best = std::max(best, min_degree);
  }
  return best;
}

}  // namespace ocdlab
