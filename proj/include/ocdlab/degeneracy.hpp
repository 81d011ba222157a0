#pragma once

#include <vector>

#include "ocdlab/graph.hpp"

namespace ocdlab {

/// Removal order plus the claimed bound d: each vertex has at most d
/// neighbors that appear later in `order`.
struct EliminationOrdering {
  std::vector<Vertex> order;
  int d = 0;
};

/// Greedy min-degree peeling. Ties go to the lowest vertex id, so the
/// certificate is reproducible. The returned d is the exact degeneracy.
EliminationOrdering degeneracy_ordering(const Graph& g);

/// Checks that cert.order is a permutation of g's vertices and that no
/// vertex has more than cert.d later neighbors.
bool verify_ordering(const Graph& g, const EliminationOrdering& cert);

/// Definition-level oracle: max over nonempty vertex subsets of the induced
/// minimum degree. Exponential; requires n <= 16.
int naive_degeneracy(const Graph& g);

inline constexpr int kNaiveDegeneracyMaxVertices = 16;

}  // namespace ocdlab
