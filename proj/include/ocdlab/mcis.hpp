#pragma once

#include <optional>

#include "ocdlab/graph.hpp"

namespace ocdlab {

/// Exactly one vertex of every color class, pairwise nonadjacent.
bool is_multicolored_is(const ColoredGraph& cg, const VertexSet& s);

/// Exact depth-first search over color classes taken smallest first, with
/// conflict pruning against the vertices picked so far.
std::optional<VertexSet> find_mcis(const ColoredGraph& cg);

}  // namespace ocdlab
