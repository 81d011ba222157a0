#include "ocdlab/mcis.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ocdlab {

bool is_multicolored_is(const ColoredGraph& cg, const VertexSet& s) {
  const Graph& g = cg.graph();
  if (!s.empty() && (s.members().front() < 0 || s.members().back() >= g.n())) {
    return false;
  }
  if (static_cast<int>(s.size()) != cg.k()) return false;
  std::vector<char> seen_color(static_cast<std::size_t>(cg.k()) + 1, 0);
  for (Vertex v : s) {
    if (seen_color[cg.color(v)]) return false;
    seen_color[cg.color(v)] = 1;
  }
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (s.contains(v)) return false;
    }
  }
  return true;
}

namespace {

bool extend(const ColoredGraph& cg, const std::vector<int>& class_order, std::size_t depth,
            std::vector<int>& conflicts, std::vector<Vertex>& picked) {
  if (depth == class_order.size()) return true;
  const Graph& g = cg.graph();
  for (Vertex v : cg.color_class(class_order[depth])) {
    if (conflicts[v] > 0) continue;
    picked.push_back(v);
    for (Vertex u : g.neighbors(v)) ++conflicts[u];
    if (extend(cg, class_order, depth + 1, conflicts, picked)) return true;
    for (Vertex u : g.neighbors(v)) --conflicts[u];
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_mcis(const ColoredGraph& cg) {
  std::vector<int> class_order(static_cast<std::size_t>(cg.k()));
  std::iota(class_order.begin(), class_order.end(), 1);
  std::stable_sort(class_order.begin(), class_order.end(), [&](int a, int b) {
    return cg.color_class(a).size() < cg.color_class(b).size();
  });
  std::vector<int> conflicts(static_cast<std::size_t>(cg.graph().n()), 0);
  std::vector<Vertex> picked;
  if (!extend(cg, class_order, 0, conflicts, picked)) return std::nullopt;
  return VertexSet(std::move(picked));
}

}  // namespace ocdlab
