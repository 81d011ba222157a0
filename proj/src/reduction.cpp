#include "ocdlab/reduction.hpp"

#include <sstream>

#include "ocdlab/domination.hpp"
#include "ocdlab/mcis.hpp"

namespace ocdlab {

std::string describe(const VertexRole& role) {
  std::ostringstream out;
  switch (role.kind) {
    case RoleKind::kOriginal:
      out << "original(class=" << role.color_class << ",v=" << role.source + 1 << ")";
      break;
    case RoleKind::kEdge:
      out << "edge(" << role.edge.first + 1 << "," << role.edge.second + 1 << ")";
      break;
    case RoleKind::kX1: out << "x1(class=" << role.color_class << ")"; break;
    case RoleKind::kX2: out << "x2(class=" << role.color_class << ")"; break;
    case RoleKind::kU: out << "u(class=" << role.color_class << ")"; break;
    case RoleKind::kPath:
      out << "path(class=" << role.color_class << ",pos=" << role.position << ")";
      break;
    case RoleKind::kR: out << "r"; break;
    case RoleKind::kRPrime: out << "r'"; break;
    case RoleKind::kRPrimePrime: out << "r''"; break;
  }
  return out.str();
}

ReducedInstance::ReducedInstance(ColoredGraph source, GadgetOptions options)
    : source_(std::move(source)), options_(options), edges_(source_.graph().edges()) {}

Vertex ReducedInstance::edge_vertex(std::size_t index) const {
  return source_.graph().n() + static_cast<Vertex>(index);
}

Vertex ReducedInstance::class_base(int c) const {
  return source_.graph().n() + static_cast<Vertex>(edges_.size()) +
         kGadgetVerticesPerClass * (c - 1);
}

ReducedInstance build_reduction(const ColoredGraph& cg, GadgetOptions options) {
  ReducedInstance ri(cg, options);
  const Graph& g = cg.graph();
  const int k = cg.k();
  const int total = ri.r_double_prime() + 1;

  std::vector<VertexRole> roles(static_cast<std::size_t>(total));
  std::vector<std::pair<Vertex, Vertex>> edges;

  for (Vertex v = 0; v < g.n(); ++v) {
    roles[v] = {.kind = RoleKind::kOriginal, .color_class = cg.color(v), .source = v};
  }

  // Subdivide every source edge and hang the middle vertex on r.
  for (std::size_t i = 0; i < ri.source_edges().size(); ++i) {
    auto [a, b] = ri.source_edges()[i];
    Vertex mid = ri.edge_vertex(i);
    roles[mid] = {.kind = RoleKind::kEdge, .edge = {a, b}};
    edges.emplace_back(a, mid);
    edges.emplace_back(mid, b);
    edges.emplace_back(mid, ri.r());
  }

  for (int c = 1; c <= k; ++c) {
    roles[ri.x1(c)] = {.kind = RoleKind::kX1, .color_class = c};
    roles[ri.x2(c)] = {.kind = RoleKind::kX2, .color_class = c};
    roles[ri.u(c)] = {.kind = RoleKind::kU, .color_class = c};
    for (Vertex v : cg.color_class(c)) {
      edges.emplace_back(v, ri.x1(c));
      edges.emplace_back(v, ri.x2(c));
      edges.emplace_back(v, ri.u(c));
    }
    for (int pos = 1; pos <= kPathVertices; ++pos) {
      roles[ri.path(c, pos)] = {.kind = RoleKind::kPath, .color_class = c, .position = pos};
      edges.emplace_back(ri.path(c, pos), ri.u(c));
      if (pos > 1) edges.emplace_back(ri.path(c, pos - 1), ri.path(c, pos));
    }
    edges.emplace_back(ri.x1(c), ri.path(c, 1));
    edges.emplace_back(ri.x2(c), ri.path(c, options.x_attachment == XAttachment::kSharedFirst
                                                ? 1
                                                : 2));
    edges.emplace_back(ri.path(c, kPathVertices), ri.r_prime());
  }

  roles[ri.r()] = {.kind = RoleKind::kR};
  roles[ri.r_prime()] = {.kind = RoleKind::kRPrime};
  roles[ri.r_double_prime()] = {.kind = RoleKind::kRPrimePrime};
  edges.emplace_back(ri.r_prime(), ri.r_double_prime());

  ri.gprime_ = Graph(total, edges);
  ri.roles_ = std::move(roles);
  return ri;
}

VertexSet forward_witness(const ReducedInstance& ri, const VertexSet& s) {
  if (!is_multicolored_is(ri.source(), s)) {
    throw ContractViolation("forward_witness requires a multicolored independent set");
  }
  VertexSet d{ri.r(), ri.r_double_prime()};
  for (int c = 1; c <= ri.k(); ++c) d.insert(ri.u(c));
  for (Vertex v : s) d.insert(ri.original(v));
  return d;
}

VertexSet backward_extract(const ReducedInstance& ri, const VertexSet& d) {
  d.check_range(ri.gprime().n());
  if (static_cast<int>(d.size()) > ri.budget()) {
    throw ContractViolation("backward_extract: set of size " + std::to_string(d.size()) +
                            " exceeds budget " + std::to_string(ri.budget()));
  }
  if (!is_ocd(ri.gprime(), d)) {
    throw ContractViolation("backward_extract requires an outer-connected dominating set");
  }
  VertexSet s;
  for (Vertex v : d) {
    if (ri.role(v).kind == RoleKind::kOriginal) s.insert(ri.role(v).source);
  }
  if (!is_multicolored_is(ri.source(), s)) {
    std::ostringstream msg;
    msg << "OCD set of size " << d.size() << " within budget " << ri.budget()
        << " does not yield a multicolored independent set; set = {";
    bool first = true;
    for (Vertex v : d) {
      msg << (first ? "" : ", ") << describe(ri.role(v));
      first = false;
    }
    msg << "}";
    throw LemmaFalsification(msg.str());
  }
  return s;
}

}  // namespace ocdlab
