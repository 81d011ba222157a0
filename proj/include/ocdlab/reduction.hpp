#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ocdlab/graph.hpp"

namespace ocdlab {

enum class RoleKind {
  kOriginal,
  kEdge,
  kX1,
  kX2,
  kU,
  kPath,
  kR,
  kRPrime,
  kRPrimePrime,
};

/// What a gadget vertex stands for. Only the fields meaningful for `kind`
/// are set: color_class for per-class vertices, source for originals, edge
/// for subdivision vertices, position (1..5) for path vertices.
struct VertexRole {
  RoleKind kind = RoleKind::kOriginal;
  int color_class = 0;
  Vertex source = -1;
  std::pair<Vertex, Vertex> edge{-1, -1};
  int position = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string describe(const VertexRole& role);

/// Where x1 and x2 of each class attach to the class path. The default
/// hangs both on p1; the alternative hangs x1 on p1 and x2 on p2.
enum class XAttachment { kSharedFirst, kSplitFirstSecond };

struct GadgetOptions {
  XAttachment x_attachment = XAttachment::kSharedFirst;
};

inline constexpr int kPathVertices = 5;
inline constexpr int kGadgetVerticesPerClass = 3 + kPathVertices;

/// The gadget graph together with role labels, the source instance, and
/// the OCD budget 2k+2.
///
/// Numbering: originals 0..n-1 in source order, then one vertex per source
/// edge (edges sorted), then per class c = 1..k the block
/// x1, x2, u, p1..p5, and finally r, r', r''.
class ReducedInstance {
 public:
  const Graph& gprime() const { return gprime_; }
  const ColoredGraph& source() const { return source_; }
  const std::vector<VertexRole>& roles() const { return roles_; }
  const VertexRole& role(Vertex v) const { return roles_[v]; }
  int budget() const { return 2 * source_.k() + 2; }
  int k() const { return source_.k(); }
  GadgetOptions options() const { return options_; }

  /// Source edges in the order their subdivision vertices are numbered.
  const std::vector<std::pair<Vertex, Vertex>>& source_edges() const { return edges_; }

  Vertex original(Vertex v) const { return v; }
  Vertex edge_vertex(std::size_t index) const;
  Vertex x1(int c) const { return class_base(c); }
  Vertex x2(int c) const { return class_base(c) + 1; }
  Vertex u(int c) const { return class_base(c) + 2; }
  Vertex path(int c, int position) const { return class_base(c) + 2 + position; }
  Vertex r() const { return class_base(k() + 1); }
  Vertex r_prime() const { return r() + 1; }
  Vertex r_double_prime() const { return r() + 2; }

 private:
  friend ReducedInstance build_reduction(const ColoredGraph& cg, GadgetOptions options);

  ReducedInstance(ColoredGraph source, GadgetOptions options);
  Vertex class_base(int c) const;

  ColoredGraph source_;
  GadgetOptions options_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  Graph gprime_;
  std::vector<VertexRole> roles_;
};

ReducedInstance build_reduction(const ColoredGraph& cg, GadgetOptions options = {});

/// Raised when a structural claim about the gadget is contradicted by a
/// concrete set. Never caught and repaired inside the library.
class LemmaFalsification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps a multicolored independent set s of the source to
/// {r, r''} + {u_1..u_k} + s. Throws ContractViolation unless s is one.
VertexSet forward_witness(const ReducedInstance& ri, const VertexSet& s);

/// Reads the source vertices back out of an OCD set of G' within budget.
/// Throws ContractViolation if d is not such a set, and LemmaFalsification
/// if d's original vertices are not a multicolored independent set.
VertexSet backward_extract(const ReducedInstance& ri, const VertexSet& d);

}  // namespace ocdlab
