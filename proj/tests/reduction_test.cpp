#include <doctest.h>

#include <map>

#include "ocdlab/degeneracy.hpp"
#include "ocdlab/domination.hpp"
#include "ocdlab/mcis.hpp"
#include "ocdlab/reduction.hpp"
#include "test_support.hpp"

using namespace ocdlab;
using namespace ocdlab::testing;

namespace {

ColoredGraph colored(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                     std::vector<int> colors) {
  return ColoredGraph(Graph(n, edges), std::move(colors));
}

ColoredGraph random_colored(int k, int max_class, double p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, max_class);
  std::vector<int> colors;
  for (int c = 1; c <= k; ++c) {
    for (int i = size(rng); i > 0; --i) colors.push_back(c);
  }
  std::shuffle(colors.begin(), colors.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int n = static_cast<int>(colors.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (colors[u] != colors[v] && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return colored(n, edges, colors);
}

/// All multicolored independent sets by brute force over vertex subsets.
std::vector<VertexSet> all_mcis(const ColoredGraph& cg) {
  std::vector<VertexSet> out;
  const int n = cg.graph().n();
  Matrix m(cg.graph());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != cg.k()) continue;
    std::vector<char> seen(static_cast<std::size_t>(cg.k()) + 1, 0);
    bool ok = true;
    std::vector<Vertex> members;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1u)) continue;
      ok = !seen[cg.color(v)];
      seen[cg.color(v)] = 1;
      for (Vertex u : members) ok = ok && !m.adj[u][v];
      members.push_back(v);
    }
    if (ok) out.emplace_back(members);
  }
  return out;
}

const XAttachment kBothAttachments[] = {XAttachment::kSharedFirst,
                                        XAttachment::kSplitFirstSecond};

}  // namespace

TEST_CASE("two isolated vertices of different colors") {
  ReducedInstance ri = build_reduction(colored(2, {}, {1, 2}));
  CHECK(ri.gprime().n() == 21);
  CHECK(ri.gprime().m() == 31);
  CHECK(ri.budget() == 6);

  VertexSet d = forward_witness(ri, {0, 1});
  CHECK(d == VertexSet{0, 1, ri.u(1), ri.u(2), ri.r(), ri.r_double_prime()});
  CHECK(is_ocd(ri.gprime(), d));
  CHECK(backward_extract(ri, d) == VertexSet{0, 1});
}

TEST_CASE("single edge: subdivision vertex and negative instance") {
  ColoredGraph cg = colored(2, {{0, 1}}, {1, 2});
  ReducedInstance ri = build_reduction(cg);
  CHECK(ri.gprime().n() == 22);
  CHECK(ri.gprime().m() == 34);
  Vertex mid = ri.edge_vertex(0);
  CHECK(mid == 2);
  auto nb = ri.gprime().neighbors(mid);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 1, ri.r()});

  CHECK_FALSE(find_mcis(cg).has_value());
  SolveResult res = min_ocd_bnb(ri.gprime(), ri.budget());
  CHECK(res.status == SolveStatus::kNoSolutionWithinBound);
  CHECK_FALSE(has_ocd_at_most(ri.gprime(), ri.budget()).has_value());
}

TEST_CASE("one color, one vertex") {
  ReducedInstance ri = build_reduction(colored(1, {}, {1}));
  CHECK(ri.budget() == 4);
  VertexSet d = forward_witness(ri, {0});
  CHECK(d.size() == 4);
  CHECK(is_ocd(ri.gprime(), d));
  CHECK(min_ocd_bnb(ri.gprime()).optimum <= 4);
}

TEST_CASE("vertex numbering is canonical") {
  ReducedInstance ri = build_reduction(colored(3, {{2, 0}, {1, 2}}, {1, 2, 3}));
  const int n = 3, m = 2;
  CHECK(ri.source_edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 2}});
  CHECK(ri.edge_vertex(0) == n);
  CHECK(ri.edge_vertex(1) == n + 1);
  for (int c = 1; c <= 3; ++c) {
    const Vertex base = n + m + 8 * (c - 1);
    CHECK(ri.x1(c) == base);
    CHECK(ri.x2(c) == base + 1);
    CHECK(ri.u(c) == base + 2);
    for (int pos = 1; pos <= 5; ++pos) CHECK(ri.path(c, pos) == base + 2 + pos);
  }
  CHECK(ri.r() == n + m + 24);
  CHECK(ri.r_double_prime() == ri.gprime().n() - 1);
}

TEST_CASE("roles describe every vertex") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    ColoredGraph cg = random_colored(1 + trial % 4, 3, 0.5, rng);
    ReducedInstance ri = build_reduction(cg);
    std::map<RoleKind, int> counts;
    for (const VertexRole& role : ri.roles()) ++counts[role.kind];
    const int k = cg.k();
    CHECK(counts[RoleKind::kOriginal] == cg.graph().n());
    CHECK(counts[RoleKind::kEdge] == cg.graph().m());
    CHECK(counts[RoleKind::kX1] == k);
    CHECK(counts[RoleKind::kX2] == k);
    CHECK(counts[RoleKind::kU] == k);
    CHECK(counts[RoleKind::kPath] == 5 * k);
    CHECK(counts[RoleKind::kR] == 1);
    CHECK(counts[RoleKind::kRPrime] == 1);
    CHECK(counts[RoleKind::kRPrimePrime] == 1);
    for (Vertex v = 0; v < cg.graph().n(); ++v) {
      CHECK(ri.role(v).source == v);
      CHECK(ri.role(v).color_class == cg.color(v));
    }
  }
  CHECK(describe(VertexRole{.kind = RoleKind::kPath, .color_class = 2, .position = 3}) ==
        "path(class=2,pos=3)");
  CHECK(describe(VertexRole{.kind = RoleKind::kEdge, .edge = {0, 4}}) == "edge(1,5)");
}

TEST_CASE("closed-form sizes under both attachments") {
  std::mt19937_64 rng(5);
  for (XAttachment attach : kBothAttachments) {
    for (int trial = 0; trial < 80; ++trial) {
      ColoredGraph cg = random_colored(1 + trial % 5, 4, 0.4, rng);
      ReducedInstance ri = build_reduction(cg, {attach});
      const int n = cg.graph().n(), m = cg.graph().m(), k = cg.k();
      CHECK(ri.gprime().n() == n + m + 8 * k + 3);
      CHECK(ri.gprime().m() == 3 * m + 3 * n + 12 * k + 1);
    }
  }
}

TEST_CASE("local structure of the gadget") {
  std::mt19937_64 rng(8);
  for (XAttachment attach : kBothAttachments) {
    for (int trial = 0; trial < 40; ++trial) {
      ColoredGraph cg = random_colored(2 + trial % 3, 3, 0.5, rng);
      ReducedInstance ri = build_reduction(cg, {attach});
      const Graph& gp = ri.gprime();
      for (std::size_t i = 0; i < ri.source_edges().size(); ++i) {
        CHECK(gp.degree(ri.edge_vertex(i)) == 3);
      }
      CHECK(gp.degree(ri.r_double_prime()) == 1);
      CHECK(gp.degree(ri.r_prime()) == ri.k() + 1);
      CHECK(gp.degree(ri.r()) == cg.graph().m());
      for (int c = 1; c <= ri.k(); ++c) {
        for (int pos = 1; pos <= 5; ++pos) CHECK(gp.degree(ri.path(c, pos)) <= 4);
        CHECK(gp.adjacent(ri.x1(c), ri.path(c, 1)));
        CHECK(gp.adjacent(ri.x2(c), ri.path(c, attach == XAttachment::kSharedFirst ? 1 : 2)));
        CHECK(gp.adjacent(ri.path(c, 5), ri.r_prime()));
      }
      // An original sees x1, x2, u of its class plus one vertex per incident edge.
      for (Vertex v = 0; v < cg.graph().n(); ++v) {
        const int c = cg.color(v);
        CHECK(gp.degree(v) == cg.graph().degree(v) + 3);
        CHECK(gp.adjacent(v, ri.x1(c)));
        CHECK(gp.adjacent(v, ri.x2(c)));
        CHECK(gp.adjacent(v, ri.u(c)));
        for (Vertex w : gp.neighbors(v)) {
          RoleKind kind = ri.role(w).kind;
          CHECK(kind != RoleKind::kOriginal);
          if (kind == RoleKind::kEdge) {
            auto [a, b] = ri.role(w).edge;
            CHECK((a == v || b == v));
          }
        }
      }
    }
  }
}

TEST_CASE("gadget degeneracy is at most three") {
  std::mt19937_64 rng(12);
  for (XAttachment attach : kBothAttachments) {
    for (int trial = 0; trial < 100; ++trial) {
      ColoredGraph cg = random_colored(1 + trial % 5, 4, 0.2 + 0.2 * (trial % 4), rng);
      ReducedInstance ri = build_reduction(cg, {attach});
      EliminationOrdering cert = degeneracy_ordering(ri.gprime());
      CHECK(verify_ordering(ri.gprime(), cert));
      CHECK(cert.d <= 3);
      if (ri.gprime().n() <= kNaiveDegeneracyMaxVertices) {
        CHECK(naive_degeneracy(ri.gprime()) == cert.d);
      }
    }
  }
}

TEST_CASE("forward witness is an OCD set within budget for every MCIS") {
  std::mt19937_64 rng(17);
  for (XAttachment attach : kBothAttachments) {
    for (int trial = 0; trial < 60; ++trial) {
      ColoredGraph cg = random_colored(1 + trial % 4, 3, 0.4, rng);
      ReducedInstance ri = build_reduction(cg, {attach});
      Matrix m(ri.gprime());
      for (const VertexSet& s : all_mcis(cg)) {
        VertexSet d = forward_witness(ri, s);
        CHECK(static_cast<int>(d.size()) == ri.budget());
        CHECK(is_ocd(ri.gprime(), d));
        if (ri.gprime().n() <= 32) {
          std::uint32_t mask = 0;
          for (Vertex v : d) mask |= 1u << v;
          CHECK(oracle_is_ocd(m, mask));
        }
        CHECK(backward_extract(ri, d) == s);
      }
    }
  }
}

TEST_CASE("forward_witness and backward_extract preconditions") {
  ColoredGraph cg = colored(2, {{0, 1}}, {1, 2});
  ReducedInstance ri = build_reduction(cg);
  CHECK_THROWS_AS(forward_witness(ri, {0, 1}), ContractViolation);
  CHECK_THROWS_AS(forward_witness(ri, {0}), ContractViolation);

  ReducedInstance ok = build_reduction(colored(2, {}, {1, 2}));
  CHECK_THROWS_AS(backward_extract(ok, {0}), ContractViolation);  // not OCD
  CHECK_THROWS_AS(backward_extract(ok, VertexSet::all(ok.gprime().n())), ContractViolation);
  CHECK_THROWS_AS(backward_extract(ok, {99}), ContractViolation);
}

TEST_CASE("gadget admits a small OCD set on an instance without a multicolored independent set") {
  // a1, a2 in class 1 and b in class 2, both a's adjacent to b.
  ColoredGraph cg = colored(3, {{0, 2}, {1, 2}}, {1, 1, 2});
  REQUIRE_FALSE(find_mcis(cg).has_value());
  for (XAttachment attach : kBothAttachments) {
    ReducedInstance ri = build_reduction(cg, {attach});
    // Keep a1 and b, and the subdivision vertex of a1b, so the remainder
    // stays tied together through r.
    VertexSet d{0, 2, ri.edge_vertex(0), ri.u(1), ri.u(2), ri.r_double_prime()};
    CHECK(static_cast<int>(d.size()) == ri.budget());
    CHECK(is_ocd(ri.gprime(), d));
    std::uint32_t mask = 0;
    for (Vertex v : d) mask |= 1u << v;
    CHECK(oracle_is_ocd(Matrix(ri.gprime()), mask));
    CHECK_THROWS_AS(backward_extract(ri, d), LemmaFalsification);
    CHECK(has_ocd_at_most(ri.gprime(), ri.budget()).has_value());
  }
}
