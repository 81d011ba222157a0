#include "ocdlab/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ocdlab/bits.hpp"

namespace ocdlab {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kNoSolutionWithinBound: return "no_solution_within_bound";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimedOut: return "timed_out";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<char> membership(const Graph& g, const VertexSet& d) {
  d.check_range(g.n());
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : d) in[v] = 1;
  return in;
}

bool connected_within(const Graph& g, const std::vector<char>& keep, char value) {
  Vertex start = -1;
  int total = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (keep[v] == value) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (total <= 1) return true;
  std::vector<char> seen(keep.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (keep[v] == value && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == total;
}

bool dominating(const Graph& g, const std::vector<char>& in) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in[v]) continue;
    auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return in[u]; })) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive search over 32-bit masks.

using Mask = std::uint32_t;

struct MaskGraph {
  int n;
  std::vector<Mask> closed;
  std::vector<Mask> open;
  Mask all;

  explicit MaskGraph(const Graph& g)
      : n(g.n()),
        closed(static_cast<std::size_t>(g.n())),
        open(static_cast<std::size_t>(g.n())),
        all(g.n() == 0 ? 0 : (Mask{1} << (g.n() - 1) << 1) - 1) {
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = Mask{1} << v;
      for (Vertex u : g.neighbors(v)) {
        open[v] |= Mask{1} << u;
        closed[v] |= Mask{1} << u;
      }
    }
  }

  bool dominates(Mask d) const {
    Mask covered = d;
    for (Mask w = d; w != 0; w &= w - 1) covered |= closed[std::countr_zero(w)];
    return covered == all;
  }

  bool connected(Mask within) const {
    if (within == 0) return true;
    Mask reached = within & (~within + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask w = frontier; w != 0; w &= w - 1) next |= open[std::countr_zero(w)];
      next &= within & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == within;
  }
};

/// Smallest subset accepted by `accept`, scanning sizes upward and each size
/// in lexicographic order.
SolveResult brute_force(const Graph& g, const char* name,
                        const std::function<bool(const MaskGraph&, Mask)>& accept) {
  if (g.n() > kBruteForceMaxVertices) {
    throw ContractViolation(std::string(name) + " supports at most " +
                            std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                            std::to_string(g.n()));
  }
  const auto start = Clock::now();
  const MaskGraph mg(g);
  const int n = g.n();
  SolveResult result;
  std::vector<int> pick;
  for (int size = 0; size <= n; ++size) {
    pick.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask mask = 0;
      for (int v : pick) mask |= Mask{1} << v;
      ++result.nodes_explored;
      if (accept(mg, mask)) {
        result.optimum = size;
        result.witness = VertexSet(std::vector<Vertex>(pick.begin(), pick.end()));
        result.elapsed_ms = ms_since(start);
        return result;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  result.status = SolveStatus::kInfeasible;
  result.elapsed_ms = ms_since(start);
  return result;
}

// ---------------------------------------------------------------------------
// Branch and bound.

template <class Bits>
class OcdSearch {
 public:
  OcdSearch(const Graph& g, std::optional<int> upper_bound, const SolveOptions& options)
      : bg_(g), best_(g.n()) {
    if (upper_bound) {
      best_size_ = *upper_bound + 1;
    } else {
      best_ = bg_.all;
      best_size_ = bg_.n;
      found_ = true;
    }
    if (options.timeout) {
      deadline_ = Clock::now() +
                  std::chrono::duration_cast<Clock::duration>(*options.timeout);
    }
  }

  void run() { search(bg_.empty(), bg_.empty()); }

  bool found() const { return found_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  int best_size() const { return best_size_; }

  VertexSet witness() const {
    std::vector<Vertex> members;
    best_.for_each([&](int v) { members.push_back(v); });
    return VertexSet(std::move(members));
  }

 private:
  void record(const Bits& d, int size) {
    best_ = d;
    best_size_ = size;
    found_ = true;
  }

  /// `chosen` is the partial solution; `excluded` holds vertices already
  /// ruled out of it, which must therefore survive in the final remainder.
  void search(Bits chosen, Bits excluded) {
    ++nodes_;
    if (deadline_ && (nodes_ & 1023u) == 1 && Clock::now() >= *deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return;

    int size = chosen.count();
    if (size >= best_size_) return;

    Bits rest = bg_.all - chosen;
    int largest_piece = 0;
    if (excluded.any()) {
      // The remainder only shrinks, so it must stay inside the component
      // holding the excluded vertices; everything else joins the solution.
      Bits piece = bg_.component(excluded.first(), rest);
      if (excluded.intersects(bg_.all - piece)) return;
      if (!(piece == rest)) {
        chosen |= rest - piece;
        rest = piece;
        size = chosen.count();
        if (size >= best_size_) return;
      }
      largest_piece = rest.count();
    } else {
      Bits left = rest;
      while (left.any()) {
        Bits piece = bg_.component(left.first(), left);
        largest_piece = std::max(largest_piece, piece.count());
        left.subtract(piece);
      }
    }

    Bits undominated = bg_.all - bg_.dominated_by(chosen);
    if (undominated.none()) {
      // Best completion keeps the largest remainder component.
      Bits keep = bg_.empty();
      int keep_size = -1;
      Bits left = rest;
      while (left.any()) {
        Bits piece = bg_.component(left.first(), left);
        int piece_size = piece.count();
        if (piece_size > keep_size) {
          keep = piece;
          keep_size = piece_size;
        }
        left.subtract(piece);
      }
      Bits solution = bg_.all - keep;
      int solution_size = solution.count();
      if (solution_size < best_size_) record(solution, solution_size);
      return;
    }

    int bound = rest.count() - largest_piece;

    // Undominated vertices with pairwise disjoint candidate sets each need
    // their own solution vertex.
    Bits used = bg_.empty();
    int packing = 0;
    bool dead_end = false;
    undominated.for_each([&](int u) {
      if (dead_end) return;
      Bits candidates = bg_.closed[u] - excluded;
      if (candidates.none()) {
        dead_end = true;
        return;
      }
      if (!candidates.intersects(used)) {
        ++packing;
        used |= candidates;
      }
    });
    if (dead_end) return;
    bound = std::max(bound, packing);

    int max_cover = 0;
    (bg_.all - excluded - chosen).for_each([&](int w) {
      max_cover = std::max(max_cover, (bg_.closed[w] & undominated).count());
    });
    const int uncovered = undominated.count();
    bound = std::max(bound, (uncovered + max_cover - 1) / max_cover);
    if (size + bound >= best_size_) return;

    const int pivot = undominated.first();
    Bits candidates = bg_.closed[pivot] - excluded;
    candidates.for_each([&](int w) {
      if (timed_out_) return;
      Bits next = chosen;
      next.set(w);
      search(next, excluded);
      excluded.set(w);
    });
  }

  bits::BitGraph<Bits> bg_;
  Bits best_;
  int best_size_ = 0;
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
};

template <class Bits>
SolveResult run_bnb(const Graph& g, std::optional<int> upper_bound,
                    const SolveOptions& options) {
  const auto start = Clock::now();
  OcdSearch<Bits> search(g, upper_bound, options);
  search.run();
  SolveResult result;
  result.nodes_explored = search.nodes();
  if (search.found()) {
    result.optimum = search.best_size();
    result.witness = search.witness();
  }
  if (search.timed_out()) {
    result.status = SolveStatus::kTimedOut;
  } else if (!search.found()) {
    result.status = SolveStatus::kNoSolutionWithinBound;
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  return dominating(g, membership(g, d));
}

bool is_ocd(const Graph& g, const VertexSet& d) {
  auto in = membership(g, d);
  return dominating(g, in) && connected_within(g, in, 0);
}

bool is_connected_dominating(const Graph& g, const VertexSet& d) {
  auto in = membership(g, d);
  if (d.empty()) return g.n() == 0;
  return dominating(g, in) && connected_within(g, in, 1);
}

SolveResult min_ocd_brute(const Graph& g) {
  return brute_force(g, "min_ocd_brute", [](const MaskGraph& mg, Mask d) {
    return mg.dominates(d) && mg.connected(mg.all & ~d);
  });
}

SolveResult min_dominating(const Graph& g) {
  return brute_force(g, "min_dominating",
                     [](const MaskGraph& mg, Mask d) { return mg.dominates(d); });
}

SolveResult min_connected_dominating(const Graph& g) {
  return brute_force(g, "min_connected_dominating", [](const MaskGraph& mg, Mask d) {
    if (d == 0) return mg.n == 0;
    return mg.dominates(d) && mg.connected(d);
  });
}

SolveResult min_ocd_bnb(const Graph& g, std::optional<int> upper_bound,
                        const SolveOptions& options) {
  if (upper_bound && *upper_bound < 0) {
    SolveResult result;
    result.status = SolveStatus::kNoSolutionWithinBound;
    return result;
  }
  if (g.n() <= bits::kWordBits) return run_bnb<bits::SmallBits>(g, upper_bound, options);
  return run_bnb<bits::BlockBits>(g, upper_bound, options);
}

std::optional<VertexSet> has_ocd_at_most(const Graph& g, int budget,
                                         const SolveOptions& options) {
  if (budget < 0) throw ContractViolation("budget must be nonnegative");
  SolveResult result = min_ocd_bnb(g, budget, options);
  switch (result.status) {
    case SolveStatus::kOptimal: return result.witness;
    case SolveStatus::kTimedOut:
      // An incumbent within budget already answers the question.
      if (result.optimum <= budget && is_ocd(g, result.witness)) {
        return result.witness;
      }
      throw SolveTimeout("OCD decision with budget " + std::to_string(budget) +
                         " timed out after " + std::to_string(result.nodes_explored) +
                         " nodes");
    default: return std::nullopt;
  }
}

}  // namespace ocdlab
