#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "ocdlab/graph.hpp"

namespace ocdlab {

enum class SolveStatus {
  kOptimal,
  /// An upper bound was supplied and the optimum exceeds it.
  kNoSolutionWithinBound,
  /// The problem has no solution at all (CDS on a disconnected graph).
  kInfeasible,
  /// The deadline passed; optimum/witness hold the incumbent, if any.
  kTimedOut,
};

std::string_view to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kOptimal;
  int optimum = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

struct SolveOptions {
  /// No deadline when empty.
  std::optional<std::chrono::duration<double>> timeout;
};

class SolveTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_dominating(const Graph& g, const VertexSet& d);

/// Dominating, and V \ d induces a connected (possibly empty) subgraph.
bool is_ocd(const Graph& g, const VertexSet& d);

/// Dominating, and d itself induces a connected subgraph. The empty set only
/// qualifies on the empty graph.
bool is_connected_dominating(const Graph& g, const VertexSet& d);

inline constexpr int kBruteForceMaxVertices = 20;

/// Enumerates subsets by increasing size; the witness is the
/// lexicographically smallest optimum. Requires n <= 20.
SolveResult min_ocd_brute(const Graph& g);
SolveResult min_dominating(const Graph& g);
SolveResult min_connected_dominating(const Graph& g);

/// Exact branch and bound for the minimum outer-connected dominating set.
/// With an upper bound, reports kNoSolutionWithinBound when the optimum
/// exceeds it; otherwise the result is the exact optimum.
SolveResult min_ocd_bnb(const Graph& g, std::optional<int> upper_bound = std::nullopt,
                        const SolveOptions& options = {});

/// Some OCD set of size at most budget, or nullopt if none exists.
/// Throws SolveTimeout if the deadline passes before the question is settled.
std::optional<VertexSet> has_ocd_at_most(const Graph& g, int budget,
                                         const SolveOptions& options = {});

}  // namespace ocdlab
