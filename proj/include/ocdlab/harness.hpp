#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocdlab/graph.hpp"
#include "ocdlab/reduction.hpp"

namespace ocdlab {

enum class SweepMode { kRandom, kExhaustive };

struct SweepConfig {
  int k = 2;
  int class_size = 1;
  double edge_probability = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  SweepMode mode = SweepMode::kRandom;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int jobs = 0;
  /// Per exact solve, in seconds.
  double timeout_seconds = 60.0;
  GadgetOptions gadget;

  /// Throws ContractViolation describing the first broken invariant.
  void validate() const;
};

inline constexpr int kExhaustiveMaxVertices = 6;

/// Deterministic in (seed, trial_index). Vertices are numbered class by
/// class; each inter-class pair is an edge with the configured probability.
ColoredGraph generate_colored(const SweepConfig& config, std::uint64_t trial_index);

/// Number of instances an exhaustive sweep enumerates: one per subset of
/// inter-class vertex pairs.
std::uint64_t exhaustive_count(const SweepConfig& config);

/// The index-th exhaustive instance: bit i of index selects the i-th
/// inter-class pair in lexicographic order.
ColoredGraph exhaustive_instance(const SweepConfig& config, std::uint64_t index);

enum class Answer { kPresent, kAbsent, kTimedOut };
enum class Verdict { kHolds, kFails, kInconclusive };
enum class Outcome { kPass, kFail, kInconclusive };

std::string_view to_string(Answer a);
std::string_view to_string(Verdict v);
std::string_view to_string(Outcome o);

struct CheckResult {
  bool ok = false;
  std::string error;
};

/// Outcome of running the reduction end to end on one source instance.
struct InstanceRecord {
  std::uint64_t index = 0;
  std::string digest;
  int n = 0;
  int m = 0;
  int k = 0;

  int gprime_vertices = 0;
  int gprime_edges = 0;
  bool size_formula_ok = false;

  int degeneracy = 0;
  bool degeneracy_certified = false;

  bool left_present = false;
  VertexSet left_witness;

  Answer right = Answer::kAbsent;
  VertexSet right_witness;
  std::uint64_t right_nodes = 0;

  Verdict equivalence = Verdict::kInconclusive;
  /// Set when the left side is present.
  std::optional<CheckResult> forward;
  /// Set when the right side is present.
  std::optional<CheckResult> backward;

  Outcome outcome = Outcome::kInconclusive;

  double left_ms = 0.0;
  double right_ms = 0.0;
  double total_ms = 0.0;

  bool degeneracy_ok() const { return degeneracy_certified && degeneracy <= 3; }
  bool falsified() const { return backward && !backward->ok; }
};

struct VerifyOptions {
  double timeout_seconds = 60.0;
  GadgetOptions gadget;
};

/// Builds G', certifies its degeneracy, solves both sides exactly, and
/// cross-checks the witness maps. A timeout yields an inconclusive record,
/// never a verdict.
InstanceRecord verify_instance(const ColoredGraph& cg, const VerifyOptions& options = {});

struct ReportSummary {
  std::uint64_t records = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t equivalent = 0;
  std::uint64_t non_equivalent = 0;
  std::uint64_t forward_failures = 0;
  std::uint64_t falsifications = 0;
  std::uint64_t degeneracy_violations = 0;
  std::uint64_t size_formula_violations = 0;
  int max_degeneracy = 0;

  bool failed_overall() const { return failed > 0; }
};

ReportSummary summarize(const std::vector<InstanceRecord>& records);

struct VerificationReport {
  SweepConfig config;
  std::vector<InstanceRecord> records;
  ReportSummary summary;
  double elapsed_ms = 0.0;
};

/// Runs verify_instance over every generated or enumerated instance on a
/// bounded worker pool. Records come back in index order.
VerificationReport run_sweep(const SweepConfig& config);

/// Worker count: OCDLAB_JOBS if set, else `requested`, else the hardware
/// concurrency (at least 1).
int resolve_jobs(int requested);

/// 64-bit FNV-1a over the canonical colored-graph text, as 16 hex digits.
std::string instance_digest(const ColoredGraph& cg);

}  // namespace ocdlab
