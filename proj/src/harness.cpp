#include "ocdlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>

#include "ocdlab/degeneracy.hpp"
#include "ocdlab/domination.hpp"
#include "ocdlab/mcis.hpp"

namespace ocdlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::pair<Vertex, Vertex>> inter_class_pairs(const SweepConfig& config) {
  const int n = config.k * config.class_size;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / config.class_size != v / config.class_size) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

std::vector<int> block_coloring(const SweepConfig& config) {
  std::vector<int> color(static_cast<std::size_t>(config.k * config.class_size));
  for (std::size_t v = 0; v < color.size(); ++v) {
    color[v] = static_cast<int>(v) / config.class_size + 1;
  }
  return color;
}

}  // namespace

void SweepConfig::validate() const {
  if (k < 1) throw ContractViolation("k must be at least 1");
  if (class_size < 1) throw ContractViolation("class size must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw ContractViolation("edge probability must lie in [0, 1]");
  }
  if (trials < 1) throw ContractViolation("trials must be at least 1");
  if (mode == SweepMode::kExhaustive && k * class_size > kExhaustiveMaxVertices) {
    throw ContractViolation("exhaustive mode requires k * class_size <= " +
                            std::to_string(kExhaustiveMaxVertices));
  }
  if (!(timeout_seconds > 0.0)) throw ContractViolation("timeout must be positive");
}

ColoredGraph generate_colored(const SweepConfig& config, std::uint64_t trial_index) {
  // Each trial owns an independent stream, so trials can run in any order.
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(trial_index)));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto pair : inter_class_pairs(config)) {
    const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (draw < config.edge_probability) edges.push_back(pair);
  }
  return ColoredGraph(Graph(config.k * config.class_size, edges), block_coloring(config));
}

std::uint64_t exhaustive_count(const SweepConfig& config) {
  return std::uint64_t{1} << inter_class_pairs(config).size();
}

ColoredGraph exhaustive_instance(const SweepConfig& config, std::uint64_t index) {
  const auto pairs = inter_class_pairs(config);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (index >> i & 1u) edges.push_back(pairs[i]);
  }
  return ColoredGraph(Graph(config.k * config.class_size, edges), block_coloring(config));
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::kPresent: return "present";
    case Answer::kAbsent: return "absent";
    case Answer::kTimedOut: return "timed_out";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string instance_digest(const ColoredGraph& cg) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_text(cg)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

InstanceRecord verify_instance(const ColoredGraph& cg, const VerifyOptions& options) {
  const auto start = Clock::now();
  InstanceRecord rec;
  rec.digest = instance_digest(cg);
  rec.n = cg.graph().n();
  rec.m = static_cast<int>(cg.graph().m());
  rec.k = cg.k();

  const ReducedInstance ri = build_reduction(cg, options.gadget);
  const Graph& gp = ri.gprime();
  rec.gprime_vertices = gp.n();
  rec.gprime_edges = static_cast<int>(gp.m());
  rec.size_formula_ok = rec.gprime_vertices == rec.n + rec.m + 8 * rec.k + 3 &&
                        rec.gprime_edges == 3 * rec.m + 3 * rec.n + 12 * rec.k + 1;

  const EliminationOrdering cert = degeneracy_ordering(gp);
  rec.degeneracy = cert.d;
  rec.degeneracy_certified = verify_ordering(gp, cert);

  auto left_start = Clock::now();
  if (auto s = find_mcis(cg)) {
    rec.left_present = true;
    rec.left_witness = *s;
  }
  rec.left_ms = ms_since(left_start);

  if (rec.left_present) {
    CheckResult fwd;
    try {
      VertexSet d = forward_witness(ri, rec.left_witness);
      fwd.ok = static_cast<int>(d.size()) == ri.budget() && is_ocd(gp, d);
      if (!fwd.ok) fwd.error = "forward witness is not an OCD set of size 2k+2";
    } catch (const std::exception& e) {
      fwd.error = e.what();
    }
    rec.forward = fwd;
  }

  auto right_start = Clock::now();
  SolveOptions solve;
  solve.timeout = std::chrono::duration<double>(options.timeout_seconds);
  SolveResult res = min_ocd_bnb(gp, ri.budget(), solve);
  rec.right_nodes = res.nodes_explored;
  rec.right_ms = ms_since(right_start);
  switch (res.status) {
    case SolveStatus::kOptimal:
      rec.right = Answer::kPresent;
      rec.right_witness = res.witness;
      break;
    case SolveStatus::kTimedOut: rec.right = Answer::kTimedOut; break;
    default: rec.right = Answer::kAbsent; break;
  }

  if (rec.right == Answer::kPresent) {
    CheckResult back;
    try {
      backward_extract(ri, rec.right_witness);
      back.ok = true;
    } catch (const LemmaFalsification& e) {
      back.error = e.what();
    } catch (const ContractViolation& e) {
      back.error = std::string("solver witness rejected: ") + e.what();
    }
    rec.backward = back;
  }

  if (rec.right == Answer::kTimedOut) {
    rec.equivalence = Verdict::kInconclusive;
  } else {
    rec.equivalence = rec.left_present == (rec.right == Answer::kPresent) ? Verdict::kHolds
                                                                          : Verdict::kFails;
  }

  const bool failed = !rec.size_formula_ok || !rec.degeneracy_ok() ||
                      (rec.forward && !rec.forward->ok) || rec.falsified() ||
                      rec.equivalence == Verdict::kFails;
  if (failed) {
    rec.outcome = Outcome::kFail;
  } else if (rec.equivalence == Verdict::kInconclusive) {
    rec.outcome = Outcome::kInconclusive;
  } else {
    rec.outcome = Outcome::kPass;
  }
  rec.total_ms = ms_since(start);
  return rec;
}

ReportSummary summarize(const std::vector<InstanceRecord>& records) {
  ReportSummary s;
  for (const auto& rec : records) {
    ++s.records;
    switch (rec.outcome) {
      case Outcome::kPass: ++s.passed; break;
      case Outcome::kFail: ++s.failed; break;
      case Outcome::kInconclusive: ++s.inconclusive; break;
    }
    ++(rec.left_present ? s.positive : s.negative);
    if (rec.equivalence == Verdict::kHolds) ++s.equivalent;
    if (rec.equivalence == Verdict::kFails) ++s.non_equivalent;
    if (rec.forward && !rec.forward->ok) ++s.forward_failures;
    if (rec.falsified()) ++s.falsifications;
    if (!rec.degeneracy_ok()) ++s.degeneracy_violations;
    if (!rec.size_formula_ok) ++s.size_formula_violations;
    s.max_degeneracy = std::max(s.max_degeneracy, rec.degeneracy);
  }
  return s;
}

int resolve_jobs(int requested) {
  if (const char* env = std::getenv("OCDLAB_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport run_sweep(const SweepConfig& config) {
  config.validate();
  const auto start = Clock::now();
  VerificationReport report;
  report.config = config;

  const std::uint64_t count = config.mode == SweepMode::kExhaustive
                                  ? exhaustive_count(config)
                                  : static_cast<std::uint64_t>(config.trials);
  report.records.resize(count);

  VerifyOptions options;
  options.timeout_seconds = config.timeout_seconds;
  options.gadget = config.gadget;

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      ColoredGraph cg = config.mode == SweepMode::kExhaustive ? exhaustive_instance(config, i)
                                                              : generate_colored(config, i);
      InstanceRecord rec = verify_instance(cg, options);
      rec.index = i;
      report.records[i] = std::move(rec);
    }
  };

  const unsigned width = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                         : std::max(1u, std::thread::hardware_concurrency());
  const int jobs = static_cast<int>(std::min<std::uint64_t>(width, count));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  report.summary = summarize(report.records);
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace ocdlab
