#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ocdlab/domination.hpp"
#include "ocdlab/harness.hpp"
#include "ocdlab/mcis.hpp"
#include "ocdlab/report.hpp"
#include "test_support.hpp"

using namespace ocdlab;
using namespace ocdlab::testing;
using nlohmann::json;

namespace {

SweepConfig make_config(int k, int class_size, double p, int trials, std::uint64_t seed) {
  SweepConfig c;
  c.k = k;
  c.class_size = class_size;
  c.edge_probability = p;
  c.trials = trials;
  c.seed = seed;
  return c;
}

std::vector<json> stripped_lines(const VerificationReport& report) {
  std::ostringstream out;
  write_report(out, report);
  std::istringstream in(out.str());
  std::vector<json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(strip_timing(json::parse(line)));
  return lines;
}

}  // namespace

TEST_CASE("generate_colored respects the edge probability extremes") {
  SweepConfig none = make_config(3, 2, 0.0, 1, 1);
  ColoredGraph empty = generate_colored(none, 0);
  CHECK(empty.graph().n() == 6);
  CHECK(empty.graph().m() == 0);
  CHECK(empty.k() == 3);

  SweepConfig all = make_config(3, 2, 1.0, 1, 1);
  ColoredGraph full = generate_colored(all, 0);
  CHECK(full.graph().m() == 12);  // complete 3-partite with parts of size 2
  for (auto [u, v] : full.graph().edges()) CHECK(full.color(u) != full.color(v));

  ColoredGraph one = generate_colored(make_config(2, 1, 1.0, 1, 0), 0);
  CHECK(one.graph().m() == 1);
}

TEST_CASE("generate_colored is deterministic in seed and trial") {
  SweepConfig c = make_config(3, 3, 0.5, 1, 42);
  CHECK(generate_colored(c, 7) == generate_colored(c, 7));
  int distinct = 0;
  for (std::uint64_t t = 1; t < 20; ++t) distinct += !(generate_colored(c, t) == generate_colored(c, 0));
  CHECK(distinct > 15);
  SweepConfig other = c;
  other.seed = 43;
  CHECK_FALSE(generate_colored(other, 7) == generate_colored(c, 7));
}

TEST_CASE("generated colorings are block colorings") {
  ColoredGraph cg = generate_colored(make_config(4, 3, 0.5, 1, 3), 0);
  for (Vertex v = 0; v < cg.graph().n(); ++v) CHECK(cg.color(v) == v / 3 + 1);
}

TEST_CASE("exhaustive enumeration covers every inter-class edge subset") {
  SweepConfig c = make_config(2, 1, 0.5, 1, 0);
  c.mode = SweepMode::kExhaustive;
  CHECK(exhaustive_count(c) == 2);
  CHECK(exhaustive_instance(c, 0).graph().m() == 0);
  CHECK(exhaustive_instance(c, 1).graph().m() == 1);

  c.class_size = 2;
  CHECK(exhaustive_count(c) == 16);
  c.k = 3;
  CHECK(exhaustive_count(c) == 4096);

  c.k = 2;
  std::vector<std::string> texts;
  for (std::uint64_t i = 0; i < exhaustive_count(c); ++i) {
    ColoredGraph cg = exhaustive_instance(c, i);
    CHECK(cg.graph().m() == static_cast<std::size_t>(std::popcount(i)));
    texts.push_back(to_text(cg));
  }
  std::sort(texts.begin(), texts.end());
  CHECK(std::unique(texts.begin(), texts.end()) == texts.end());
}

TEST_CASE("SweepConfig validation") {
  CHECK_NOTHROW(make_config(2, 2, 0.5, 1, 0).validate());
  CHECK_THROWS_AS(make_config(0, 2, 0.5, 1, 0).validate(), ContractViolation);
  CHECK_THROWS_AS(make_config(2, 0, 0.5, 1, 0).validate(), ContractViolation);
  CHECK_THROWS_AS(make_config(2, 2, 1.5, 1, 0).validate(), ContractViolation);
  CHECK_THROWS_AS(make_config(2, 2, -0.1, 1, 0).validate(), ContractViolation);
  CHECK_THROWS_AS(make_config(2, 2, 0.5, 0, 0).validate(), ContractViolation);
  SweepConfig big = make_config(4, 2, 0.5, 1, 0);
  big.mode = SweepMode::kExhaustive;
  CHECK_THROWS_AS(big.validate(), ContractViolation);
  SweepConfig slow = make_config(2, 2, 0.5, 1, 0);
  slow.timeout_seconds = 0.0;
  CHECK_THROWS_AS(slow.validate(), ContractViolation);
}

TEST_CASE("verify_instance on the two-vertex instances") {
  ColoredGraph isolated(Graph(2), {1, 2});
  InstanceRecord yes = verify_instance(isolated);
  CHECK(yes.left_present);
  CHECK(yes.right == Answer::kPresent);
  CHECK(yes.equivalence == Verdict::kHolds);
  REQUIRE(yes.forward.has_value());
  CHECK(yes.forward->ok);
  REQUIRE(yes.backward.has_value());
  CHECK(yes.backward->ok);
  CHECK(yes.size_formula_ok);
  CHECK(yes.degeneracy_ok());
  CHECK(yes.outcome == Outcome::kPass);
  CHECK(yes.gprime_vertices == 21);

  ColoredGraph edge(Graph(2, {{0, 1}}), {1, 2});
  InstanceRecord no = verify_instance(edge);
  CHECK_FALSE(no.left_present);
  CHECK(no.right == Answer::kAbsent);
  CHECK(no.equivalence == Verdict::kHolds);
  CHECK_FALSE(no.forward.has_value());
  CHECK_FALSE(no.backward.has_value());
  CHECK(no.outcome == Outcome::kPass);
}

TEST_CASE("verify_instance answers match independent solvers") {
  std::mt19937_64 rng(77);
  SweepConfig c = make_config(2, 2, 0.5, 1, 5);
  for (std::uint64_t t = 0; t < 20; ++t) {
    ColoredGraph cg = generate_colored(c, t);
    InstanceRecord rec = verify_instance(cg);
    CHECK(rec.left_present == find_mcis(cg).has_value());
    ReducedInstance ri = build_reduction(cg);
    SolveResult opt = min_ocd_bnb(ri.gprime());
    REQUIRE(opt.optimal());
    CHECK((rec.right == Answer::kPresent) == (opt.optimum <= ri.budget()));
    if (rec.right == Answer::kPresent) CHECK(is_ocd(ri.gprime(), rec.right_witness));
    // Outcome follows from the recorded checks.
    const bool bad = !rec.size_formula_ok || !rec.degeneracy_ok() ||
                     (rec.forward && !rec.forward->ok) || rec.falsified() ||
                     rec.equivalence == Verdict::kFails;
    CHECK((rec.outcome == Outcome::kFail) == bad);
  }
}

TEST_CASE("a falsifying instance is reported as a failure, not repaired") {
  ColoredGraph cg(Graph(3, {{0, 2}, {1, 2}}), {1, 1, 2});
  InstanceRecord rec = verify_instance(cg);
  CHECK_FALSE(rec.left_present);
  CHECK(rec.right == Answer::kPresent);
  CHECK(rec.equivalence == Verdict::kFails);
  REQUIRE(rec.backward.has_value());
  CHECK_FALSE(rec.backward->ok);
  CHECK(rec.backward->error.find("multicolored independent set") != std::string::npos);
  CHECK(rec.outcome == Outcome::kFail);
}

TEST_CASE("summaries add up") {
  SweepConfig c = make_config(3, 2, 0.4, 30, 9);
  c.jobs = 2;
  VerificationReport report = run_sweep(c);
  REQUIRE(report.records.size() == 30);
  const ReportSummary& s = report.summary;
  CHECK(s.records == 30);
  CHECK(s.passed + s.failed + s.inconclusive == s.records);
  CHECK(s.positive + s.negative == s.records);
  CHECK(s.equivalent + s.non_equivalent + s.inconclusive >= s.records);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(report.records[i].index == i);
    CHECK(report.records[i].digest == instance_digest(generate_colored(c, i)));
  }
  ReportSummary again = summarize(report.records);
  CHECK(again.failed == s.failed);
  CHECK(again.falsifications == s.falsifications);
  CHECK(s.failed_overall() == (s.failed > 0));
}

TEST_CASE("reports are identical across worker counts once timing is dropped") {
  SweepConfig c = make_config(2, 2, 0.5, 25, 123);
  c.jobs = 1;
  auto serial = stripped_lines(run_sweep(c));
  c.jobs = 4;
  auto parallel = stripped_lines(run_sweep(c));
  CHECK(serial == parallel);
  REQUIRE(serial.size() == 26);
  CHECK(serial.back()["type"] == "summary");
  CHECK_FALSE(serial.front().contains("timing"));
}

TEST_CASE("report JSON layout") {
  SweepConfig c = make_config(2, 1, 0.5, 1, 0);
  c.mode = SweepMode::kExhaustive;
  VerificationReport report = run_sweep(c);
  std::ostringstream out;
  write_report(out, report);
  std::istringstream in(out.str());
  std::vector<json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0]["timing"].contains("total_ms"));
  CHECK(lines[0]["equivalence"] == "holds");
  CHECK(lines[0]["left"]["witness"] == json::array({1, 2}));
  CHECK(lines[1]["right"]["answer"] == "absent");
  CHECK(lines[2]["status"] == "pass");
  CHECK(lines[2]["records"] == 2);
  CHECK(lines[2]["config"]["mode"] == "exhaustive");

  json nested = {{"a", {{"timing", 1}, {"b", json::array({{{"timing", 2}, {"c", 3}}})}}}};
  CHECK(strip_timing(nested) == json{{"a", {{"b", json::array({{{"c", 3}}})}}}});
}

TEST_CASE("instance digests are stable hex strings") {
  ColoredGraph a(Graph(2), {1, 2});
  ColoredGraph b(Graph(2, {{0, 1}}), {1, 2});
  CHECK(instance_digest(a).size() == 16);
  CHECK(instance_digest(a) == instance_digest(ColoredGraph(Graph(2), {1, 2})));
  CHECK(instance_digest(a) != instance_digest(b));
}

TEST_CASE("resolve_jobs honours OCDLAB_JOBS") {
  ::unsetenv("OCDLAB_JOBS");
  CHECK(resolve_jobs(3) == 3);
  CHECK(resolve_jobs(0) >= 1);
  ::setenv("OCDLAB_JOBS", "5", 1);
  CHECK(resolve_jobs(3) == 5);
  ::setenv("OCDLAB_JOBS", "zero", 1);
  CHECK(resolve_jobs(3) == 3);
  ::unsetenv("OCDLAB_JOBS");
}
