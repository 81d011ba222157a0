#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ocdlab/degeneracy.hpp"
#include "ocdlab/domination.hpp"
#include "ocdlab/graph.hpp"
#include "ocdlab/harness.hpp"
#include "ocdlab/mcis.hpp"
#include "ocdlab/reduction.hpp"
#include "ocdlab/report.hpp"

namespace {

using namespace ocdlab;
using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

ColoredGraph load_colored(const std::string& path) {
  auto in = open_input(path);
  return parse_colored_graph(in);
}

const std::map<std::string, XAttachment> kAttachNames = {
    {"shared", XAttachment::kSharedFirst}, {"split", XAttachment::kSplitFirstSecond}};

struct SolveArgs {
  std::string problem;
  std::string file;
  std::optional<int> budget;
  std::string algo = "bnb";
  std::optional<double> timeout;
};

int run_solve(const SolveArgs& args) {
  if (args.problem == "mcis") {
    ColoredGraph cg = load_colored(args.file);
    auto start = std::chrono::steady_clock::now();
    auto s = find_mcis(cg);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start).count();
    json out = {{"problem", "mcis"},
                {"feasible", s.has_value()},
                {"witness", s ? witness_json(*s) : json(nullptr)},
                {"elapsed_ms", ms}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  Graph g = load_graph(args.file);
  SolveOptions options;
  if (args.timeout) options.timeout = std::chrono::duration<double>(*args.timeout);
  SolveResult result;
  if (args.problem == "ocd") {
    result = args.algo == "brute" ? min_ocd_brute(g) : min_ocd_bnb(g, std::nullopt, options);
  } else if (args.problem == "decide-ocd") {
    if (!args.budget) throw CLI::ValidationError("--budget", "decide-ocd requires --budget");
    if (args.algo == "brute") {
      result = min_ocd_brute(g);
      if (result.optimum > *args.budget) result.status = SolveStatus::kNoSolutionWithinBound;
    } else {
      result = min_ocd_bnb(g, *args.budget, options);
    }
  } else if (args.problem == "ds") {
    result = min_dominating(g);
  } else {
    result = min_connected_dominating(g);
  }
  std::cout << solve_json(args.problem, result).dump(2) << '\n';
  return result.status == SolveStatus::kTimedOut ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outer-connected domination solvers and reduction harness"};
  app.require_subcommand(1);

  // degeneracy
  auto* degen = app.add_subcommand("degeneracy", "Degeneracy of a graph");
  std::string degen_file;
  bool degen_cert = false;
  degen->add_option("graph", degen_file, "Graph file")->required();
  degen->add_flag("--cert", degen_cert, "Print {d, order} as JSON");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a domination or MCIS problem exactly");
  SolveArgs solve_args;
  solve->add_option("problem", solve_args.problem, "ocd | ds | cds | decide-ocd | mcis")
      ->required()
      ->check(CLI::IsMember({"ocd", "ds", "cds", "decide-ocd", "mcis"}));
  solve->add_option("graph", solve_args.file, "Graph file")->required();
  solve->add_option("--budget", solve_args.budget, "Budget for decide-ocd")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--algo", solve_args.algo, "brute | bnb")
      ->check(CLI::IsMember({"brute", "bnb"}));
  solve->add_option("--timeout", solve_args.timeout, "Seconds")->check(CLI::PositiveNumber);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the gadget graph of a colored graph");
  std::string reduce_in, reduce_out, roles_out;
  XAttachment reduce_attach = XAttachment::kSharedFirst;
  reduce->add_option("colored", reduce_in, "Colored graph file")->required();
  reduce->add_option("-o,--output", reduce_out, "Output graph file")->required();
  reduce->add_option("--roles", roles_out, "Roles JSON sidecar");
  reduce->add_option("--x-attach", reduce_attach, "shared | split")
      ->transform(CLI::CheckedTransformer(kAttachNames));

  // verify
  auto* verify = app.add_subcommand("verify", "Check the reduction on instances");
  verify->require_subcommand(1);
  auto* verify_one = verify->add_subcommand("instance", "Verify one colored graph");
  std::string verify_file;
  VerifyOptions verify_options;
  verify_one->add_option("colored", verify_file, "Colored graph file")->required();
  verify_one->add_option("--timeout", verify_options.timeout_seconds, "Seconds per solve")
      ->check(CLI::PositiveNumber);
  verify_one->add_option("--x-attach", verify_options.gadget.x_attachment, "shared | split")
      ->transform(CLI::CheckedTransformer(kAttachNames));

  auto* sweep = verify->add_subcommand("sweep", "Verify many generated instances");
  SweepConfig config;
  bool exhaustive = false;
  std::string sweep_out;
  sweep->add_option("--k", config.k, "Number of colors")->required();
  sweep->add_option("--class-size", config.class_size, "Vertices per color")->required();
  sweep->add_option("--p", config.edge_probability, "Inter-class edge probability");
  sweep->add_option("--trials", config.trials, "Random trials");
  sweep->add_option("--seed", config.seed, "Seed");
  sweep->add_flag("--exhaustive", exhaustive, "Enumerate every inter-class edge subset");
  sweep->add_option("--jobs", config.jobs, "Worker threads (OCDLAB_JOBS overrides)");
  sweep->add_option("--timeout", config.timeout_seconds, "Seconds per solve")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "Write the JSON Lines report here");
  sweep->add_option("--x-attach", config.gadget.x_attachment, "shared | split")
      ->transform(CLI::CheckedTransformer(kAttachNames));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_colored = gen->add_subcommand("colored", "Random colored graph");
  SweepConfig gen_config;
  std::uint64_t gen_trial = 0;
  std::string gen_out;
  gen_colored->add_option("--k", gen_config.k, "Number of colors")->required();
  gen_colored->add_option("--class-size", gen_config.class_size, "Vertices per color")
      ->required();
  gen_colored->add_option("--p", gen_config.edge_probability, "Edge probability")->required();
  gen_colored->add_option("--seed", gen_config.seed, "Seed")->required();
  gen_colored->add_option("--trial", gen_trial, "Trial index");
  gen_colored->add_option("-o,--output", gen_out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (degen->parsed()) {
      Graph g = load_graph(degen_file);
      EliminationOrdering cert = degeneracy_ordering(g);
      if (degen_cert) {
        std::cout << ordering_json(cert).dump() << '\n';
      } else {
        std::cout << cert.d << '\n';
      }
      return 0;
    }
    if (solve->parsed()) return run_solve(solve_args);
    if (reduce->parsed()) {
      ReducedInstance ri = build_reduction(load_colored(reduce_in), {reduce_attach});
      auto out = open_output(reduce_out);
      write_graph(out, ri.gprime());
      if (!roles_out.empty()) {
        auto roles = open_output(roles_out);
        roles << roles_json(ri).dump(2) << '\n';
      }
      return 0;
    }
    if (verify_one->parsed()) {
      InstanceRecord rec = verify_instance(load_colored(verify_file), verify_options);
      std::cout << record_json(rec).dump(2) << '\n';
      return rec.outcome == Outcome::kFail ? 1 : 0;
    }
    if (sweep->parsed()) {
      config.mode = exhaustive ? SweepMode::kExhaustive : SweepMode::kRandom;
      config.jobs = resolve_jobs(config.jobs);
      VerificationReport report = run_sweep(config);
      if (sweep_out.empty()) {
        write_report(std::cout, report);
      } else {
        auto out = open_output(sweep_out);
        write_report(out, report);
        std::cout << summary_json(report).dump() << '\n';
      }
      return report.summary.failed_overall() ? 1 : 0;
    }
    if (gen_colored->parsed()) {
      gen_config.validate();
      auto out = open_output(gen_out);
      write_colored_graph(out, generate_colored(gen_config, gen_trial));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
