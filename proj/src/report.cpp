#include "ocdlab/report.hpp"

#include <ostream>
#include <string>

namespace ocdlab {

using nlohmann::json;

json witness_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

json ordering_json(const EliminationOrdering& cert) {
  json order = json::array();
  for (Vertex v : cert.order) order.push_back(v + 1);
  return {{"d", cert.d}, {"order", order}};
}

json solve_json(std::string_view problem, const SolveResult& result) {
  json out;
  out["problem"] = problem;
  out["status"] = to_string(result.status);
  if (problem == "decide-ocd") {
    out["feasible"] = result.status == SolveStatus::kOptimal;
  } else if (result.status == SolveStatus::kOptimal) {
    out["optimum"] = result.optimum;
  } else {
    out["optimum"] = nullptr;
  }
  const bool has_witness = result.status == SolveStatus::kOptimal ||
                           (result.status == SolveStatus::kTimedOut && !result.witness.empty());
  out["witness"] = has_witness ? witness_json(result.witness) : json(nullptr);
  out["nodes_explored"] = result.nodes_explored;
  out["elapsed_ms"] = result.elapsed_ms;
  return out;
}

json role_json(const VertexRole& role) {
  switch (role.kind) {
    case RoleKind::kOriginal:
      return {{"kind", "original"}, {"class", role.color_class}, {"source", role.source + 1}};
    case RoleKind::kEdge:
      return {{"kind", "edge"}, {"source", {role.edge.first + 1, role.edge.second + 1}}};
    case RoleKind::kX1: return {{"kind", "x1"}, {"class", role.color_class}};
    case RoleKind::kX2: return {{"kind", "x2"}, {"class", role.color_class}};
    case RoleKind::kU: return {{"kind", "u"}, {"class", role.color_class}};
    case RoleKind::kPath:
      return {{"kind", "path"}, {"class", role.color_class}, {"position", role.position}};
    case RoleKind::kR: return {{"kind", "r"}};
    case RoleKind::kRPrime: return {{"kind", "r_prime"}};
    case RoleKind::kRPrimePrime: return {{"kind", "r_double_prime"}};
  }
  return {};
}

json roles_json(const ReducedInstance& ri) {
  json roles = json::object();
  for (Vertex v = 0; v < ri.gprime().n(); ++v) {
    roles[std::to_string(v + 1)] = role_json(ri.role(v));
  }
  return {{"budget", ri.budget()}, {"k", ri.k()}, {"roles", roles}};
}

namespace {

json check_json(const std::optional<CheckResult>& check) {
  if (!check) return {{"checked", false}};
  json out = {{"checked", true}, {"ok", check->ok}};
  if (!check->error.empty()) out["error"] = check->error;
  return out;
}

}  // namespace

json record_json(const InstanceRecord& rec) {
  json out;
  out["index"] = rec.index;
  out["digest"] = rec.digest;
  out["n"] = rec.n;
  out["m"] = rec.m;
  out["k"] = rec.k;
  out["gprime"] = {{"vertices", rec.gprime_vertices},
                   {"edges", rec.gprime_edges},
                   {"size_formula_ok", rec.size_formula_ok}};
  out["degeneracy"] = {{"d", rec.degeneracy}, {"certified", rec.degeneracy_certified}};
  out["left"] = {{"present", rec.left_present},
                 {"witness", rec.left_present ? witness_json(rec.left_witness) : json(nullptr)}};
  out["right"] = {{"answer", to_string(rec.right)},
                  {"witness", rec.right == Answer::kPresent ? witness_json(rec.right_witness)
                                                            : json(nullptr)},
                  {"nodes_explored", rec.right_nodes}};
  out["equivalence"] = to_string(rec.equivalence);
  out["forward"] = check_json(rec.forward);
  out["backward"] = check_json(rec.backward);
  out["outcome"] = to_string(rec.outcome);
  out["timing"] = {{"left_ms", rec.left_ms}, {"right_ms", rec.right_ms},
                   {"total_ms", rec.total_ms}};
  return out;
}

json config_json(const SweepConfig& config) {
  return {{"k", config.k},
          {"class_size", config.class_size},
          {"p", config.edge_probability},
          {"trials", config.trials},
          {"seed", config.seed},
          {"mode", config.mode == SweepMode::kExhaustive ? "exhaustive" : "random"},
          {"timeout_s", config.timeout_seconds},
          {"x_attachment",
           config.gadget.x_attachment == XAttachment::kSharedFirst ? "shared" : "split"}};
}

json summary_json(const VerificationReport& report) {
  const ReportSummary& s = report.summary;
  return {{"type", "summary"},
          {"config", config_json(report.config)},
          {"records", s.records},
          {"passed", s.passed},
          {"failed", s.failed},
          {"inconclusive", s.inconclusive},
          {"positive", s.positive},
          {"negative", s.negative},
          {"equivalent", s.equivalent},
          {"non_equivalent", s.non_equivalent},
          {"forward_failures", s.forward_failures},
          {"falsifications", s.falsifications},
          {"degeneracy_violations", s.degeneracy_violations},
          {"size_formula_violations", s.size_formula_violations},
          {"max_degeneracy", s.max_degeneracy},
          {"status", s.failed_overall() ? "fail" : "pass"},
          {"timing", {{"elapsed_ms", report.elapsed_ms}}}};
}

void write_report(std::ostream& out, const VerificationReport& report) {
  for (const auto& rec : report.records) out << record_json(rec).dump() << '\n';
  out << summary_json(report).dump() << '\n';
}

json strip_timing(json value) {
  if (value.is_object()) value.erase("timing");
  if (value.is_structured()) {
    for (auto& member : value) member = strip_timing(member);
  }
  return value;
}

}  // namespace ocdlab
