#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "ocdlab/degeneracy.hpp"
#include "ocdlab/domination.hpp"
#include "ocdlab/harness.hpp"
#include "ocdlab/reduction.hpp"

namespace ocdlab {

/// Vertex identifiers shifted to the 1-indexed file convention.
nlohmann::json witness_json(const VertexSet& s);

nlohmann::json ordering_json(const EliminationOrdering& cert);

/// {problem, optimum|feasible, witness, nodes_explored, elapsed_ms, status}
nlohmann::json solve_json(std::string_view problem, const SolveResult& result);

nlohmann::json role_json(const VertexRole& role);

/// {"budget": 2k+2, "roles": {"1": {...}, ...}}
nlohmann::json roles_json(const ReducedInstance& ri);

/// Timings live under the "timing" key of every object.
nlohmann::json record_json(const InstanceRecord& rec);
nlohmann::json config_json(const SweepConfig& config);
nlohmann::json summary_json(const VerificationReport& report);

/// One record per line followed by the summary object.
void write_report(std::ostream& out, const VerificationReport& report);

/// Drops every "timing" member, recursively.
nlohmann::json strip_timing(nlohmann::json value);

}  // namespace ocdlab
