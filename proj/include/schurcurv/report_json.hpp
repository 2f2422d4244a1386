#pragma once

#include <json.hpp>

#include "schurcurv/dittmann.hpp"
#include "schurcurv/schur_lab.hpp"

namespace schurcurv {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::json to_json(const CurvatureReport& report);
nlohmann::json to_json(const ProbeRecord& record);
nlohmann::json to_json(const SchurVerdict& verdict);

/// Checks the structural invariants of a serialized verdict: "neither" has
/// counterexamples in both directions, counterexamples are majorization
/// pairs that violate by more than their tolerance, and counts add up.
/// Returns an empty string when consistent, otherwise the first problem.
std::string verdict_consistency_problem(const nlohmann::json& verdict);

} // namespace schurcurv
