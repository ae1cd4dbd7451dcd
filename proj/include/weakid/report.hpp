#pragma once

// JSON and markdown renderings shared by the command-line tool and tests.

#include "weakid/matrep.hpp"
#include "weakid/repthy.hpp"
#include "weakid/series.hpp"
#include "weakid/tideal.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace weakid::report {

using nlohmann::json;

inline constexpr const char* kToolkitVersion = "0.1.0";

/// [[[3,1],1], [[2,2],1], ...] in the Decomposition's order
json to_json(const repthy::Decomposition& d);
json to_json(const repthy::Partition& p);
/// Decimal strings.
json to_json(const series::TruncSeries& s);
json to_json(const matrep::IdentityCheck& c);

/// Keys: degree, space, dim_P, dim_kernel, dim_consequences, containment,
/// equal, dim_gamma, dim_gamma_kernel, decomposition, timings_ms,
/// toolkit_version. With `timings` false, timings_ms is {} so that reruns
/// are byte-identical.
json to_json(const tideal::DegreeReport& r, bool timings = true);

/// Empty string when j has the degree-report shape, else the first problem.
std::string schema_problem(const json& j);

std::string markdown(std::span<const tideal::DegreeReport> reports);

} // namespace weakid::report
