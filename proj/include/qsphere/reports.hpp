// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "qsphere/bigint.hpp"
#include "qsphere/run_config.hpp"

namespace qsphere::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactName = "qsphere";
inline constexpr const char* kArtifactVersion = "1.0.0";

/// Integers that fit in 53 bits are emitted as JSON numbers; anything wider
/// round-trips as a decimal string.
Json json_int(const BigInt& v);

Json config_echo(const RunConfig& cfg);

/// Per-suite report builders.  Every suite fills "pass".
Json dim_report(const RunConfig& cfg);
Json spectrum_report(const RunConfig& cfg);
std::string spectrum_csv(const RunConfig& cfg);
Json zeta_report(const RunConfig& cfg);
Json supnorm_report(const RunConfig& cfg);
Json hwv_report(const RunConfig& cfg);
Json path_report(const RunConfig& cfg);

/// Runs every verification suite; allPass mirrors the "pass" field.
Json verify_all(const RunConfig& cfg, bool& allPass);

}  // namespace qsphere::report
