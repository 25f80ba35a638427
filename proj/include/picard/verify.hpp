#pragma once

#include "picard/report.hpp"

namespace picard {

inline constexpr const char* kVersion = "0.1.0";

/// The named check suites behind `verify <target>`. Each returns a Report
/// with deterministic check ids; `verify_all` concatenates them in canonical
/// order.
Report verify_relations(const VerifyConfig& cfg);
Report verify_fixed_points(const VerifyConfig& cfg);
Report verify_isotropy(const VerifyConfig& cfg);
Report verify_cycles(const VerifyConfig& cfg);
Report verify_orbits(const VerifyConfig& cfg);
Report verify_geometry(const VerifyConfig& cfg);
Report verify_handles(const VerifyConfig& cfg);
Report verify_properties(const VerifyConfig& cfg);
Report verify_all(const VerifyConfig& cfg);

}  // namespace picard
