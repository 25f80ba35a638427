#pragma once

#include <string>
#include <vector>

#include "picard/types.hpp"

namespace picard {

/// Exact lifts of the distinguished points: the simplex vertices z0..z3 and
/// q_inf, the Falbel-Parker style elliptic fixed points w3, w4, w12, and the
/// polar vectors n1, n2, n3 of the reflection mirrors. Throws
/// UnknownGenerator for unlisted names.
const Vec3& named_point(const std::string& name);

/// All registry names, in canonical order.
const std::vector<std::string>& named_point_names();

/// Resolves the lift of a vector against the registry: the name of the
/// projectively equal entry, or empty string.
std::string identify_point(const Vec3& v);

}  // namespace picard
