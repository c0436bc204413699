#pragma once

// JSON encodings. Polynomials: {"coeffs": ["4", "0", "8"]} (ascending, exact
// rationals as strings). Partitions: integer arrays. Floats are rounded to 15
// significant digits.

#include "xherm/numeric.hpp"
#include "xherm/partition.hpp"
#include "xherm/report.hpp"

#include <nlohmann/json.hpp>

namespace xherm {

using Json = nlohmann::ordered_json;

Json to_json(const ExactPoly& p);
ExactPoly poly_from_json(const Json& j);
Json to_json(const Partition& lambda);
/// Accepts a bare integer array or {"partition": [...]}.
Partition partition_from_json(const Json& j);
Json to_json(const Report& r);

/// A double holding x rounded to 15 significant digits.
double rounded(const Real& x);
double rounded(double x);

}  // namespace xherm
