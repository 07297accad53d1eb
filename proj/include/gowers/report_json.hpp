#pragma once

#include <string>

#include <json.hpp>

#include "gowers/boolean_function.hpp"
#include "gowers/dyadic.hpp"
#include "gowers/estimate.hpp"
#include "gowers/gowers_norm.hpp"
#include "gowers/lintest.hpp"

namespace gowers {

using json = nlohmann::ordered_json;

/// {"num", "log2_den", "text", "value"}; num is a JSON integer when it fits
/// in 64 bits and a decimal string otherwise.
json to_json(const Dyadic &value);
json to_json(const GowersValue &value);
/// {"n", "tt_hex"}: identifies the function a report was computed for.
json fingerprint(const BooleanFunction &f);
json to_json(const EstimationReport &report, uint64_t seed, const BooleanFunction &f);
json to_json(const TestVerdict &verdict);
json to_json(const ComparisonReport &report, const BooleanFunction &f);

std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonReport &report, const BooleanFunction &f);

}  // namespace gowers
