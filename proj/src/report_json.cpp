#include "gowers/report_json.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace gowers {

json to_json(const Dyadic &value) {
    json out;
    if (value.num() >= std::numeric_limits<int64_t>::min() && value.num() <= std::numeric_limits<int64_t>::max()) {
        out["num"] = static_cast<int64_t>(value.num());
    } else {
        out["num"] = value.num_string();
    }
    out["log2_den"] = value.log2_den();
    out["text"] = value.to_string();
    out["value"] = value.to_double();
    return out;
}

json to_json(const GowersValue &value) {
    return json{{"k", value.k}, {"pow_value", to_json(value.pow_value)}, {"norm", value.norm()}};
}

json fingerprint(const BooleanFunction &f) { return json{{"n", f.n()}, {"tt_hex", f.to_tt_hex()}}; }

json to_json(const EstimationReport &report, uint64_t seed, const BooleanFunction &f) {
    return json{
        {"y_bar", report.y_bar},
        {"t", report.t},
        {"m", report.m},
        {"upper_bound", report.upper_bound},
        {"confidence_paper", report.confidence_paper},
        {"confidence_standard", report.confidence_standard},
        {"seed", seed},
        {"function", fingerprint(f)},
    };
}

json to_json(const TestVerdict &verdict) {
    json out{
        {"verdict", to_string(verdict.verdict)},
        {"mode", to_string(verdict.mode)},
        {"accept_probability_exact", verdict.accept_probability_exact},
    };
    if (verdict.mode == TestMode::sampled) {
        out["shots"] = verdict.shots;
        out["rejections"] = verdict.rejections;
        out["rejection_frequency"] = verdict.rejection_frequency;
        out["acceptance_frequency"] = verdict.acceptance_frequency();
        out["seed"] = verdict.seed;
    }
    return out;
}

json to_json(const ComparisonReport &report, const BooleanFunction &f) {
    return json{
        {"function", fingerprint(f)},
        {"shots", report.shots},
        {"seed", report.seed},
        {"eps_exact", to_json(report.eps_exact)},
        {"nearest_linear", report.nearest_linear.str()},
        {"quantum_reject_exact", report.quantum_reject_exact},
        {"blr_reject_exact", report.blr_reject_exact},
        {"quantum_reject_empirical", report.quantum_reject_empirical},
        {"blr_reject_empirical", report.blr_reject_empirical},
        {"lower_bound_exact", report.lower_bound.exact},
        {"lower_bound_exponential", report.lower_bound.exponential},
        {"quantum_queries_per_shot", kQuantumQueriesPerShot},
        {"blr_queries_per_trial", kBlrQueriesPerTrial},
        {"quantum_reject_per_query", report.quantum_reject_per_query()},
        {"blr_reject_per_query", report.blr_reject_per_query()},
    };
}

std::string comparison_csv_header() {
    return "n,tt_hex,shots,seed,eps_exact,nearest_linear,quantum_reject_exact,blr_reject_exact,"
           "quantum_reject_empirical,blr_reject_empirical,lower_bound_exact,lower_bound_exponential,"
           "quantum_reject_per_query,blr_reject_per_query";
}

namespace {

// Shortest representation that parses back to the same double.
std::string csv_number(double value) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

}  // namespace

std::string comparison_csv_row(const ComparisonReport &report, const BooleanFunction &f) {
    std::ostringstream out;
    out << f.n() << ',' << f.to_tt_hex() << ',' << report.shots << ',' << report.seed << ','
        << csv_number(report.eps_exact.to_double()) << ',' << report.nearest_linear.str();
    for (double value : {report.quantum_reject_exact, report.blr_reject_exact, report.quantum_reject_empirical,
                         report.blr_reject_empirical, report.lower_bound.exact, report.lower_bound.exponential,
                         report.quantum_reject_per_query(), report.blr_reject_per_query()}) {
        out << ',' << csv_number(value);
    }
    return out.str();
}

}  // namespace gowers
