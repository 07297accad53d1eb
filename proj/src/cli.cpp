#include "gowers/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <random>
#include <string_view>

#include <CLI11.hpp>

#include "gowers/errors.hpp"
#include "gowers/estimate.hpp"
#include "gowers/lintest.hpp"
#include "gowers/qsim.hpp"
#include "gowers/report_json.hpp"
#include "gowers/rng.hpp"
#include "gowers/spectral.hpp"

namespace gowers::cli {

namespace {

struct Options {
    FunctionSpec spec;
    std::optional<uint64_t> seed;
    bool deterministic = false;
    std::string format = "json";

    int k = 2;
    std::string route = "all";

    std::string circuit = "u2";
    std::string order = "nested";
    bool dump = false;
    bool audit = false;

    uint64_t m = 0;
    double t = 0.0;
    uint64_t trials = 1;
    bool validate = false;

    uint64_t shots = 1000;
    uint64_t blr_trials = 1000;
};

constexpr int kMaxAnfTermsShown = 64;

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

void add_function_options(CLI::App *cmd, Options &o) {
    cmd->add_option("-n", o.spec.n, "number of variables")->required()->check(CLI::PositiveNumber);
    auto *anf = cmd->add_option("--anf", o.spec.anf, "polynomial, e.g. \"x1*x2 + x3\"");
    auto *hex = cmd->add_option("--tt-hex", o.spec.tt_hex, "hex truth table, entry for x=0 most significant");
    auto *family = cmd->add_option("--family", o.spec.family, "named family")
                       ->check(CLI::IsMember({"linear", "bent_quadratic", "random"}));
    cmd->add_option("--u", o.spec.u, "coefficient bits of the linear family, x1 first");
    anf->excludes(hex)->excludes(family);
    hex->excludes(family);
    cmd->add_option("--seed", o.seed, "RNG seed; a random one is chosen and printed if omitted");
    cmd->add_flag("--deterministic", o.deterministic, "omit the timestamp field");
}

uint64_t effective_seed(const Options &o) {
    if (o.seed) {
        return *o.seed;
    }
    std::random_device device;
    return (static_cast<uint64_t>(device()) << 32) ^ device();
}

void add_seed(json &out, uint64_t seed) {
    out["seed"] = seed;
    out["rng"] = std::string(Rng::kAlgorithm);
}

// Commands that draw random numbers, or functions drawn at random, report their seed.
json header(const std::string &command, const Options &o, const BooleanFunction &f, std::optional<uint64_t> seed) {
    json out;
    out["command"] = command;
    out["function"] = fingerprint(f);
    if (o.spec.family == "random" && !seed) {
        seed = o.seed;
    }
    if (seed) {
        add_seed(out, *seed);
    }
    if (!o.deterministic) {
        out["timestamp"] = utc_timestamp();
    }
    return out;
}

void emit(std::ostream &out, const json &report) { out << report.dump(2) << '\n'; }

void merge_into(json &report, const json &fields, std::initializer_list<std::string_view> skip = {}) {
    for (const auto &[key, value] : fields.items()) {
        if (std::find(skip.begin(), skip.end(), key) == skip.end()) {
            report[key] = value;
        }
    }
}

void cmd_analyze(const Options &o, const BooleanFunction &f, std::ostream &out) {
    json report = header("analyze", o, f, std::nullopt);
    WalshSpectrum spectrum = walsh(f);
    Anf anf = to_anf(f);
    auto terms = anf.monomials().size();
    report["weight"] = f.weight();
    report["degree"] = degree(f);
    report["anf_terms"] = terms;
    if (terms <= kMaxAnfTermsShown) {
        report["anf"] = anf.str();
    }
    report["nonlinearity"] = nonlinearity(spectrum);
    LinearDistance d = dist_to_linear(spectrum);
    report["dist_to_linear"] = json{{"eps", to_json(d.eps)}, {"nearest_linear", d.argmin.str()}};
    WalshExtrema e = walsh_extrema(spectrum);
    report["walsh"] = json{{"min", e.min}, {"max", e.max}, {"max_abs", e.max_abs}, {"argmax_abs", e.argmax_abs.str()}};
    GowersValue u2{2, Dyadic(spectrum.power_sum(4), 4 * f.n())};
    report["u2_pow"] = u2.pow_value.to_double();
    report["u2_pow_exact"] = to_json(u2.pow_value);
    report["u2_norm"] = u2.norm();
    emit(out, report);
}

void cmd_gowers(const Options &o, const BooleanFunction &f, std::ostream &out) {
    const int k = o.k;
    if (o.route == "spectral" && k != 2) {
        throw UsageError("route 'spectral' only applies to k = 2");
    }
    if (o.route == "autocorrelation" && k != 2) {
        throw UsageError("route 'autocorrelation' only applies to k = 2");
    }
    if (o.route == "derivatives" && k < 3) {
        throw UsageError("route 'derivatives' needs k >= 3");
    }
    json report = header("gowers", o, f, std::nullopt);
    report["k"] = k;
    report["route"] = o.route;

    std::vector<std::pair<std::string, GowersValue>> values;
    json skipped = json::object();
    auto attempt = [&](const std::string &name, auto compute) {
        if (o.route != "all") {
            if (o.route == name) {
                values.emplace_back(name, compute());
            }
            return;
        }
        try {
            values.emplace_back(name, compute());
        } catch (const CapacityError &error) {
            skipped[name] = error.what();
        }
    };
    attempt("definition", [&] { return uk_definition(f, k); });
    if (k == 2) {
        attempt("spectral", [&] { return u2_spectral(f); });
        attempt("autocorrelation", [&] { return u2_autocorrelation(f); });
    }
    if (k >= 3) {
        attempt("derivatives", [&] { return uk_via_derivatives(f, k); });
    }
    if (values.empty()) {
        throw CapacityError("no route can evaluate U_" + std::to_string(k) + " at n = " + std::to_string(f.n()));
    }
    require_agreement(values);

    report["pow_value"] = to_json(values.front().second.pow_value);
    report["norm"] = values.front().second.norm();
    json routes = json::object();
    for (const auto &[name, value] : values) {
        routes[name] = to_json(value.pow_value);
    }
    report["routes"] = routes;
    if (!skipped.empty()) {
        report["skipped"] = skipped;
    }
    report["agreement"] = true;
    emit(out, report);
}

void cmd_simulate(const Options &o, const BooleanFunction &f, std::ostream &out) {
    qsim::Circuit circuit = [&] {
        if (o.circuit == "u2") {
            return qsim::build_u2_circuit(f.n());
        }
        if (o.circuit == "u3_appendix") {
            return qsim::build_appendix_u3_circuit(f.n());
        }
        if (o.order != "nested" && o.order != "gray") {
            throw UsageError("--order must be nested or gray");
        }
        return qsim::build_derivative_walk_circuit(f.n(), o.k,
                                                   o.order == "gray" ? qsim::WalkOrder::gray_code
                                                                     : qsim::WalkOrder::nested);
    }();
    json report = header("simulate", o, f, std::nullopt);
    report["circuit"] = o.circuit;
    if (o.circuit == "derivative_walk") {
        report["k"] = o.k;
        report["order"] = o.order;
    }
    report["registers"] = circuit.layout().m;
    report["gates"] = circuit.gates().size();
    report["oracle_calls"] = circuit.oracle_count();
    report["mcnot_gates"] = circuit.mcnot_count();

    qsim::StateVector state = qsim::run(circuit, f);
    double amp0 = qsim::amplitude_at_zero(state);
    report["amp0"] = amp0;
    report["p0"] = amp0 * amp0;

    // Built derivative circuits must reproduce the classical Gowers power.
    if (o.circuit != "u3_appendix") {
        int order = o.circuit == "u2" ? 2 : o.k;
        std::optional<GowersValue> expected;
        if (order == 2) {
            expected = u2_spectral(f);
        } else {
            try {
                expected = uk_definition(f, order);
            } catch (const CapacityError &) {
            }
        }
        if (expected) {
            double want = expected->pow_value.to_double();
            bool agree = std::abs(amp0 - want) <= 1e-9;
            report["expected_amp0"] = want;
            report["agreement"] = agree;
            if (!agree) {
                throw CrossCheckError("simulated amplitude " + std::to_string(amp0) + " != classical " +
                                      std::to_string(want));
            }
        }
    }
    if (o.dump) {
        report["dump"] = circuit.dump();
    }
    if (o.audit) {
        qsim::PhaseAudit audit = qsim::phase_audit(circuit);
        int m = audit.registers;
        json cosets = json::array();
        for (uint64_t c : audit.oracle_cosets) {
            cosets.push_back(qsim::describe_coset(c, m));
        }
        json missing = json::array();
        for (uint64_t c : audit.missing_cosets()) {
            missing.push_back(qsim::describe_coset(c, m));
        }
        report["audit"] = json{
            {"status", audit.implements_derivative ? "ok" : "not-a-derivative"},
            {"oracle_calls", audit.oracle_calls()},
            {"distinct_cosets", audit.distinct_cosets()},
            {"cosets", cosets},
            {"missing", missing},
            {"final_register1", qsim::describe_coset(audit.final_register1, m)},
        };
    }
    emit(out, report);
}

void cmd_estimate(const Options &o, const BooleanFunction &f, uint64_t seed, std::ostream &out) {
    if (3 * f.n() > qsim::kMaxQubits) {
        throw CapacityError("U_2 circuit needs 3n <= 24");
    }
    json report = header("estimate", o, f, seed);
    report["m"] = o.m;
    report["t"] = o.t;
    report["trials"] = o.trials;
    if (o.validate) {
        CoverageResult coverage = validate_bound(f, o.m, o.t, o.trials, seed);
        EstimationReport reference = hoeffding_bound(0.0, o.m, o.t);
        report["validation"] = json{
            {"exact_norm", coverage.exact_norm},
            {"covered", coverage.covered},
            {"coverage", coverage.coverage()},
            {"confidence_paper", reference.confidence_paper},
            {"confidence_standard", reference.confidence_standard},
            {"meets_confidence_standard", coverage.coverage() >= reference.confidence_standard},
        };
    } else {
        qsim::StateVector state = qsim::run(qsim::build_u2_circuit(f.n()), f);
        json reports = json::array();
        for (uint64_t trial = 0; trial < o.trials; ++trial) {
            uint64_t trial_seed = child_seed(seed, trial);
            reports.push_back(to_json(hoeffding_bound(sample(state, o.m, trial_seed), o.t), trial_seed, f));
        }
        report["reports"] = reports;
    }
    emit(out, report);
}

void cmd_lintest(const Options &o, const BooleanFunction &f, uint64_t seed, std::ostream &out) {
    json report = header("lintest", o, f, seed);
    TestVerdict v = quantum_linearity_test(f, o.shots, seed);
    merge_into(report, to_json(v));
    report["exact_verdict"] = to_string(quantum_linearity_test_exact(f).verdict);
    LinearDistance d = dist_to_linear(f);
    report["eps_exact"] = to_json(d.eps);
    if (d.eps > Dyadic()) {
        RejectionBound bound = rejection_lower_bound(d.eps.to_double());
        report["rejection_lower_bound"] = json{{"exact", bound.exact}, {"exponential", bound.exponential}};
    }
    emit(out, report);
}

void cmd_blr(const Options &o, const BooleanFunction &f, uint64_t seed, std::ostream &out) {
    json report = header("blr", o, f, seed);
    TestVerdict v = blr_test(f, o.blr_trials, seed);
    merge_into(report, to_json(v));
    Dyadic spectral = blr_acceptance_spectral(f);
    report["accept_probability_exact_fraction"] = to_json(spectral);
    if (2 * f.n() <= 24) {
        Dyadic enumerated = blr_acceptance_enumeration(f);
        if (!(enumerated == spectral)) {
            throw CrossCheckError("BLR acceptance: enumeration " + enumerated.to_string() + " != spectral " +
                                  spectral.to_string());
        }
        report["agreement"] = true;
    }
    emit(out, report);
}

void cmd_compare(const Options &o, const BooleanFunction &f, uint64_t seed, std::ostream &out) {
    if (o.format != "json" && o.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    ComparisonReport comparison = compare(f, o.shots, seed);
    if (o.format == "csv") {
        out << comparison_csv_header() << '\n' << comparison_csv_row(comparison, f) << '\n';
        return;
    }
    json report = header("compare", o, f, seed);
    merge_into(report, to_json(comparison, f), {"function", "seed"});
    emit(out, report);
}

}  // namespace

BooleanFunction resolve(const FunctionSpec &spec, uint64_t seed) {
    int given = spec.anf.has_value() + spec.tt_hex.has_value() + spec.family.has_value();
    if (given != 1) {
        throw UsageError("give exactly one of --anf, --tt-hex, --family");
    }
    if (spec.anf) {
        return from_anf_string(*spec.anf, spec.n);
    }
    if (spec.tt_hex) {
        return BooleanFunction::from_tt_hex(spec.n, *spec.tt_hex);
    }
    const std::string &family = *spec.family;
    if (family != "linear" && spec.u) {
        throw UsageError("--u only applies to --family linear");
    }
    if (family == "linear") {
        if (!spec.u) {
            throw UsageError("--family linear needs --u <bits>");
        }
        F2Vector u = F2Vector::parse(*spec.u);
        if (u.dim != spec.n) {
            throw UsageError("--u must have exactly n = " + std::to_string(spec.n) + " bits");
        }
        return BooleanFunction::linear(u);
    }
    if (family == "bent_quadratic") {
        if (spec.n % 2 != 0) {
            throw UsageError("bent_quadratic needs an even number of variables");
        }
        std::string anf;
        for (int i = 1; i < spec.n; i += 2) {
            anf += (anf.empty() ? "" : " + ") + ("x" + std::to_string(i) + "*x" + std::to_string(i + 1));
        }
        return from_anf_string(anf, spec.n);
    }
    if (family == "random") {
        BooleanFunction f(spec.n);
        Rng rng(seed);
        for (uint64_t x = 0; x < f.size(); ++x) {
            f.set(x, rng.bits(1) != 0);
        }
        return f;
    }
    throw UsageError("unknown family '" + family + "'");
}

void require_agreement(const std::vector<std::pair<std::string, GowersValue>> &values) {
    for (size_t i = 1; i < values.size(); ++i) {
        if (!(values[i].second.pow_value == values[0].second.pow_value)) {
            throw CrossCheckError("route '" + values[i].first + "' gives " + values[i].second.pow_value.to_string() +
                                  " but '" + values[0].first + "' gives " + values[0].second.pow_value.to_string());
        }
    }
}

int exit_code_for(const std::exception &error) {
    if (dynamic_cast<const CrossCheckError *>(&error)) {
        return kCrossCheck;
    }
    if (dynamic_cast<const CapacityError *>(&error)) {
        return kCapacity;
    }
    if (dynamic_cast<const std::invalid_argument *>(&error)) {
        return kUsage;
    }
    return kUnexpected;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gowers uniformity norms, quantum circuit simulation and linearity tests", "gowers"};
    app.require_subcommand(1);
    Options o;

    auto *analyze = app.add_subcommand("analyze", "weight, degree, spectrum, nonlinearity, U_2");
    add_function_options(analyze, o);

    auto *gowers = app.add_subcommand("gowers", "exact U_k norm by one or all routes");
    add_function_options(gowers, o);
    gowers->add_option("-k", o.k, "order")->check(CLI::Range(1, 24));
    gowers->add_option("--route", o.route)
        ->check(CLI::IsMember({"definition", "spectral", "autocorrelation", "derivatives", "all"}));

    auto *simulate = app.add_subcommand("simulate", "state-vector simulation of the norm circuits");
    add_function_options(simulate, o);
    simulate->add_option("--circuit", o.circuit)->check(CLI::IsMember({"u2", "u3_appendix", "derivative_walk"}));
    simulate->add_option("-k", o.k, "derivative order for derivative_walk")->check(CLI::Range(1, 23));
    simulate->add_option("--order", o.order, "derivative_walk schedule")->check(CLI::IsMember({"nested", "gray"}));
    simulate->add_flag("--dump", o.dump, "include the gate list");
    simulate->add_flag("--audit", o.audit, "symbolic phase audit");

    auto *estimate = app.add_subcommand("estimate", "Hoeffding upper bound on ||f||_{U_2} from samples");
    add_function_options(estimate, o);
    estimate->add_option("-m", o.m, "samples per estimate")->required()->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));
    estimate->add_option("-t", o.t, "margin")->required()->check(CLI::PositiveNumber);
    estimate->add_option("--trials", o.trials, "independent estimates")->check(CLI::Range(uint64_t{1}, uint64_t{1000000}));
    estimate->add_flag("--validate", o.validate, "report coverage of the exact norm");

    auto *lintest = app.add_subcommand("lintest", "quantum linearity test");
    add_function_options(lintest, o);
    lintest->add_option("--shots", o.shots)->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));

    auto *blr = app.add_subcommand("blr", "classical BLR linearity test");
    add_function_options(blr, o);
    blr->add_option("--trials", o.blr_trials)->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));

    auto *cmp = app.add_subcommand("compare", "quantum test vs BLR");
    add_function_options(cmp, o);
    cmp->add_option("--shots", o.shots)->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));
    cmp->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("gowers");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &error) {
        int status = app.exit(error, out, err);
        return status == 0 ? kOk : kUsage;
    }

    try {
        if (o.spec.family == "random" && !o.seed) {
            o.seed = effective_seed(o);
        }
        uint64_t seed = effective_seed(o);
        BooleanFunction f = resolve(o.spec, seed);
        if (analyze->parsed()) {
            cmd_analyze(o, f, out);
        } else if (gowers->parsed()) {
            cmd_gowers(o, f, out);
        } else if (simulate->parsed()) {
            cmd_simulate(o, f, out);
        } else if (estimate->parsed()) {
            cmd_estimate(o, f, seed, out);
        } else if (lintest->parsed()) {
            cmd_lintest(o, f, seed, out);
        } else if (blr->parsed()) {
            cmd_blr(o, f, seed, out);
        } else if (cmp->parsed()) {
            cmd_compare(o, f, seed, out);
        }
    } catch (const std::exception &error) {
        err << "error: " << error.what() << '\n';
        return exit_code_for(error);
    }
    return kOk;
}

}  // namespace gowers::cli
