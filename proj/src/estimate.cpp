#include "gowers/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "gowers/errors.hpp"
#include "gowers/gowers_norm.hpp"
#include "gowers/rng.hpp"

namespace gowers {

double SampleSet::mean_y() const {
    if (y_values.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double y : y_values) {
        sum += y;
    }
    return sum / static_cast<double>(y_values.size());
}

uint64_t SampleSet::count(uint64_t outcome) const {
    return static_cast<uint64_t>(std::count(outcomes.begin(), outcomes.end(), outcome));
}

MeasurementSampler::MeasurementSampler(const qsim::StateVector &state) : layout_(state.layout) {
    cumulative_.resize(state.amp.size());
    double total = 0.0;
    for (size_t b = 0; b < state.amp.size(); ++b) {
        total += state.amp[b] * state.amp[b];
        cumulative_[b] = total;
        if (state.amp[b] != 0.0) {
            last_positive_ = b;
        }
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("state norm drifted to " + std::to_string(total) + "; refusing to sample");
    }
}

uint64_t MeasurementSampler::draw(double uniform01) const {
    double target = uniform01 * cumulative_.back();
    // Strict upper bound never lands on a zero-probability entry.
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) {
        return last_positive_;
    }
    return static_cast<uint64_t>(it - cumulative_.begin());
}

SampleSet sample(const qsim::StateVector &state, uint64_t m, uint64_t seed) {
    if (m < 1) {
        throw DomainError("sample count must be at least 1");
    }
    MeasurementSampler sampler(state);
    Rng rng(seed);
    SampleSet set{state.layout.n, state.layout.m, seed, {}, {}};
    set.outcomes.reserve(m);
    set.y_values.reserve(m);
    const int bits = state.layout.qubits();
    for (uint64_t i = 0; i < m; ++i) {
        uint64_t outcome = sampler.draw(rng.uniform());
        set.outcomes.push_back(outcome);
        set.y_values.push_back(std::ldexp(static_cast<double>(outcome), -bits));
    }
    return set;
}

EstimationReport hoeffding_bound(double y_bar, uint64_t m, double t) {
    if (!(t > 0.0)) {
        throw DomainError("margin t must be positive");
    }
    if (m < 1) {
        throw DomainError("sample count must be at least 1");
    }
    EstimationReport report;
    report.y_bar = y_bar;
    report.t = t;
    report.m = m;
    double base = 1.0 + t - y_bar;
    report.upper_bound = base >= 1.0 ? 1.0 : std::pow(base, 1.0 / 8.0);
    double md = static_cast<double>(m);
    report.confidence_paper = -std::expm1(-2.0 * md * md * t * t);
    report.confidence_standard = -std::expm1(-2.0 * md * t * t);
    return report;
}

EstimationReport hoeffding_bound(const SampleSet &samples, double t) {
    return hoeffding_bound(samples.mean_y(), samples.size(), t);
}

double expected_y(const qsim::StateVector &state) {
    double sum = 0.0;
    for (size_t b = 0; b < state.amp.size(); ++b) {
        sum += state.amp[b] * state.amp[b] * static_cast<double>(b);
    }
    return std::ldexp(sum, -state.layout.qubits());
}

CoverageResult validate_bound(const BooleanFunction &f, uint64_t m, double t, uint64_t trials, uint64_t seed) {
    if (3 * f.n() > qsim::kMaxQubits) {
        throw CapacityError("U_2 circuit needs 3n <= 24");
    }
    qsim::StateVector state = qsim::run(qsim::build_u2_circuit(f.n()), f);
    GowersValue exact = u2_spectral(f);
    // ||f|| <= B  <=>  ||f||^8 <= B^8 = min(1, 1 + t - y_bar).
    const double norm8 = exact.pow_value.to_double() * exact.pow_value.to_double();

    CoverageResult result;
    result.trials = trials;
    result.exact_norm = exact.norm();
    result.reports.reserve(trials);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        SampleSet samples = sample(state, m, child_seed(seed, trial));
        EstimationReport report = hoeffding_bound(samples, t);
        double bound8 = std::min(1.0, 1.0 + t - report.y_bar);
        if (norm8 <= bound8) {
            ++result.covered;
        }
        result.reports.push_back(report);
    }
    return result;
}

}  // namespace gowers
