#include "gowers/lintest.hpp"

#include <cmath>

#include "gowers/errors.hpp"
#include "gowers/estimate.hpp"
#include "gowers/qsim.hpp"
#include "gowers/rng.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

namespace {

qsim::StateVector u2_state(const BooleanFunction &f) {
    if (3 * f.n() > qsim::kMaxQubits) {
        throw CapacityError("U_2 circuit needs 3n <= 24");
    }
    return qsim::run(qsim::build_u2_circuit(f.n()), f);
}

}  // namespace

std::string_view to_string(Verdict verdict) { return verdict == Verdict::accept ? "ACCEPT" : "REJECT"; }

std::string_view to_string(TestMode mode) { return mode == TestMode::exact ? "exact" : "sampled"; }

TestVerdict quantum_linearity_test_exact(const BooleanFunction &f) {
    double amp0 = qsim::amplitude_at_zero(u2_state(f));
    TestVerdict v;
    v.mode = TestMode::exact;
    v.accept_probability_exact = amp0 * amp0;
    v.rejection_frequency = 1.0 - v.accept_probability_exact;
    v.verdict = std::abs(v.accept_probability_exact - 1.0) <= 1e-12 ? Verdict::accept : Verdict::reject;
    return v;
}

TestVerdict quantum_linearity_test(const BooleanFunction &f, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw DomainError("shot count must be at least 1");
    }
    qsim::StateVector state = u2_state(f);
    SampleSet samples = sample(state, shots, seed);
    TestVerdict v;
    v.mode = TestMode::sampled;
    v.shots = shots;
    v.seed = seed;
    v.accept_probability_exact = state.amp[0] * state.amp[0];
    v.rejections = shots - samples.count(0);
    v.rejection_frequency = static_cast<double>(v.rejections) / static_cast<double>(shots);
    v.verdict = v.rejections == 0 ? Verdict::accept : Verdict::reject;
    return v;
}

RejectionBound rejection_lower_bound(double eps) {
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw DomainError("eps must lie in (0, 1/2]");
    }
    double base = 1.0 - 2.0 * eps;
    return {1.0 - base * base * base * base, -std::expm1(-8.0 * eps)};
}

TestVerdict blr_test(const BooleanFunction &f, uint64_t trials, uint64_t seed) {
    if (trials < 1) {
        throw DomainError("trial count must be at least 1");
    }
    Rng rng(seed);
    TestVerdict v;
    v.mode = TestMode::sampled;
    v.shots = trials;
    v.seed = seed;
    v.accept_probability_exact = blr_exact(f);
    for (uint64_t i = 0; i < trials; ++i) {
        uint64_t x = rng.bits(f.n());
        uint64_t y = rng.bits(f.n());
        if (f(x) != (f(y) != f(x ^ y))) {
            ++v.rejections;
        }
    }
    v.rejection_frequency = static_cast<double>(v.rejections) / static_cast<double>(trials);
    v.verdict = v.rejections == 0 ? Verdict::accept : Verdict::reject;
    return v;
}

Dyadic blr_acceptance_spectral(const BooleanFunction &f) {
    int n = f.n();
    int128 cubes = walsh(f).power_sum(3);
    return Dyadic((int128{1} << (3 * n)) + cubes, 3 * n + 1);
}

Dyadic blr_acceptance_enumeration(const BooleanFunction &f) {
    int n = f.n();
    if (2 * n > 24) {
        throw CapacityError("BLR enumeration needs 2n <= 24");
    }
    // For fixed x, the y passing are those with F(y) + F(x+y) = F(x).
    int128 passing = 0;
    BooleanFunction diff(n);
    for (uint64_t x = 0; x < f.size(); ++x) {
        diff = f;
        f.xor_translate_into(x, diff);
        uint64_t ones = diff.weight();
        passing += f(x) ? ones : f.size() - ones;
    }
    return Dyadic(passing, 2 * n);
}

ComparisonReport compare(const BooleanFunction &f, uint64_t shots, uint64_t seed) {
    ComparisonReport r;
    r.n = f.n();
    r.shots = shots;
    r.seed = seed;
    LinearDistance d = dist_to_linear(f);
    r.eps_exact = d.eps;
    r.nearest_linear = d.argmin;

    TestVerdict quantum = quantum_linearity_test(f, shots, child_seed(seed, 0));
    TestVerdict blr = blr_test(f, shots, child_seed(seed, 1));
    r.quantum_reject_exact = 1.0 - quantum.accept_probability_exact;
    r.blr_reject_exact = 1.0 - blr.accept_probability_exact;
    r.quantum_reject_empirical = quantum.rejection_frequency;
    r.blr_reject_empirical = blr.rejection_frequency;
    if (d.eps > Dyadic()) {
        r.lower_bound = rejection_lower_bound(d.eps.to_double());
    }
    return r;
}

}  // namespace gowers
