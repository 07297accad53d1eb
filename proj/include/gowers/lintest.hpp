#pragma once

#include <cstdint>
#include <string_view>

#include "gowers/boolean_function.hpp"
#include "gowers/dyadic.hpp"

namespace gowers {

enum class Verdict { accept, reject };
enum class TestMode { exact, sampled };

std::string_view to_string(Verdict verdict);
std::string_view to_string(TestMode mode);

struct TestVerdict {
    Verdict verdict = Verdict::accept;
    TestMode mode = TestMode::exact;
    uint64_t shots = 0;
    uint64_t rejections = 0;
    double accept_probability_exact = 0.0;
    double rejection_frequency = 0.0;
    uint64_t seed = 0;

    double acceptance_frequency() const { return 1.0 - rejection_frequency; }
};

/// Exact-mode quantum test: ACCEPT probability is the squared all-zeros
/// amplitude of the U_2 circuit. Verdict is ACCEPT iff that probability is 1
/// (to within 1e-12).
TestVerdict quantum_linearity_test_exact(const BooleanFunction &f);

/// Sampled quantum test: `shots` measurements of one prepared U_2 state; a
/// shot accepts iff it reads all zeros. The overall verdict is REJECT as soon
/// as one shot rejects, since a linear function never does.
TestVerdict quantum_linearity_test(const BooleanFunction &f, uint64_t shots, uint64_t seed);

struct RejectionBound {
    double exact;        // 1 - (1 - 2 eps)^4
    double exponential;  // 1 - exp(-8 eps)
};

/// Lower bound on the quantum rejection probability for eps-far functions,
/// 0 < eps <= 1/2.
RejectionBound rejection_lower_bound(double eps);

/// Classical BLR test: draws x, y uniformly and accepts iff F(x)+F(y) = F(x+y).
TestVerdict blr_test(const BooleanFunction &f, uint64_t trials, uint64_t seed);

/// 1/2 + 1/2 sum_u fhat(u)^3.
Dyadic blr_acceptance_spectral(const BooleanFunction &f);
/// Fraction of all 2^{2n} pairs passing the BLR check. Requires 2n <= 24.
Dyadic blr_acceptance_enumeration(const BooleanFunction &f);
inline double blr_exact(const BooleanFunction &f) { return blr_acceptance_spectral(f).to_double(); }

inline constexpr int kQuantumQueriesPerShot = 4;
inline constexpr int kBlrQueriesPerTrial = 3;

struct ComparisonReport {
    int n = 0;
    uint64_t shots = 0;
    uint64_t seed = 0;
    Dyadic eps_exact;
    F2Vector nearest_linear;
    double quantum_reject_exact = 0.0;
    double blr_reject_exact = 0.0;
    double quantum_reject_empirical = 0.0;
    double blr_reject_empirical = 0.0;
    /// Lower bounds at eps_exact; zero when eps_exact is 0.
    RejectionBound lower_bound{0.0, 0.0};

    double quantum_reject_per_query() const { return quantum_reject_exact / kQuantumQueriesPerShot; }
    double blr_reject_per_query() const { return blr_reject_exact / kBlrQueriesPerTrial; }
};

/// Side-by-side quantum vs BLR rejection rates. The quantum shots use
/// child_seed(seed, 0) and the BLR trials child_seed(seed, 1).
ComparisonReport compare(const BooleanFunction &f, uint64_t shots, uint64_t seed);

}  // namespace gowers
