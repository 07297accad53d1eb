#pragma once

#include <cstdint>
#include <vector>

#include "gowers/boolean_function.hpp"
#include "gowers/qsim.hpp"

namespace gowers {

/// Measurement outcomes of a state, each with Y = index / 2^{mn}, the
/// concatenated outcome string x'||a'||b'||... read as a binary fraction.
struct SampleSet {
    int n = 0;
    int registers = 0;
    uint64_t seed = 0;
    std::vector<uint64_t> outcomes;
    std::vector<double> y_values;

    size_t size() const { return outcomes.size(); }
    double mean_y() const;
    uint64_t count(uint64_t outcome) const;
};

/// Inverse-CDF sampler over |amp|^2 with a precomputed cumulative table.
class MeasurementSampler {
  public:
    /// Throws DomainError if the squared amplitudes sum to 1 +- more than 1e-9.
    explicit MeasurementSampler(const qsim::StateVector &state);

    uint64_t draw(double uniform01) const;
    const qsim::RegisterLayout &layout() const { return layout_; }

  private:
    qsim::RegisterLayout layout_;
    std::vector<double> cumulative_;
    uint64_t last_positive_ = 0;
};

SampleSet sample(const qsim::StateVector &state, uint64_t m, uint64_t seed);

/// Sampled upper bound on ||f||_{U_2} from the sample mean of Y.
struct EstimationReport {
    double y_bar = 0.0;
    double t = 0.0;
    uint64_t m = 0;
    /// min(1, (1 + t - y_bar)^{1/8}).
    double upper_bound = 0.0;
    /// 1 - exp(-2 m^2 t^2), the published form.
    double confidence_paper = 0.0;
    /// 1 - exp(-2 m t^2), Hoeffding for the mean of m variables in [0, 1].
    double confidence_standard = 0.0;
};

EstimationReport hoeffding_bound(const SampleSet &samples, double t);
EstimationReport hoeffding_bound(double y_bar, uint64_t m, double t);

/// E[Y] computed exactly from the amplitudes.
double expected_y(const qsim::StateVector &state);

struct CoverageResult {
    uint64_t trials = 0;
    uint64_t covered = 0;
    double exact_norm = 0.0;
    double coverage() const { return trials == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(trials); }
    std::vector<EstimationReport> reports;
};

/// Runs circuit -> m samples -> bound, `trials` times with seeds
/// child_seed(seed, trial), counting trials where the exact U_2 norm is
/// within the bound.
CoverageResult validate_bound(const BooleanFunction &f, uint64_t m, double t, uint64_t trials, uint64_t seed);

}  // namespace gowers
