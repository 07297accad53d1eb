#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gowers {

/// splitmix64 finalizer; used to seed generators and derive child seeds.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the index-th independent stream under a parent seed.
constexpr uint64_t child_seed(uint64_t seed, uint64_t index) { return mix64(seed ^ mix64(index + 1)); }

/// Seedable, splittable generator. Draws only use raw 64-bit outputs (never
/// the std distributions), so streams are identical across standard libraries.
class Rng {
  public:
    static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

    explicit Rng(uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

    uint64_t seed() const { return seed_; }
    Rng split(uint64_t index) const { return Rng(child_seed(seed_, index)); }

    uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform over [0, 2^bits), bits in [0, 64].
    uint64_t bits(int count) { return count == 0 ? 0 : next() >> (64 - count); }

  private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace gowers
