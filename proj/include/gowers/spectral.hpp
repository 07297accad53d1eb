#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "gowers/boolean_function.hpp"
#include "gowers/dyadic.hpp"

namespace gowers {

/// Unnormalized in-place Walsh-Hadamard butterfly over a power-of-two span:
/// v[u] <- sum_x v[x] (-1)^{u.x}. Applying it twice multiplies by size.
template <typename T>
void fwht(std::span<T> v) {
    const size_t size = v.size();
    for (size_t half = 1; half < size; half <<= 1) {
        for (size_t block = 0; block < size; block += 2 * half) {
            for (size_t i = block; i < block + half; ++i) {
                T a = v[i];
                T b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

/// Integer Walsh coefficients W(u) = sum_x (-1)^{F(x) + u.x} = 2^n fhat(u).
struct WalshSpectrum {
    int n = 0;
    std::vector<int32_t> w;

    int32_t operator[](uint64_t u) const { return w[u]; }
    /// fhat(u) as an exact dyadic rational.
    Dyadic fourier(uint64_t u) const { return Dyadic(w[u], n); }
    /// sum_u W(u)^p for p in {2, 3, 4}.
    int128 power_sum(int p) const;
};

WalshSpectrum walsh(const BooleanFunction &f);

/// Minimum Hamming distance to an affine function: 2^{n-1} - max|W|/2.
uint64_t nonlinearity(const BooleanFunction &f);
uint64_t nonlinearity(const WalshSpectrum &spectrum);

struct LinearDistance {
    Dyadic eps;
    F2Vector argmin;
};

/// Distance to the nearest linear function u.x (complements excluded).
/// Ties go to the smallest packed u.
LinearDistance dist_to_linear(const BooleanFunction &f);
LinearDistance dist_to_linear(const WalshSpectrum &spectrum);

/// (f * f)(a) = 2^-n sum_y f(y) f(y + a).
Dyadic autocorrelation(const BooleanFunction &f, F2Vector a);

/// Pointwise (f * g)(x) = 2^-n sum_y f(y) g(x + y), computed directly.
std::vector<Dyadic> convolve(const BooleanFunction &f, const BooleanFunction &g);

inline constexpr int kMaxConvolutionVariables = 16;

/// Integer numerators 2^n (f * g)(x) of convolve().
std::vector<int64_t> convolve_numerators(const BooleanFunction &f, const BooleanFunction &g);

struct WalshExtrema {
    int32_t min;
    int32_t max;
    uint32_t max_abs;
    F2Vector argmax_abs;
};

WalshExtrema walsh_extrema(const WalshSpectrum &spectrum);

}  // namespace gowers
