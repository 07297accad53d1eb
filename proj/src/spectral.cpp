#include "gowers/spectral.hpp"

#include <cstdlib>

#include "gowers/errors.hpp"

namespace gowers {

int128 WalshSpectrum::power_sum(int p) const {
    int128 sum = 0;
    for (int32_t value : w) {
        int128 term = 1;
        for (int i = 0; i < p; ++i) {
            term *= value;
        }
        sum += term;
    }
    return sum;
}

WalshSpectrum walsh(const BooleanFunction &f) {
    WalshSpectrum spectrum{f.n(), std::vector<int32_t>(f.size())};
    for (uint64_t x = 0; x < f.size(); ++x) {
        spectrum.w[x] = f(x) ? -1 : 1;
    }
    fwht(std::span<int32_t>(spectrum.w));
    return spectrum;
}

uint64_t nonlinearity(const WalshSpectrum &spectrum) {
    uint32_t max_abs = walsh_extrema(spectrum).max_abs;
    return (uint64_t{1} << (spectrum.n - 1)) - max_abs / 2;
}

uint64_t nonlinearity(const BooleanFunction &f) { return nonlinearity(walsh(f)); }

LinearDistance dist_to_linear(const WalshSpectrum &spectrum) {
    uint64_t best = 0;
    for (uint64_t u = 1; u < spectrum.w.size(); ++u) {
        if (spectrum.w[u] > spectrum.w[best]) {
            best = u;
        }
    }
    // (2^n - W) / 2^{n+1}
    int128 num = (int128{1} << spectrum.n) - spectrum.w[best];
    return {Dyadic(num, spectrum.n + 1), F2Vector{spectrum.n, best}};
}

LinearDistance dist_to_linear(const BooleanFunction &f) { return dist_to_linear(walsh(f)); }

Dyadic autocorrelation(const BooleanFunction &f, F2Vector a) {
    if (a.dim != f.n()) {
        throw DimensionError("autocorrelation shift has wrong dimension");
    }
    uint64_t disagreements = (f ^ f.translate(a.index)).weight();
    int128 num = static_cast<int128>(f.size()) - 2 * static_cast<int128>(disagreements);
    return Dyadic(num, f.n());
}

std::vector<int64_t> convolve_numerators(const BooleanFunction &f, const BooleanFunction &g) {
    if (f.n() != g.n()) {
        throw DimensionError("convolution operands have different variable counts");
    }
    if (f.n() > kMaxConvolutionVariables) {
        throw CapacityError("direct convolution limited to n <= " + std::to_string(kMaxConvolutionVariables));
    }
    // sum_y f(y) g(x + y) = 2^n - 2 wt(F + G(. + x))
    std::vector<int64_t> out(f.size());
    for (uint64_t x = 0; x < f.size(); ++x) {
        uint64_t d = (f ^ g.translate(x)).weight();
        out[x] = static_cast<int64_t>(f.size()) - 2 * static_cast<int64_t>(d);
    }
    return out;
}

std::vector<Dyadic> convolve(const BooleanFunction &f, const BooleanFunction &g) {
    std::vector<int64_t> numerators = convolve_numerators(f, g);
    std::vector<Dyadic> out;
    out.reserve(numerators.size());
    for (int64_t c : numerators) {
        out.emplace_back(c, f.n());
    }
    return out;
}

WalshExtrema walsh_extrema(const WalshSpectrum &spectrum) {
    WalshExtrema e{spectrum.w[0], spectrum.w[0], static_cast<uint32_t>(std::abs(spectrum.w[0])),
                   F2Vector{spectrum.n, 0}};
    for (uint64_t u = 1; u < spectrum.w.size(); ++u) {
        int32_t v = spectrum.w[u];
        e.min = std::min(e.min, v);
        e.max = std::max(e.max, v);
        auto magnitude = static_cast<uint32_t>(std::abs(v));
        if (magnitude > e.max_abs) {
            e.max_abs = magnitude;
            e.argmax_abs = F2Vector{spectrum.n, u};
        }
    }
    return e;
}

}  // namespace gowers
