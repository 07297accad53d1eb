#include "gowers/gowers_norm.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "gowers/errors.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

namespace {

// Caps on total work beyond the enumeration-size guards, in word operations.
constexpr int kMaxDefinitionWorkBits = 26;
constexpr int kMaxDerivativeWorkBits = 28;

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw CapacityError(message);
    }
}

}  // namespace

double GowersValue::norm() const {
    if (pow_value == Dyadic::integer(1)) {
        return 1.0;
    }
    return std::pow(pow_value.to_double(), std::ldexp(1.0, -k));
}

GowersValue u2_spectral(const BooleanFunction &f) {
    WalshSpectrum spectrum = walsh(f);
    return {2, Dyadic(spectrum.power_sum(4), 4 * f.n())};
}

GowersValue u2_autocorrelation(const BooleanFunction &f) {
    int n = f.n();
    require(n <= kMaxConvolutionVariables, "autocorrelation route limited to n <= 16");
    int128 sum = 0;
    BooleanFunction diff(n);
    for (uint64_t a = 0; a < f.size(); ++a) {
        diff = f;
        f.xor_translate_into(a, diff);
        int128 c = static_cast<int128>(f.size()) - 2 * static_cast<int128>(diff.weight());
        sum += c * c;
    }
    return {2, Dyadic(sum, 3 * n)};
}

GowersValue uk_definition(const BooleanFunction &f, int k) {
    int n = f.n();
    if (k < 1) {
        throw DomainError("Gowers order k must be at least 1");
    }
    require((k + 1) * n <= kMaxGowersEnumerationBits,
            "U_k definition route needs (k+1)n <= 24, got " + std::to_string((k + 1) * n));
    require(k * n + k <= kMaxDefinitionWorkBits, "U_k definition route work limit exceeded");

    const uint64_t mask = f.size() - 1;
    const uint64_t tuples = uint64_t{1} << (k * n);
    const size_t subsets = size_t{1} << k;
    std::vector<uint64_t> dirs(static_cast<size_t>(k));
    std::vector<uint64_t> offsets(subsets, 0);
    BooleanFunction parity(n);
    int128 total = 0;

    for (uint64_t t = 0; t < tuples; ++t) {
        for (int i = 0; i < k; ++i) {
            dirs[static_cast<size_t>(i)] = (t >> (i * n)) & mask;
        }
        for (size_t s = 1; s < subsets; ++s) {
            offsets[s] = offsets[s & (s - 1)] ^ dirs[static_cast<size_t>(std::countr_zero(s))];
        }
        // parity(x) = sum_S F(x + offset_S); x runs innermost, a word at a time.
        for (auto &w : parity.mutable_words()) {
            w = 0;
        }
        for (uint64_t offset : offsets) {
            f.xor_translate_into(offset, parity);
        }
        total += static_cast<int128>(f.size()) - 2 * static_cast<int128>(parity.weight());
    }
    return {k, Dyadic(total, (k + 1) * n)};
}

GowersValue uk_via_derivatives(const BooleanFunction &f, int k) {
    int n = f.n();
    if (k < 3) {
        throw DomainError("derivative recursion needs k >= 3");
    }
    require((k - 2) * n <= kMaxGowersEnumerationBits,
            "U_k derivative route needs (k-2)n <= 24, got " + std::to_string((k - 2) * n));
    require((k - 1) * n <= kMaxDerivativeWorkBits, "U_k derivative route work limit exceeded");

    const int depth = k - 2;
    const uint64_t mask = f.size() - 1;
    const uint64_t tuples = uint64_t{1} << (depth * n);
    std::vector<uint64_t> dirs(static_cast<size_t>(depth));
    int128 total = 0;
    for (uint64_t t = 0; t < tuples; ++t) {
        for (int i = 0; i < depth; ++i) {
            dirs[static_cast<size_t>(i)] = (t >> (i * n)) & mask;
        }
        total += walsh(derivative(f, std::span<const uint64_t>(dirs))).power_sum(4);
    }
    return {k, Dyadic(total, 4 * n + depth * n)};
}

}  // namespace gowers
