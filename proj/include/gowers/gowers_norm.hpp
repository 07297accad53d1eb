#pragma once

#include "gowers/boolean_function.hpp"
#include "gowers/dyadic.hpp"

namespace gowers {

/// Enumeration limit shared by the exhaustive Gowers routes: (k+1)n for the
/// definition, (k-2)n for the derivative recursion.
inline constexpr int kMaxGowersEnumerationBits = 24;

/// ||f||_{U_k} held exactly through its 2^k-th power.
struct GowersValue {
    int k = 0;
    Dyadic pow_value;

    /// The norm itself, pow_value^(2^-k). Presentation only; compare pow_value.
    double norm() const;
};

/// sum_u fhat(u)^4 from the Walsh spectrum.
GowersValue u2_spectral(const BooleanFunction &f);

/// 2^-n sum_a (f*f)(a)^2, the autocorrelation form of the U_2 identity.
GowersValue u2_autocorrelation(const BooleanFunction &f);

/// Literal (k+1)-fold average of prod_{S subset [k]} f(x + sum_{i in S} x^(i)).
/// Requires (k+1)n <= 24.
GowersValue uk_definition(const BooleanFunction &f, int k);

/// Average over (k-2)-tuples of directions of ||Delta f||_{U_2}^4, for k >= 3.
/// Requires (k-2)n <= 24.
GowersValue uk_via_derivatives(const BooleanFunction &f, int k);

}  // namespace gowers
