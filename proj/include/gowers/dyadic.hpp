#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gowers {

using int128 = __int128;

/// Exact rational number num / 2^log2_den.
///
/// Always kept canonical: num is odd, or num == 0 and log2_den == 0. Every
/// normalized Walsh, Gowers or distance quantity in the library is of this
/// form, so equality tests on these values are exact. Arithmetic that would
/// overflow the 128-bit numerator throws CapacityError.
class Dyadic {
  public:
    constexpr Dyadic() = default;
    Dyadic(int128 num, int log2_den);

    static Dyadic integer(int128 value) { return Dyadic(value, 0); }

    int128 num() const { return num_; }
    int log2_den() const { return log2_den_; }

    double to_double() const;
    /// "num/2^k" style rendering, e.g. "11/32", "-3/4", "1", "0".
    std::string to_string() const;
    /// Decimal numerator; denominators are implied by log2_den.
    std::string num_string() const;

    Dyadic operator-() const { return Dyadic(-num_, log2_den_); }
    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);

    friend bool operator==(const Dyadic &a, const Dyadic &b) = default;
    friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b);

  private:
    int128 num_ = 0;
    int log2_den_ = 0;
};

std::string int128_to_string(int128 value);

}  // namespace gowers
