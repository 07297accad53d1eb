#include "gowers/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "gowers/errors.hpp"

namespace gowers {

namespace {

int128 shift_left_checked(int128 value, int shift) {
    if (value == 0 || shift == 0) {
        return value;
    }
    if (shift >= 126) {
        throw CapacityError("dyadic numerator overflow");
    }
    int128 result;
    if (__builtin_mul_overflow(value, int128{1} << shift, &result)) {
        throw CapacityError("dyadic numerator overflow");
    }
    return result;
}

// Aligns both operands to the larger denominator.
std::pair<int128, int128> align(const Dyadic &a, const Dyadic &b, int &den) {
    den = std::max(a.log2_den(), b.log2_den());
    return {shift_left_checked(a.num(), den - a.log2_den()), shift_left_checked(b.num(), den - b.log2_den())};
}

}  // namespace

Dyadic::Dyadic(int128 num, int log2_den) : num_(num), log2_den_(log2_den) {
    if (num_ == 0) {
        log2_den_ = 0;
        return;
    }
    if (log2_den_ < 0) {
        num_ = shift_left_checked(num_, -log2_den_);
        log2_den_ = 0;
    }
    while (log2_den_ > 0 && (num_ & 1) == 0) {
        num_ /= 2;
        --log2_den_;
    }
}

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num_), -log2_den_);
}

std::string int128_to_string(int128 value) {
    if (value == 0) {
        return "0";
    }
    bool negative = value < 0;
    std::string digits;
    while (value != 0) {
        int digit = static_cast<int>(value % 10);
        digits.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
        value /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string Dyadic::num_string() const { return int128_to_string(num_); }

std::string Dyadic::to_string() const {
    if (log2_den_ == 0) {
        return num_string();
    }
    if (log2_den_ < 127) {
        int128 den = int128{1} << log2_den_;
        if (log2_den_ < 126) {
            return num_string() + "/" + int128_to_string(den);
        }
    }
    return num_string() + "/2^" + std::to_string(log2_den_);
}

Dyadic operator+(const Dyadic &a, const Dyadic &b) {
    int den;
    auto [x, y] = align(a, b, den);
    int128 sum;
    if (__builtin_add_overflow(x, y, &sum)) {
        throw CapacityError("dyadic numerator overflow");
    }
    return Dyadic(sum, den);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }

Dyadic operator*(const Dyadic &a, const Dyadic &b) {
    int128 product;
    if (__builtin_mul_overflow(a.num(), b.num(), &product)) {
        throw CapacityError("dyadic numerator overflow");
    }
    return Dyadic(product, a.log2_den() + b.log2_den());
}

std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b) {
    if ((a.num() < 0) != (b.num() < 0)) {
        return a.num() < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int den;
    auto [x, y] = align(a, b, den);
    return x <=> y;
}

}  // namespace gowers
