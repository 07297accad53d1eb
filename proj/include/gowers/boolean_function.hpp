#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gowers/dyadic.hpp"

namespace gowers {

/// Largest variable count accepted by the classical (truth-table) code paths.
inline constexpr int kMaxVariables = 24;

/// A vector of F_2^n stored as its packed index.
///
/// Index convention, used everywhere in the library: x_1 is the most
/// significant bit, so x = (x_1, ..., x_n) maps to sum_i x_i 2^(n-i). The
/// string "101" is therefore x_1 = 1, x_2 = 0, x_3 = 1, index 5.
struct F2Vector {
    int dim = 0;
    uint64_t index = 0;

    static F2Vector zero(int dim) { return {dim, 0}; }
    /// Parses a string of '0'/'1' characters, x_1 first.
    static F2Vector parse(std::string_view bits);
    std::string str() const;

    bool operator==(const F2Vector &) const = default;
};

/// Inner product over F_2 of two packed indices.
inline int dot(uint64_t u, uint64_t x) { return __builtin_popcountll(u & x) & 1; }

/// n-variable Boolean function held as a packed truth table (bit idx(x) = F(x)).
///
/// Immutable after construction apart from the explicit builders; all
/// operations in the library are free functions taking it by const reference.
class BooleanFunction {
  public:
    /// The constant-zero function on n variables.
    explicit BooleanFunction(int n);

    static BooleanFunction from_bits(int n, std::span<const uint8_t> table);
    /// Hex truth table: ceil(2^n/4) digits holding the table as a 2^n-bit
    /// integer with the entry for x = 0...0 as its most significant bit.
    static BooleanFunction from_tt_hex(int n, std::string_view hex);
    static BooleanFunction linear(F2Vector u);
    static BooleanFunction constant(int n, bool value);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }

    bool operator()(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
    void set(uint64_t x, bool value);

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> mutable_words() { return words_; }

    uint64_t weight() const;
    std::string to_tt_hex() const;
    std::vector<uint8_t> to_bits() const;
    /// (-1)^F(x) for every x in index order.
    std::vector<int8_t> signs() const;

    /// x -> F(x + a).
    BooleanFunction translate(uint64_t a) const;
    /// dst ^= translate(a), without allocating.
    void xor_translate_into(uint64_t a, BooleanFunction &dst) const;

    BooleanFunction operator^(const BooleanFunction &other) const;
    BooleanFunction operator~() const;
    bool operator==(const BooleanFunction &) const = default;

  private:
    void clear_padding();

    int n_;
    std::vector<uint64_t> words_;
};

/// Algebraic normal form: coeffs bit idx(u) is the coefficient of x^u.
class Anf {
  public:
    explicit Anf(BooleanFunction coeffs) : coeffs_(std::move(coeffs)) {}

    int n() const { return coeffs_.n(); }
    bool coefficient(uint64_t u) const { return coeffs_(u); }
    const BooleanFunction &coefficients() const { return coeffs_; }
    /// Monomial indices with nonzero coefficient, ascending.
    std::vector<uint64_t> monomials() const;
    /// Polynomial text such as "x1 + x2 + x1*x2"; "0" for the zero polynomial.
    std::string str() const;

  private:
    BooleanFunction coeffs_;
};

/// Parses a polynomial over x1..xn: monomials joined by '+' (XOR), factors
/// joined by '*' or '&' (AND), constants 0 and 1. Whitespace is ignored.
BooleanFunction from_anf_string(std::string_view spec, int n);

Anf to_anf(const BooleanFunction &f);
BooleanFunction from_anf(const Anf &anf);

/// Maximum monomial weight; 0 for constant functions.
int degree(const BooleanFunction &f);

/// Higher-order derivative by successive first-order derivatives
/// F(x) + F(x + a). An empty direction list returns f.
BooleanFunction derivative(const BooleanFunction &f, std::span<const F2Vector> dirs);
BooleanFunction derivative(const BooleanFunction &f, std::span<const uint64_t> dirs);

struct HammingResult {
    uint64_t weight;
    Dyadic dist;
};

HammingResult hamming(const BooleanFunction &f, const BooleanFunction &g);

void check_variable_count(int n);

}  // namespace gowers
