#include "gowers/boolean_function.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gowers/errors.hpp"
#include "oracles.hpp"

using namespace gowers;

namespace {

std::vector<uint8_t> bits(const BooleanFunction &f) { return f.to_bits(); }

}  // namespace

TEST(boolean_function, anf_string_and_xor) {
    EXPECT_EQ(bits(from_anf_string("x1*x2", 2)), (std::vector<uint8_t>{0, 0, 0, 1}));
    EXPECT_EQ(bits(from_anf_string("x1+x2", 2)), (std::vector<uint8_t>{0, 1, 1, 0}));
    EXPECT_EQ(bits(from_anf_string("x1 & x2", 2)), (std::vector<uint8_t>{0, 0, 0, 1}));
}

TEST(boolean_function, anf_string_bent_weight) {
    // Enumerated over all 16 inputs by the test oracle.
    EXPECT_EQ(from_anf_string("x1*x2 + x3*x4", 4).weight(), 6u);
}

TEST(boolean_function, anf_string_constants_and_repeats) {
    EXPECT_EQ(from_anf_string("1", 2), BooleanFunction::constant(2, true));
    EXPECT_EQ(from_anf_string("x1 + x1", 2), BooleanFunction(2));
    EXPECT_EQ(from_anf_string("x1*x1", 2), from_anf_string("x1", 2));
    EXPECT_EQ(from_anf_string("0*x1 + x2", 2), from_anf_string("x2", 2));
    EXPECT_EQ(from_anf_string("x1 + x2 + 1", 2).to_bits(), (std::vector<uint8_t>{1, 0, 0, 1}));
}

TEST(boolean_function, anf_string_errors_report_position) {
    try {
        from_anf_string("x1 + x5", 3);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 5u);
    }
    try {
        from_anf_string("x1 ** x2", 3);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(from_anf_string("", 2), ParseError);
    EXPECT_THROW(from_anf_string("x0", 2), ParseError);
    EXPECT_THROW(from_anf_string("x1 +", 2), ParseError);
    EXPECT_THROW(from_anf_string("y1", 2), ParseError);
    EXPECT_THROW(from_anf_string("x", 2), ParseError);
    EXPECT_THROW(from_anf_string("2", 2), ParseError);
}

TEST(boolean_function, capacity_and_dimension_guards) {
    EXPECT_THROW(BooleanFunction(0), DimensionError);
    EXPECT_THROW(BooleanFunction(25), CapacityError);
    EXPECT_NO_THROW(BooleanFunction(24));
}

TEST(boolean_function, to_anf_known_identities) {
    Anf orf = to_anf(BooleanFunction::from_bits(2, std::vector<uint8_t>{0, 1, 1, 1}));
    EXPECT_EQ(orf.monomials(), (std::vector<uint64_t>{1, 2, 3}));
    EXPECT_EQ(orf.str(), "x2 + x1 + x1*x2");
    EXPECT_TRUE(to_anf(BooleanFunction(3)).monomials().empty());
    EXPECT_EQ(to_anf(from_anf_string("x1*x2", 2)).monomials(), (std::vector<uint64_t>{3}));
}

TEST(boolean_function, anf_matches_oracle_and_round_trips) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            auto table = oracle::random_table(n, rng);
            BooleanFunction f = oracle::to_function(n, table);
            Anf anf = to_anf(f);
            if (n <= 8) {
                EXPECT_EQ(oracle::to_table(anf.coefficients()), oracle::anf(table));
            }
            EXPECT_EQ(from_anf(anf), f);
        }
    }
}

TEST(boolean_function, degree) {
    EXPECT_EQ(degree(from_anf_string("x1*x2", 2)), 2);
    EXPECT_EQ(degree(from_anf_string("x1+x2+1", 2)), 1);
    EXPECT_EQ(degree(BooleanFunction(4)), 0);
    EXPECT_EQ(degree(BooleanFunction::constant(4, true)), 0);
    EXPECT_EQ(degree(from_anf_string("x1*x2*x3*x4*x5*x6*x7 + x8", 8)), 7);
}

TEST(boolean_function, derivative_examples) {
    BooleanFunction and2 = from_anf_string("x1*x2", 2);
    std::vector<F2Vector> a = {F2Vector::parse("10")};
    EXPECT_EQ(derivative(and2, a), from_anf_string("x2", 2));
    std::vector<F2Vector> zero = {F2Vector::zero(2)};
    EXPECT_EQ(derivative(and2, zero), BooleanFunction(2));
    std::vector<F2Vector> ab = {F2Vector::parse("10"), F2Vector::parse("01")};
    EXPECT_EQ(derivative(and2, ab), BooleanFunction::constant(2, true));
    EXPECT_EQ(derivative(and2, std::span<const F2Vector>()), and2);
    std::vector<F2Vector> wrong = {F2Vector::parse("100")};
    EXPECT_THROW(derivative(and2, wrong), DimensionError);
}

TEST(boolean_function, derivative_properties) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            auto table = oracle::random_table(n, rng);
            BooleanFunction f = oracle::to_function(n, table);
            uint64_t a = rng() & (f.size() - 1);
            uint64_t b = rng() & (f.size() - 1);
            std::vector<uint64_t> ab = {a, b};
            std::vector<uint64_t> ba = {b, a};
            BooleanFunction dab = derivative(f, std::span<const uint64_t>(ab));
            EXPECT_EQ(dab, derivative(f, std::span<const uint64_t>(ba)));
            EXPECT_EQ(oracle::to_table(dab), oracle::derivative(table, ab));

            std::vector<uint64_t> zero = {0};
            EXPECT_EQ(derivative(f, std::span<const uint64_t>(zero)), BooleanFunction(n));

            if (a != 0) {
                std::vector<uint64_t> single = {a};
                int d = degree(f);
                EXPECT_LE(degree(derivative(f, std::span<const uint64_t>(single))), std::max(d - 1, 0));
            }
        }
    }
}

TEST(boolean_function, word_level_translate_matches_pointwise) {
    std::mt19937_64 rng(99);
    for (int n : {1, 3, 6, 7, 9}) {
        auto table = oracle::random_table(n, rng);
        BooleanFunction f = oracle::to_function(n, table);
        for (uint64_t a = 0; a < f.size(); a += (n > 6 ? 37 : 1)) {
            BooleanFunction g = f.translate(a);
            for (uint64_t x = 0; x < f.size(); ++x) {
                ASSERT_EQ(g(x), table[x ^ a] != 0) << "n=" << n << " a=" << a << " x=" << x;
            }
        }
    }
}

TEST(boolean_function, hamming) {
    BooleanFunction and2 = from_anf_string("x1*x2", 2);
    auto self = hamming(and2, and2);
    EXPECT_EQ(self.weight, 0u);
    EXPECT_EQ(self.dist, Dyadic());
    auto to_zero = hamming(and2, BooleanFunction(2));
    EXPECT_EQ(to_zero.weight, 1u);
    EXPECT_EQ(to_zero.dist, Dyadic(1, 2));
    auto xor_and = hamming(from_anf_string("x1+x2", 2), and2);
    EXPECT_EQ(xor_and.weight, 3u);
    EXPECT_EQ(xor_and.dist, Dyadic(3, 2));
    EXPECT_THROW(hamming(and2, BooleanFunction(3)), DimensionError);
}

TEST(boolean_function, tt_hex_format) {
    EXPECT_EQ(from_anf_string("x1*x2", 2).to_tt_hex(), "1");
    EXPECT_EQ(BooleanFunction::from_tt_hex(2, "1"), from_anf_string("x1*x2", 2));
    // x = 0 is the most significant bit: x1 on three variables is 00001111.
    EXPECT_EQ(from_anf_string("x1", 3).to_tt_hex(), "0f");
    EXPECT_EQ(from_anf_string("x3", 3).to_tt_hex(), "55");
    EXPECT_EQ(from_anf_string("x1", 1).to_tt_hex(), "1");
    EXPECT_EQ(BooleanFunction::from_tt_hex(1, "2"), from_anf_string("x1 + 1", 1));
    EXPECT_EQ(BooleanFunction::from_tt_hex(3, "FF"), BooleanFunction::constant(3, true));
    EXPECT_THROW(BooleanFunction::from_tt_hex(1, "4"), ParseError);
    EXPECT_THROW(BooleanFunction::from_tt_hex(3, "f"), ParseError);
    EXPECT_THROW(BooleanFunction::from_tt_hex(3, "0g"), ParseError);

    std::mt19937_64 rng(3);
    for (int n = 1; n <= 9; ++n) {
        BooleanFunction f = oracle::to_function(n, oracle::random_table(n, rng));
        EXPECT_EQ(BooleanFunction::from_tt_hex(n, f.to_tt_hex()), f);
    }
}

TEST(boolean_function, f2_vector_convention) {
    F2Vector v = F2Vector::parse("101");
    EXPECT_EQ(v.dim, 3);
    EXPECT_EQ(v.index, 5u);
    EXPECT_EQ(v.str(), "101");
    EXPECT_EQ(BooleanFunction::linear(F2Vector::parse("100")), from_anf_string("x1", 3));
    EXPECT_THROW(F2Vector::parse("10a"), ParseError);
}
