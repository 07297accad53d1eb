#include "gowers/spectral.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gowers/errors.hpp"
#include "oracles.hpp"

using namespace gowers;

TEST(spectral, walsh_examples) {
    EXPECT_EQ(walsh(BooleanFunction(3)).w, (std::vector<int32_t>{8, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(walsh(from_anf_string("x1*x2", 2)).w, (std::vector<int32_t>{2, 2, 2, -2}));
    for (uint64_t u = 0; u < 16; ++u) {
        WalshSpectrum s = walsh(BooleanFunction::linear(F2Vector{4, u}));
        for (uint64_t v = 0; v < 16; ++v) {
            EXPECT_EQ(s[v], v == u ? 16 : 0);
        }
    }
}

TEST(spectral, walsh_matches_direct_sums) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            auto table = oracle::random_table(n, rng);
            WalshSpectrum s = walsh(oracle::to_function(n, table));
            auto expected = oracle::walsh(table);
            ASSERT_EQ(s.w.size(), expected.size());
            for (size_t u = 0; u < expected.size(); ++u) {
                ASSERT_EQ(s.w[u], expected[u]);
            }
        }
    }
}

TEST(spectral, parseval_exact) {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            WalshSpectrum s = walsh(oracle::to_function(n, oracle::random_table(n, rng)));
            ASSERT_EQ(s.power_sum(2), int128{1} << (2 * n));
            for (int32_t w : s.w) {
                ASSERT_LE(std::abs(w), 1 << n);
                ASSERT_EQ((w - (1 << n)) % 2, 0);
            }
        }
    }
}

TEST(spectral, plancherel_integer_form_on_real_tables) {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 8; ++n) {
        std::vector<int64_t> g(uint64_t{1} << n);
        int64_t energy = 0;
        for (auto &v : g) {
            v = static_cast<int64_t>(rng() % 21) - 10;
            energy += v * v;
        }
        std::vector<int64_t> spectrum = g;
        fwht(std::span<int64_t>(spectrum));
        int64_t spectral_energy = 0;
        for (int64_t v : spectrum) {
            spectral_energy += v * v;
        }
        // sum_u ghat(u)^2 = 2^-n sum_x g(x)^2 with ghat = G / 2^n.
        EXPECT_EQ(spectral_energy, energy << n);
    }
}

TEST(spectral, transform_twice_scales_by_size) {
    std::mt19937_64 rng(4);
    std::vector<int64_t> v(64);
    for (auto &x : v) {
        x = static_cast<int64_t>(rng() % 100) - 50;
    }
    auto twice = v;
    fwht(std::span<int64_t>(twice));
    fwht(std::span<int64_t>(twice));
    for (size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(twice[i], 64 * v[i]);
    }
}

TEST(spectral, nonlinearity_examples) {
    EXPECT_EQ(nonlinearity(from_anf_string("x1*x2", 2)), 1u);
    EXPECT_EQ(nonlinearity(from_anf_string("x1*x2 + x3*x4", 4)), 6u);
    EXPECT_EQ(nonlinearity(BooleanFunction::linear(F2Vector::parse("1011"))), 0u);
}

TEST(spectral, nonlinearity_equals_exhaustive_affine_distance) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            auto table = oracle::random_table(n, rng);
            uint64_t best = UINT64_MAX;
            for (uint64_t u = 0; u < table.size(); ++u) {
                for (int c = 0; c < 2; ++c) {
                    uint64_t d = 0;
                    for (uint64_t x = 0; x < table.size(); ++x) {
                        d += table[x] != (oracle::parity(u & x) ^ c);
                    }
                    best = std::min(best, d);
                }
            }
            EXPECT_EQ(nonlinearity(oracle::to_function(n, table)), best);
        }
    }
}

TEST(spectral, dist_to_linear_examples) {
    auto linear = dist_to_linear(from_anf_string("x1+x2", 2));
    EXPECT_EQ(linear.eps, Dyadic());
    EXPECT_EQ(linear.argmin, F2Vector::parse("11"));

    auto and2 = dist_to_linear(from_anf_string("x1*x2", 2));
    EXPECT_EQ(and2.eps, Dyadic(1, 2));
    EXPECT_EQ(and2.argmin, F2Vector::parse("00"));

    // Complement of x1+x3: its own character is excluded, every other linear
    // function sits at distance exactly 1/2 (enumerated over all 8).
    auto complement = dist_to_linear(from_anf_string("x1 + x3 + 1", 3));
    EXPECT_EQ(complement.eps, Dyadic(1, 1));
    EXPECT_EQ(complement.argmin, F2Vector::parse("000"));
}

TEST(spectral, dist_to_linear_matches_enumeration) {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            auto table = oracle::random_table(n, rng);
            uint64_t best = UINT64_MAX;
            uint64_t best_u = 0;
            for (uint64_t u = 0; u < table.size(); ++u) {
                uint64_t d = 0;
                for (uint64_t x = 0; x < table.size(); ++x) {
                    d += table[x] != oracle::parity(u & x);
                }
                if (d < best) {
                    best = d;
                    best_u = u;
                }
            }
            auto result = dist_to_linear(oracle::to_function(n, table));
            EXPECT_EQ(result.eps, Dyadic(static_cast<int128>(best), n));
            EXPECT_EQ(result.argmin.index, best_u);
        }
    }
}

TEST(spectral, autocorrelation_examples) {
    std::mt19937_64 rng(7);
    BooleanFunction f = oracle::to_function(5, oracle::random_table(5, rng));
    EXPECT_EQ(autocorrelation(f, F2Vector::zero(5)), Dyadic::integer(1));

    BooleanFunction bent = from_anf_string("x1*x2 + x3*x4", 4);
    for (uint64_t a = 1; a < 16; ++a) {
        EXPECT_EQ(autocorrelation(bent, F2Vector{4, a}), Dyadic());
    }
    EXPECT_EQ(autocorrelation(from_anf_string("x1+x2", 2), F2Vector::parse("11")), Dyadic::integer(1));
    EXPECT_EQ(autocorrelation(from_anf_string("x1+x2", 2), F2Vector::parse("10")), Dyadic::integer(-1));
    EXPECT_THROW(autocorrelation(bent, F2Vector::parse("101")), DimensionError);
}

TEST(spectral, convolve_examples) {
    std::mt19937_64 rng(8);
    BooleanFunction f = oracle::to_function(4, oracle::random_table(4, rng));
    EXPECT_EQ(convolve(f, f)[0], Dyadic::integer(1));
    for (const Dyadic &v : convolve(BooleanFunction(3), BooleanFunction(3))) {
        EXPECT_EQ(v, Dyadic::integer(1));
    }
    EXPECT_THROW(convolve(f, BooleanFunction(3)), DimensionError);
}

TEST(spectral, convolution_theorem_exact) {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            BooleanFunction f = oracle::to_function(n, oracle::random_table(n, rng));
            BooleanFunction g = oracle::to_function(n, oracle::random_table(n, rng));
            // fhat(u) ghat(u) = W_f W_g / 2^{2n}; the transform of f*g is
            // 2^-n sum_x (f*g)(x)(-1)^{u.x}.
            auto values = convolve(f, g);
            WalshSpectrum wf = walsh(f);
            WalshSpectrum wg = walsh(g);
            for (uint64_t u = 0; u < f.size(); ++u) {
                Dyadic transform;
                for (uint64_t x = 0; x < f.size(); ++x) {
                    transform = oracle::parity(u & x) ? transform - values[x] : transform + values[x];
                }
                transform = transform * Dyadic(1, n);
                ASSERT_EQ(transform, wf.fourier(u) * wg.fourier(u)) << "n=" << n << " u=" << u;
            }
            // Integer form through the butterfly.
            auto numerators = convolve_numerators(f, g);
            fwht(std::span<int64_t>(numerators));
            for (uint64_t u = 0; u < f.size(); ++u) {
                ASSERT_EQ(numerators[u], static_cast<int64_t>(wf[u]) * wg[u]);
            }
        }
    }
}

TEST(spectral, walsh_extrema) {
    WalshExtrema e = walsh_extrema(walsh(from_anf_string("x1*x2", 2)));
    EXPECT_EQ(e.min, -2);
    EXPECT_EQ(e.max, 2);
    EXPECT_EQ(e.max_abs, 2u);
    EXPECT_EQ(e.argmax_abs, F2Vector::parse("00"));
}
