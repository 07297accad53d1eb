#pragma once

// Brute-force reference implementations used only by tests. Everything here
// works on plain truth-table vectors and per-point loops, sharing no code
// path with the library's packed-word and butterfly implementations.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gowers/boolean_function.hpp"

namespace oracle {

using Table = std::vector<uint8_t>;

inline int parity(uint64_t v) { return __builtin_popcountll(v) & 1; }

inline Table random_table(int n, std::mt19937_64 &rng) {
    Table t(uint64_t{1} << n);
    for (auto &b : t) {
        b = static_cast<uint8_t>(rng() & 1);
    }
    return t;
}

inline gowers::BooleanFunction to_function(int n, const Table &t) {
    gowers::BooleanFunction f(n);
    for (uint64_t x = 0; x < t.size(); ++x) {
        f.set(x, t[x] != 0);
    }
    return f;
}

inline Table to_table(const gowers::BooleanFunction &f) {
    Table t(f.size());
    for (uint64_t x = 0; x < f.size(); ++x) {
        t[x] = f(x);
    }
    return t;
}

// Every function on n variables (n <= 3), in table order.
inline std::vector<Table> all_tables(int n) {
    uint64_t size = uint64_t{1} << n;
    std::vector<Table> out;
    for (uint64_t code = 0; code < (uint64_t{1} << size); ++code) {
        Table t(size);
        for (uint64_t x = 0; x < size; ++x) {
            t[x] = (code >> x) & 1;
        }
        out.push_back(t);
    }
    return out;
}

// W(u) = sum_x (-1)^{F(x) + u.x}, one direct sum per u.
inline std::vector<int64_t> walsh(const Table &t) {
    std::vector<int64_t> w(t.size());
    for (uint64_t u = 0; u < t.size(); ++u) {
        int64_t s = 0;
        for (uint64_t x = 0; x < t.size(); ++x) {
            s += (t[x] ^ parity(u & x)) ? -1 : 1;
        }
        w[u] = s;
    }
    return w;
}

// lambda_u = sum_{x <= u} F(x) over F_2.
inline Table anf(const Table &t) {
    Table a(t.size());
    for (uint64_t u = 0; u < t.size(); ++u) {
        uint8_t s = 0;
        for (uint64_t x = 0; x < t.size(); ++x) {
            if ((x & ~u) == 0) {
                s ^= t[x];
            }
        }
        a[u] = s;
    }
    return a;
}

inline Table derivative(const Table &t, const std::vector<uint64_t> &dirs) {
    Table out(t.size());
    for (uint64_t x = 0; x < t.size(); ++x) {
        uint8_t s = 0;
        for (uint64_t subset = 0; subset < (uint64_t{1} << dirs.size()); ++subset) {
            uint64_t point = x;
            for (size_t i = 0; i < dirs.size(); ++i) {
                if ((subset >> i) & 1) {
                    point ^= dirs[i];
                }
            }
            s ^= t[point];
        }
        out[x] = s;
    }
    return out;
}

// Literal sum over (x, x1..xk) of the subset product; returns the integer
// numerator over 2^{(k+1)n}.
inline int64_t gowers_sum(const Table &t, int n, int k) {
    uint64_t size = uint64_t{1} << n;
    uint64_t tuples = uint64_t{1} << ((k + 1) * n);
    int64_t total = 0;
    for (uint64_t tuple = 0; tuple < tuples; ++tuple) {
        uint64_t x = tuple & (size - 1);
        int p = 0;
        for (uint64_t subset = 0; subset < (uint64_t{1} << k); ++subset) {
            uint64_t point = x;
            for (int i = 0; i < k; ++i) {
                if ((subset >> i) & 1) {
                    point ^= (tuple >> ((i + 1) * n)) & (size - 1);
                }
            }
            p ^= t[point];
        }
        total += p ? -1 : 1;
    }
    return total;
}

// Number of (x, y) pairs with F(x) + F(y) = F(x + y).
inline uint64_t blr_passing_pairs(const Table &t) {
    uint64_t count = 0;
    for (uint64_t x = 0; x < t.size(); ++x) {
        for (uint64_t y = 0; y < t.size(); ++y) {
            count += (t[x] ^ t[y]) == t[x ^ y];
        }
    }
    return count;
}

// Final amplitudes of the U_2 circuit from its closed form:
// C(x', a', b') = 2^{-3n} sum_{x,a,b} (-1)^{Delta_{a,b}F(x) + a.a' + b.b' + x.x'}.
inline std::vector<double> u2_closed_form(const Table &t, int n) {
    uint64_t size = uint64_t{1} << n;
    uint64_t dim = uint64_t{1} << (3 * n);
    std::vector<double> sign(dim);
    for (uint64_t x = 0; x < size; ++x) {
        for (uint64_t a = 0; a < size; ++a) {
            for (uint64_t b = 0; b < size; ++b) {
                int d = t[x] ^ t[x ^ a] ^ t[x ^ b] ^ t[x ^ a ^ b];
                sign[(x << (2 * n)) | (a << n) | b] = d ? -1.0 : 1.0;
            }
        }
    }
    std::vector<double> out(dim);
    for (uint64_t row = 0; row < dim; ++row) {
        double s = 0.0;
        for (uint64_t col = 0; col < dim; ++col) {
            s += parity(row & col) ? -sign[col] : sign[col];
        }
        out[row] = s / static_cast<double>(dim);
    }
    return out;
}

}  // namespace oracle
