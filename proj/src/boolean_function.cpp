#include "gowers/boolean_function.hpp"

#include <bit>
#include <cctype>

#include "gowers/errors.hpp"

namespace gowers {

namespace {

// Bit positions whose stride-s bit is clear, for the in-word strides.
constexpr uint64_t kStrideMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Applies x -> x ^ low to the bit positions of one word (low < 64).
uint64_t xor_permute_word(uint64_t v, uint64_t low) {
    for (int j = 0; j < 6; ++j) {
        if ((low >> j) & 1) {
            uint64_t s = uint64_t{1} << j;
            v = ((v & kStrideMask[j]) << s) | ((v >> s) & kStrideMask[j]);
        }
    }
    return v;
}

size_t word_count(int n) { return n >= 6 ? size_t{1} << (n - 6) : 1; }

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

class AnfParser {
  public:
    AnfParser(std::string_view text, int n) : text_(text), n_(n), coeffs_(n) {}

    BooleanFunction parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("empty polynomial", pos_);
        }
        accumulate_term();
        skip_space();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '+') {
                throw ParseError(std::string("expected '+' but found '") + text_[pos_] + "'", pos_);
            }
            ++pos_;
            accumulate_term();
            skip_space();
        }
        return coeffs_;
    }

  private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    // term := factor (('*' | '&') factor)*
    void accumulate_term() {
        uint64_t monomial = 0;
        bool vanishes = false;
        parse_factor(monomial, vanishes);
        skip_space();
        while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '&')) {
            ++pos_;
            parse_factor(monomial, vanishes);
            skip_space();
        }
        if (!vanishes) {
            coeffs_.set(monomial, !coeffs_(monomial));
        }
    }

    void parse_factor(uint64_t &monomial, bool &vanishes) {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("unexpected end of polynomial", pos_);
        }
        char c = text_[pos_];
        if (c == 'x' || c == 'X') {
            size_t start = pos_++;
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("expected variable index after 'x'", pos_);
            }
            long index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = index * 10 + (text_[pos_] - '0');
                if (index > 1000) {
                    break;
                }
                ++pos_;
            }
            if (index < 1 || index > n_) {
                throw ParseError("variable index out of range [1, " + std::to_string(n_) + "]", start);
            }
            monomial |= uint64_t{1} << (n_ - index);
            return;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("constants must be 0 or 1", pos_ - 1);
            }
            if (c == '0') {
                vanishes = true;
            }
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    int n_;
    size_t pos_ = 0;
    BooleanFunction coeffs_;
};

// In-place binary Moebius transform (an involution over F_2).
void moebius(BooleanFunction &f) {
    auto words = f.mutable_words();
    int n = f.n();
    for (int j = 0; j < n && j < 6; ++j) {
        uint64_t s = uint64_t{1} << j;
        for (auto &w : words) {
            w ^= (w & kStrideMask[j]) << s;
        }
    }
    for (int j = 6; j < n; ++j) {
        size_t stride = size_t{1} << (j - 6);
        for (size_t w = 0; w < words.size(); ++w) {
            if (w & stride) {
                words[w] ^= words[w ^ stride];
            }
        }
    }
}

}  // namespace

void check_variable_count(int n) {
    if (n < 1) {
        throw DimensionError("variable count must be at least 1");
    }
    if (n > kMaxVariables) {
        throw CapacityError("variable count " + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxVariables));
    }
}

F2Vector F2Vector::parse(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw ParseError("bit vector must have 1..63 digits", 0);
    }
    F2Vector v{static_cast<int>(bits.size()), 0};
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw ParseError("bit vector digits must be 0 or 1", i);
        }
        v.index = (v.index << 1) | static_cast<uint64_t>(bits[i] == '1');
    }
    return v;
}

std::string F2Vector::str() const {
    std::string s(static_cast<size_t>(dim), '0');
    for (int i = 0; i < dim; ++i) {
        if ((index >> (dim - 1 - i)) & 1) {
            s[static_cast<size_t>(i)] = '1';
        }
    }
    return s;
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_variable_count(n);
    words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_bits(int n, std::span<const uint8_t> table) {
    BooleanFunction f(n);
    if (table.size() != f.size()) {
        throw DimensionError("truth table length " + std::to_string(table.size()) + " != 2^" + std::to_string(n));
    }
    for (uint64_t x = 0; x < table.size(); ++x) {
        if (table[x] > 1) {
            throw DomainError("truth table entries must be 0 or 1");
        }
        f.set(x, table[x] != 0);
    }
    return f;
}

BooleanFunction BooleanFunction::from_tt_hex(int n, std::string_view hex) {
    BooleanFunction f(n);
    uint64_t bits = f.size();
    size_t digits = static_cast<size_t>((bits + 3) / 4);
    if (hex.size() != digits) {
        throw ParseError("expected " + std::to_string(digits) + " hex digits for n=" + std::to_string(n) +
                             ", got " + std::to_string(hex.size()),
                         0);
    }
    uint64_t pad = digits * 4 - bits;
    for (size_t d = 0; d < digits; ++d) {
        int v = hex_value(hex[d]);
        if (v < 0) {
            throw ParseError(std::string("invalid hex digit '") + hex[d] + "'", d);
        }
        for (int b = 0; b < 4; ++b) {
            bool bit = (v >> (3 - b)) & 1;
            uint64_t position = d * 4 + static_cast<uint64_t>(b);
            if (position < pad) {
                if (bit) {
                    throw ParseError("hex value exceeds 2^n-bit truth table", d);
                }
                continue;
            }
            f.set(position - pad, bit);
        }
    }
    return f;
}

BooleanFunction BooleanFunction::linear(F2Vector u) {
    BooleanFunction f(u.dim);
    if (u.index >= f.size()) {
        throw DimensionError("linear coefficient vector outside F_2^n");
    }
    for (uint64_t x = 0; x < f.size(); ++x) {
        f.set(x, dot(u.index, x));
    }
    return f;
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
    BooleanFunction f(n);
    return value ? ~f : f;
}

void BooleanFunction::set(uint64_t x, bool value) {
    uint64_t bit = uint64_t{1} << (x & 63);
    if (value) {
        words_[x >> 6] |= bit;
    } else {
        words_[x >> 6] &= ~bit;
    }
}

void BooleanFunction::clear_padding() {
    if (n_ < 6) {
        words_[0] &= (uint64_t{1} << (uint64_t{1} << n_)) - 1;
    }
}

uint64_t BooleanFunction::weight() const {
    uint64_t w = 0;
    for (uint64_t word : words_) {
        w += static_cast<uint64_t>(std::popcount(word));
    }
    return w;
}

std::string BooleanFunction::to_tt_hex() const {
    uint64_t bits = size();
    uint64_t digits = (bits + 3) / 4;
    uint64_t pad = digits * 4 - bits;
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(digits);
    for (uint64_t d = 0; d < digits; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            uint64_t position = d * 4 + static_cast<uint64_t>(b);
            v <<= 1;
            if (position >= pad && (*this)(position - pad)) {
                v |= 1;
            }
        }
        out.push_back(kHex[v]);
    }
    return out;
}

std::vector<uint8_t> BooleanFunction::to_bits() const {
    std::vector<uint8_t> out(size());
    for (uint64_t x = 0; x < size(); ++x) {
        out[x] = (*this)(x);
    }
    return out;
}

std::vector<int8_t> BooleanFunction::signs() const {
    std::vector<int8_t> out(size());
    for (uint64_t x = 0; x < size(); ++x) {
        out[x] = (*this)(x) ? -1 : 1;
    }
    return out;
}

BooleanFunction BooleanFunction::translate(uint64_t a) const {
    if (a >= size()) {
        throw DimensionError("translation vector outside F_2^n");
    }
    BooleanFunction out(n_);
    uint64_t high = a >> 6;
    uint64_t low = a & 63;
    for (size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] = xor_permute_word(words_[w ^ high], low);
    }
    return out;
}

void BooleanFunction::xor_translate_into(uint64_t a, BooleanFunction &dst) const {
    if (a >= size() || dst.n_ != n_) {
        throw DimensionError("translation vector outside F_2^n");
    }
    uint64_t high = a >> 6;
    uint64_t low = a & 63;
    for (size_t w = 0; w < words_.size(); ++w) {
        dst.words_[w] ^= xor_permute_word(words_[w ^ high], low);
    }
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction &other) const {
    if (other.n_ != n_) {
        throw DimensionError("functions have different variable counts");
    }
    BooleanFunction out(*this);
    for (size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] ^= other.words_[w];
    }
    return out;
}

BooleanFunction BooleanFunction::operator~() const {
    BooleanFunction out(*this);
    for (auto &w : out.words_) {
        w = ~w;
    }
    out.clear_padding();
    return out;
}

std::vector<uint64_t> Anf::monomials() const {
    std::vector<uint64_t> out;
    for (uint64_t u = 0; u < coeffs_.size(); ++u) {
        if (coeffs_(u)) {
            out.push_back(u);
        }
    }
    return out;
}

std::string Anf::str() const {
    std::string out;
    int n = coeffs_.n();
    for (uint64_t u : monomials()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (u == 0) {
            out += "1";
            continue;
        }
        std::string term;
        for (int i = 1; i <= n; ++i) {
            if ((u >> (n - i)) & 1) {
                if (!term.empty()) {
                    term += "*";
                }
                term += "x" + std::to_string(i);
            }
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

BooleanFunction from_anf_string(std::string_view spec, int n) {
    check_variable_count(n);
    return from_anf(Anf(AnfParser(spec, n).parse()));
}

Anf to_anf(const BooleanFunction &f) {
    BooleanFunction coeffs(f);
    moebius(coeffs);
    return Anf(std::move(coeffs));
}

BooleanFunction from_anf(const Anf &anf) {
    BooleanFunction table(anf.coefficients());
    moebius(table);
    return table;
}

int degree(const BooleanFunction &f) {
    Anf anf = to_anf(f);
    int best = 0;
    auto words = anf.coefficients().words();
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t bits = words[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            uint64_t u = (static_cast<uint64_t>(w) << 6) | static_cast<uint64_t>(b);
            best = std::max(best, std::popcount(u));
        }
    }
    return best;
}

BooleanFunction derivative(const BooleanFunction &f, std::span<const uint64_t> dirs) {
    BooleanFunction g(f);
    for (uint64_t a : dirs) {
        g = g ^ g.translate(a);
    }
    return g;
}

BooleanFunction derivative(const BooleanFunction &f, std::span<const F2Vector> dirs) {
    std::vector<uint64_t> packed;
    packed.reserve(dirs.size());
    for (const auto &d : dirs) {
        if (d.dim != f.n()) {
            throw DimensionError("direction has dimension " + std::to_string(d.dim) + ", expected " +
                                 std::to_string(f.n()));
        }
        packed.push_back(d.index);
    }
    return derivative(f, std::span<const uint64_t>(packed));
}

HammingResult hamming(const BooleanFunction &f, const BooleanFunction &g) {
    uint64_t d = (f ^ g).weight();
    return {d, Dyadic(static_cast<int128>(d), f.n())};
}

}  // namespace gowers
