#include "gowers/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "gowers/errors.hpp"
#include "gowers/spectral.hpp"

namespace gowers::qsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_register(const RegisterLayout &layout, int reg) {
    if (reg < 1 || reg > layout.m) {
        throw DimensionError("register r" + std::to_string(reg) + " outside [1, " + std::to_string(layout.m) + "]");
    }
}

void check_gate(const RegisterLayout &layout, const Gate &gate) {
    std::visit(overloaded{
                   [&](const PhaseOracle &g) { check_register(layout, g.target); },
                   [&](const MCnot &g) {
                       check_register(layout, g.dst);
                       check_register(layout, g.src);
                       if (g.dst == g.src) {
                           throw DimensionError("MCNOT needs distinct registers");
                       }
                   },
                   [](const HadamardAll &) {},
               },
               gate);
}

int parse_register(const std::string &token, size_t line) {
    if (token.size() < 2 || token[0] != 'r') {
        throw ParseError("expected register token r<i>, got '" + token + "'", line);
    }
    try {
        size_t used = 0;
        int reg = std::stoi(token.substr(1), &used);
        if (used + 1 != token.size()) {
            throw ParseError("bad register token '" + token + "'", line);
        }
        return reg;
    } catch (const std::logic_error &) {
        throw ParseError("bad register token '" + token + "'", line);
    }
}

void append_nested_walk(std::vector<Gate> &gates, int k) {
    if (k == 0) {
        gates.emplace_back(PhaseOracle{1});
        return;
    }
    append_nested_walk(gates, k - 1);
    gates.emplace_back(MCnot{1, k + 1});
    append_nested_walk(gates, k - 1);
    gates.emplace_back(MCnot{1, k + 1});
}

}  // namespace

RegisterLayout::RegisterLayout(int qubits_per_register, int registers) : n(qubits_per_register), m(registers) {
    if (n < 1 || m < 1) {
        throw DimensionError("register layout needs n >= 1 and m >= 1");
    }
    if (n * m > kMaxQubits) {
        throw CapacityError("simulation of " + std::to_string(n * m) + " qubits exceeds limit " +
                            std::to_string(kMaxQubits));
    }
}

uint64_t RegisterLayout::content(uint64_t basis, int reg) const {
    return (basis >> shift(reg)) & ((uint64_t{1} << n) - 1);
}

Circuit::Circuit(RegisterLayout layout, std::vector<Gate> gates) : layout_(layout), gates_(std::move(gates)) {
    for (const auto &gate : gates_) {
        check_gate(layout_, gate);
    }
}

size_t Circuit::oracle_count() const {
    return static_cast<size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) {
        return std::holds_alternative<PhaseOracle>(g);
    }));
}

size_t Circuit::mcnot_count() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return std::holds_alternative<MCnot>(g); }));
}

Circuit Circuit::without_final_hadamard() const {
    std::vector<Gate> prefix = gates_;
    if (!prefix.empty() && std::holds_alternative<HadamardAll>(prefix.back())) {
        prefix.pop_back();
    }
    return Circuit(layout_, std::move(prefix));
}

std::string Circuit::dump() const {
    std::ostringstream out;
    for (const auto &gate : gates_) {
        std::visit(overloaded{
                       [&](const PhaseOracle &g) { out << "UF r" << g.target << '\n'; },
                       [&](const MCnot &g) { out << "MCNOT r" << g.dst << " r" << g.src << '\n'; },
                       [&](const HadamardAll &) { out << "HALL\n"; },
                   },
                   gate);
    }
    return out.str();
}

Circuit Circuit::parse(RegisterLayout layout, std::string_view text) {
    std::vector<Gate> gates;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string token; fields >> token;) {
            tokens.push_back(token);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens[0] == "UF" && tokens.size() == 2) {
            gates.emplace_back(PhaseOracle{parse_register(tokens[1], line_number)});
        } else if (tokens[0] == "MCNOT" && tokens.size() == 3) {
            gates.emplace_back(MCnot{parse_register(tokens[1], line_number), parse_register(tokens[2], line_number)});
        } else if (tokens[0] == "HALL" && tokens.size() == 1) {
            gates.emplace_back(HadamardAll{});
        } else {
            throw ParseError("unrecognized gate line '" + line + "'", line_number);
        }
    }
    return Circuit(layout, std::move(gates));
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (double a : amp) {
        sum += a * a;
    }
    return sum;
}

StateVector uniform_state(RegisterLayout layout) {
    double value = std::pow(2.0, -0.5 * layout.qubits());
    return StateVector{layout, std::vector<double>(layout.dimension(), value)};
}

StateVector apply(StateVector state, const Gate &gate, const BooleanFunction &f) {
    const RegisterLayout &layout = state.layout;
    check_gate(layout, gate);
    auto &amp = state.amp;
    std::visit(overloaded{
                   [&](const PhaseOracle &g) {
                       if (f.n() != layout.n) {
                           throw DimensionError("oracle function has " + std::to_string(f.n()) +
                                                " variables, register holds " + std::to_string(layout.n));
                       }
                       for (uint64_t b = 0; b < amp.size(); ++b) {
                           if (f(layout.content(b, g.target))) {
                               amp[b] = -amp[b];
                           }
                       }
                   },
                   [&](const MCnot &g) {
                       const int dst_shift = layout.shift(g.dst);
                       // XOR-ing one register into another is an involution: swap pairs once.
                       for (uint64_t b = 0; b < amp.size(); ++b) {
                           uint64_t image = b ^ (layout.content(b, g.src) << dst_shift);
                           if (image > b) {
                               std::swap(amp[b], amp[image]);
                           }
                       }
                   },
                   [&](const HadamardAll &) {
                       fwht(std::span<double>(amp));
                       double scale = std::pow(2.0, -0.5 * layout.qubits());
                       for (double &a : amp) {
                           a *= scale;
                       }
                   },
               },
               gate);
    return state;
}

Circuit build_u2_circuit(int n) {
    RegisterLayout layout(n, 3);
    std::vector<Gate> gates = {
        PhaseOracle{1}, MCnot{1, 2}, PhaseOracle{1}, MCnot{1, 2}, MCnot{1, 3},
        PhaseOracle{1}, MCnot{1, 2}, PhaseOracle{1}, MCnot{1, 2}, MCnot{1, 3},
        HadamardAll{},
    };
    return Circuit(layout, std::move(gates));
}

Circuit build_appendix_u3_circuit(int n) {
    RegisterLayout layout(n, 4);
    // Printed as a right-to-left composition; listed here in application order.
    std::vector<Gate> gates = {
        PhaseOracle{1}, MCnot{1, 2}, PhaseOracle{1}, MCnot{1, 3}, PhaseOracle{1},
        MCnot{1, 4},    PhaseOracle{1}, MCnot{1, 2}, PhaseOracle{1}, MCnot{1, 3},
        PhaseOracle{1}, MCnot{1, 4},    MCnot{1, 3}, PhaseOracle{1}, MCnot{1, 3},
        HadamardAll{},
    };
    return Circuit(layout, std::move(gates));
}

Circuit build_derivative_walk_circuit(int n, int k, WalkOrder order) {
    if (k < 1) {
        throw DomainError("derivative order k must be at least 1");
    }
    if (static_cast<int64_t>(k + 1) * n > kMaxQubits) {
        throw CapacityError("derivative walk needs (k+1)n <= 24");
    }
    RegisterLayout layout(n, k + 1);
    std::vector<Gate> gates;
    if (order == WalkOrder::nested) {
        append_nested_walk(gates, k);
    } else {
        const uint64_t steps = uint64_t{1} << k;
        gates.emplace_back(PhaseOracle{1});
        for (uint64_t i = 1; i < steps; ++i) {
            gates.emplace_back(MCnot{1, std::countr_zero(i) + 2});
            gates.emplace_back(PhaseOracle{1});
        }
        // The last Gray word is {k}; one more flip returns register 1 to x.
        gates.emplace_back(MCnot{1, k + 1});
    }
    gates.emplace_back(HadamardAll{});
    return Circuit(layout, std::move(gates));
}

StateVector run(const Circuit &circuit, const BooleanFunction &f) {
    if (f.n() != circuit.layout().n) {
        throw DimensionError("function has " + std::to_string(f.n()) + " variables, circuit registers hold " +
                             std::to_string(circuit.layout().n));
    }
    StateVector state = uniform_state(circuit.layout());
    for (const auto &gate : circuit.gates()) {
        state = apply(std::move(state), gate, f);
    }
    return state;
}

size_t PhaseAudit::distinct_cosets() const {
    return std::set<uint64_t>(oracle_cosets.begin(), oracle_cosets.end()).size();
}

std::vector<uint64_t> PhaseAudit::missing_cosets() const {
    std::set<uint64_t> seen(oracle_cosets.begin(), oracle_cosets.end());
    std::vector<uint64_t> missing;
    for (uint64_t shift = 0; shift < (uint64_t{1} << (registers - 1)); ++shift) {
        uint64_t mask = (shift << 1) | 1;
        if (!seen.contains(mask)) {
            missing.push_back(mask);
        }
    }
    return missing;
}

PhaseAudit phase_audit(const Circuit &circuit) {
    const int m = circuit.layout().m;
    std::vector<uint64_t> contents(static_cast<size_t>(m) + 1);
    for (int r = 1; r <= m; ++r) {
        contents[static_cast<size_t>(r)] = uint64_t{1} << (r - 1);
    }
    PhaseAudit audit;
    audit.registers = m;
    const auto &gates = circuit.gates();
    for (size_t i = 0; i < gates.size(); ++i) {
        std::visit(overloaded{
                       [&](const PhaseOracle &g) { audit.oracle_cosets.push_back(contents[static_cast<size_t>(g.target)]); },
                       [&](const MCnot &g) {
                           contents[static_cast<size_t>(g.dst)] ^= contents[static_cast<size_t>(g.src)];
                       },
                       [&](const HadamardAll &) {
                           if (i + 1 != gates.size()) {
                               throw std::invalid_argument("phase audit: HadamardAll before the end of the circuit");
                           }
                       },
                   },
                   gates[i]);
    }
    audit.final_register1 = contents[1];
    audit.registers_restored = true;
    for (int r = 1; r <= m; ++r) {
        audit.registers_restored &= contents[static_cast<size_t>(r)] == (uint64_t{1} << (r - 1));
    }
    const uint64_t expected = uint64_t{1} << (m - 1);
    audit.implements_derivative = audit.final_register1 == 1 && audit.oracle_calls() == expected &&
                                  audit.distinct_cosets() == expected && audit.missing_cosets().empty();
    return audit;
}

std::string describe_coset(uint64_t mask, int registers) {
    static constexpr const char *kShortNames[] = {"x", "a", "b", "c"};
    std::string out;
    for (int r = 0; r < registers; ++r) {
        if (((mask >> r) & 1) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        out += registers <= 4 ? kShortNames[r] : (r == 0 ? std::string("x") : "x" + std::to_string(r + 1));
    }
    return out.empty() ? "0" : out;
}

}  // namespace gowers::qsim
