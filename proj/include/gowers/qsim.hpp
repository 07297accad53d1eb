#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gowers/boolean_function.hpp"

namespace gowers::qsim {

/// Largest simulated dimension, as m*n qubits.
inline constexpr int kMaxQubits = 24;

/// m registers of n qubits each. Register 1 holds the most significant n bits
/// of a basis index; inside a register x_1 is the most significant bit, so a
/// basis index reads as the concatenation x^(1) || x^(2) || ... || x^(m).
/// The |-> target qubit of the phase oracle is never stored.
struct RegisterLayout {
    int n = 0;
    int m = 0;

    RegisterLayout(int qubits_per_register, int registers);

    int qubits() const { return n * m; }
    uint64_t dimension() const { return uint64_t{1} << qubits(); }
    uint64_t content(uint64_t basis, int reg) const;
    int shift(int reg) const { return (m - reg) * n; }

    bool operator==(const RegisterLayout &) const = default;
};

struct PhaseOracle {
    int target;
    bool operator==(const PhaseOracle &) const = default;
};

/// Register dst receives dst XOR src.
struct MCnot {
    int dst;
    int src;
    bool operator==(const MCnot &) const = default;
};

struct HadamardAll {
    bool operator==(const HadamardAll &) const = default;
};

using Gate = std::variant<PhaseOracle, MCnot, HadamardAll>;

/// Gates in application order (first applied first).
class Circuit {
  public:
    Circuit(RegisterLayout layout, std::vector<Gate> gates);

    const RegisterLayout &layout() const { return layout_; }
    const std::vector<Gate> &gates() const { return gates_; }

    size_t oracle_count() const;
    size_t mcnot_count() const;

    /// Everything before a trailing HadamardAll.
    Circuit without_final_hadamard() const;

    /// One gate per line: "UF r<i>", "MCNOT r<i> r<j>", "HALL".
    std::string dump() const;
    static Circuit parse(RegisterLayout layout, std::string_view text);

    bool operator==(const Circuit &) const = default;

  private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
};

/// Real amplitudes over the computational basis. Every gate in the model is
/// real orthogonal, so the complex phase never leaves {+1, -1}.
struct StateVector {
    RegisterLayout layout;
    std::vector<double> amp;

    double norm_squared() const;
};

StateVector uniform_state(RegisterLayout layout);

StateVector apply(StateVector state, const Gate &gate, const BooleanFunction &f);

/// U_F, M_1^2, U_F, M_1^2, M_1^3, U_F, M_1^2, U_F, M_1^2, M_1^3, H on 3 registers.
Circuit build_u2_circuit(int n);

/// The fifteen-gate third-order circuit kept verbatim, on 4 registers,
/// followed by HadamardAll. Kept verbatim; it does not evaluate x+a+c.
Circuit build_appendix_u3_circuit(int n);

enum class WalkOrder {
    /// D_k = D_{k-1}, M_1^{k+1}, D_{k-1}, M_1^{k+1}; matches the U_2 circuit at k = 2.
    nested,
    /// Reflected binary Gray code over [k]; one MCNOT between consecutive oracles.
    gray_code,
};

/// k+1 registers; 2^k oracle calls visiting x + sum_{i in S} x^(i) for every
/// S subset [k], register 1 returned to x, then HadamardAll.
Circuit build_derivative_walk_circuit(int n, int k, WalkOrder order = WalkOrder::nested);

StateVector run(const Circuit &circuit, const BooleanFunction &f);

inline double amplitude_at_zero(const StateVector &state) { return state.amp[0]; }

/// Result of tracking register contents symbolically. Each coset is a mask
/// over the symbols {x^(1) = x, x^(2), ..., x^(m)}, bit r-1 for register r.
struct PhaseAudit {
    int registers = 0;
    std::vector<uint64_t> oracle_cosets;
    uint64_t final_register1 = 0;
    bool registers_restored = false;
    bool implements_derivative = false;

    size_t oracle_calls() const { return oracle_cosets.size(); }
    size_t distinct_cosets() const;
    /// Symbols not reached by any oracle call, among the full derivative set.
    std::vector<uint64_t> missing_cosets() const;
};

PhaseAudit phase_audit(const Circuit &circuit);

/// Names a coset mask "x", "x+a", "x+a+b+c", ...; registers beyond four use x2, x3, ...
std::string describe_coset(uint64_t mask, int registers);

}  // namespace gowers::qsim
