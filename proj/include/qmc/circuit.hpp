// circuit.hpp
// Elementary gates W (Walsh-Hadamard), P_theta (phase shift), X (controlled
// not), compound gates with declared costs, ordered circuits, and the cost
// ledger: total = queries * qubits + elementary gates.

#pragma once

#include "qmc/state.hpp"

#include <functional>
#include <string>

namespace qmc {

namespace kernel {
// Raw strided kernels on a 2^m amplitude block; `qubit` uses the qubit-0-MSB
// convention of state.hpp.
void hadamard(Eigen::Ref<Eigen::VectorXcd> amps, int m, int qubit);
void phase(Eigen::Ref<Eigen::VectorXcd> amps, int m, int qubit, double theta);
void cnot(Eigen::Ref<Eigen::VectorXcd> amps, int m, int control, int target);
} // namespace kernel

enum class GateKind { WalshHadamard, PhaseShift, ControlledNot, Compound };

struct GateOp {
    GateKind kind = GateKind::WalshHadamard;
    int qubit = -1;                 // W and P target
    int control = -1, target = -1;  // X
    double theta = 0.0;             // P, normalized to [0, 2*pi)

    // Compound gates: a named unitary acting through `action`, carrying a
    // declared elementary-gate cost and a query count for the ledger.
    std::string label;
    std::vector<int> qubits;
    std::function<void(StateVector&)> action;
    long declared_gate_cost = 0;
    long query_count = 0;

    bool is_query() const { return query_count > 0; }
};

GateOp walsh_hadamard(int qubit);
GateOp phase_shift(int qubit, double theta);
GateOp controlled_not(int control, int target);
GateOp compound(std::string label, std::vector<int> qubits,
                std::function<void(StateVector&)> action,
                long declared_gate_cost, long query_count = 0);

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    explicit Circuit(int m = 0) : num_qubits(m) {}

    Circuit& push(GateOp op);
    Circuit& w(int qubit) { return push(walsh_hadamard(qubit)); }
    Circuit& p(int qubit, double theta) { return push(phase_shift(qubit, theta)); }
    Circuit& x(int control, int target) { return push(controlled_not(control, target)); }

    long query_count() const;
};

struct CostReport {
    long num_queries = 0;
    long num_qubits = 0;
    long num_elementary_gates = 0;
    long total_cost = 0;
};

void apply_gate(StateVector& psi, const GateOp& op);
void apply_circuit(StateVector& psi, const Circuit& circuit);

CostReport tally_cost(const Circuit& circuit);

// Compound builders used across the toolkit.

// Doubly-controlled NOT as a basis permutation; declared cost matches
// toffoli_elementary's gate count.
GateOp make_toffoli(int c1, int c2, int target);
inline constexpr long kToffoliGateCost = 15;

// The same unitary spelled out in {W, P_{pi/4}, P_{7pi/4}, X}.
std::vector<GateOp> toffoli_elementary(int c1, int c2, int target);

// Sign flip of every basis state whose `count` qubits starting at `first`
// are all zero. Declared cost: count^2 (ancilla-free phase cascade).
GateOp make_reflect_zero(int first, int count);

// Inverse Fourier transform on the top `t` qubits; declared cost
// t(t+1)/2 + t (controlled phases plus Hadamards of the textbook circuit).
GateOp make_inverse_qft(int t);

} // namespace qmc
