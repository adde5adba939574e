// state.hpp
// Statevector of an m-qubit register.
//
// Basis convention (fixed; all oracle encodings depend on it): a basis index
// i = (i0 i1 ... i_{m-1})_2 lists qubit 0 first, i.e. qubit 0 is the MOST
// significant bit of i. Qubit j therefore owns bit (m-1-j) of the index.

#pragma once

#include "qmc/common.hpp"

namespace qmc {

struct StateVector {
    int num_qubits = 0;
    Eigen::VectorXcd amps;

    Eigen::Index dim() const { return amps.size(); }
};

inline std::uint64_t qubit_mask(int num_qubits, int qubit) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

// |i> on m qubits.
StateVector init_classical(int num_qubits, std::uint64_t basis_index);

double norm_error(const StateVector& psi);
void check_normalized(const StateVector& psi, double tol = 1e-10);

// Max-amplitude distance, the metric used by the involution checks.
double max_amp_distance(const StateVector& a, const StateVector& b);

// Samples a basis index with probability |amps[i]|^2 (inverse CDF walk).
// Does not mutate the state; re-prepare to model repeated experiments.
std::uint64_t measure(const StateVector& psi, Rng& rng);

// Marginal measurement of the top `top_qubits` qubits (a contiguous block
// because high qubits are high index bits).
std::uint64_t measure_top(const StateVector& psi, int top_qubits, Rng& rng);

} // namespace qmc
