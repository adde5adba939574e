// estimate.hpp
// Grover search and amplitude-estimation based mean computation.
//
// The Grover operator Q = A (2|0><0| - I) A^dag S_chi acts as a rotation by
// 2*theta (sin^2 theta = a) on the plane spanned by the good and bad
// components of A|0>. Amplitude estimation is phase estimation on Q: a
// t-qubit register of controlled powers, inverse Fourier transform, and the
// readout a~ = sin^2(pi y / 2^t).
//
// Two interchangeable backends: a full statevector simulation of the
// t + system register, and an exact two-level computation of the same
// outcome distribution in Q's eigenbasis. Unit tests pin their equality;
// large runs use the two-level path, small ones default to the gate-level
// simulation.

#pragma once

#include "qmc/oracle.hpp"

namespace qmc {

enum class SimMode { Auto, FullStatevector, TwoLevel };

struct EstimateConfig {
    int phase_bits = 6;        // t; M = 2^t - 1 Grover applications per run
    int repetitions = 11;      // odd; median of the per-repetition estimates
    std::uint64_t seed = 0;
    SimMode mode = SimMode::Auto;
};

struct EstimateResult {
    double value = 0.0;
    long queries_used = 0;            // total over all repetitions
    long queries_per_repetition = 0;
    CostReport cost;                  // aggregated over repetitions
    std::vector<double> trials;       // raw per-repetition estimates
    long classical_evals = 0;         // classical-side work, tracked separately
};

// Preparation A together with the good-subspace marking; the trailing qubit
// of the system block is the marked ancilla.
struct MarkedPreparation {
    int system_qubits = 0;
    double success_probability = 0.0;  // a, exact from the defining table
    long queries_per_grover = 0;
    long gates_per_grover = 0;         // declared elementary cost per Q
    long prep_queries = 0;
    long prep_gates = 0;
    std::string label;
    std::function<void(Eigen::Ref<Eigen::VectorXcd>)> prepare;  // A
    std::function<void(Eigen::Ref<Eigen::VectorXcd>)> grover;   // Q
};

// Uniform superposition over indices, boolean marking via the xor query on a
// kickback ancilla held in (|0>-|1>)/sqrt(2); one query per Q.
MarkedPreparation make_boolean_preparation(const BooleanOracle& oracle);
// Uniform superposition + rotation query; a = mean of the unit-encoded
// values; two queries per Q (the query and its inverse inside A^dag).
MarkedPreparation make_rotation_preparation(const SequenceOracle& oracle);
// Bit-encoded route: uniform superposition, xor query into the value
// register, then the value-controlled ancilla rotation; same a as the
// rotation route up to 1e-15.
MarkedPreparation make_bit_value_preparation(const SequenceOracle& oracle);
// Direct ancilla rotation with exact success probability a (no encoding
// grid); test and calibration plumbing.
MarkedPreparation make_amplitude_preparation(double a);

int grover_iterations(std::int64_t n);

// Preparation plus floor(pi/4 sqrt(N)) Grover iterations on m1+1 qubits.
Circuit grover_circuit(const BooleanOracle& oracle);

// Prepares the uniform superposition, runs floor(pi/4 sqrt(N)) Grover
// iterations, measures the index register.
std::int64_t grover_search(const BooleanOracle& oracle, Rng& rng);

// Gate-level circuit (also the cost ledger) of one amplitude-estimation run.
Circuit amplitude_estimation_circuit(const MarkedPreparation& prep, int phase_bits);

// Exact outcome distribution over the phase-register readout y.
Eigen::VectorXd phase_outcome_distribution(double a, int phase_bits);
// The same distribution from the full statevector simulation.
Eigen::VectorXd phase_distribution_full(const MarkedPreparation& prep, int phase_bits);

// One amplitude-estimation run; returns a~ = sin^2(pi y / 2^t).
double amplitude_estimate(const MarkedPreparation& prep, int phase_bits, Rng& rng,
                          SimMode mode = SimMode::Auto);

// Middle order statistic; requires an odd count.
double median_boost(std::vector<double> runs);

EstimateResult mean_boolean(const BooleanOracle& oracle, const EstimateConfig& cfg);
// Mean of the midpoint-decoded sequence values mapped back to [a,b];
// bit_path routes the marking through the value register.
EstimateResult mean_real(const SequenceOracle& oracle, const EstimateConfig& cfg,
                         bool bit_path = false);

} // namespace qmc
