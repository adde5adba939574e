// compiler.hpp
// Single-qubit synthesis over the gate alphabet {W, P_theta}: exact
// Euler-style words P_delta W P_gamma W P_beta, and breadth-limited search
// over the finite alphabet {W, P_{pi/4}}.

#pragma once

#include "qmc/circuit.hpp"

namespace qmc {

struct Letter {
    bool is_w = true;      // otherwise a phase shift
    double theta = 0.0;
};

struct GateWord {
    std::vector<Letter> letters;  // letters[0] acts first
    int target_qubit = 0;
};

Eigen::Matrix2cd letter_matrix(const Letter& l);
Eigen::Matrix2cd word_matrix(const GateWord& word);
std::vector<GateOp> word_ops(const GateWord& word);

bool is_unitary(const Eigen::Matrix2cd& u, double tol = 1e-10);

// min over phi of the Frobenius distance ||A - e^{i phi} B||.
double phase_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

// Exact compilation: returns a word whose product matches U up to a global
// phase, with phase_distance <= 1e-10.
GateWord compile_single_qubit(const Eigen::Matrix2cd& u);

struct ApproxResult {
    GateWord word;
    double distance = 0.0;
};

// Exhaustive search over words in {W, P_{pi/4}} up to length max_len
// (adjacent W pairs and P runs past 7 pruned as identities); ties broken
// toward the lexicographically smallest word (W before P).
ApproxResult approx_search(const Eigen::Matrix2cd& u, int max_len);

} // namespace qmc
