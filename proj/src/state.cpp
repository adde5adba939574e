#include "qmc/state.hpp"

namespace qmc {

StateVector init_classical(int num_qubits, std::uint64_t basis_index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::domain_error("init_classical: qubit count outside [1, " +
                                std::to_string(kMaxQubits) + "]");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (basis_index >= dim)
        throw std::domain_error("init_classical: basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
    StateVector psi;
    psi.num_qubits = num_qubits;
    psi.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    psi.amps[static_cast<Eigen::Index>(basis_index)] = Complex{1.0, 0.0};
    return psi;
}

double norm_error(const StateVector& psi) {
    return std::abs(psi.amps.squaredNorm() - 1.0);
}

void check_normalized(const StateVector& psi, double tol) {
    if (norm_error(psi) > tol)
        throw std::domain_error("state norm deviates from 1 beyond tolerance");
}

double max_amp_distance(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::domain_error("max_amp_distance: dimension mismatch");
    return (a.amps - b.amps).cwiseAbs().maxCoeff();
}

std::uint64_t measure(const StateVector& psi, Rng& rng) {
    check_normalized(psi);
    const double u = uniform01(rng);
    double cum = 0.0;
    const Eigen::Index n = psi.dim();
    for (Eigen::Index i = 0; i < n; ++i) {
        cum += std::norm(psi.amps[i]);
        if (u < cum) return static_cast<std::uint64_t>(i);
    }
    return static_cast<std::uint64_t>(n - 1); // u landed in rounding slack
}

std::uint64_t measure_top(const StateVector& psi, int top_qubits, Rng& rng) {
    if (top_qubits < 1 || top_qubits > psi.num_qubits)
        throw std::domain_error("measure_top: bad register size");
    check_normalized(psi);
    const Eigen::Index block = Eigen::Index{1} << (psi.num_qubits - top_qubits);
    const std::uint64_t outcomes = std::uint64_t{1} << top_qubits;
    const double u = uniform01(rng);
    double cum = 0.0;
    for (std::uint64_t y = 0; y < outcomes; ++y) {
        cum += psi.amps.segment(static_cast<Eigen::Index>(y) * block, block).squaredNorm();
        if (u < cum) return y;
    }
    return outcomes - 1;
}

} // namespace qmc
