// experiment.hpp
// Seeded experiment drivers: the quantum RNG demo, convergence studies over
// method families, and their CSV emission.

#pragma once

#include "qmc/baselines.hpp"
#include "qmc/estimate.hpp"
#include "qmc/integrate.hpp"

namespace qmc {

struct QrngReport {
    int qubits = 0;
    long samples = 0;
    std::vector<long> counts;
    double chi_square = 0.0;
    double p_value = 0.0;
};

// Walsh-Hadamard transform on |0...0>, measured `samples` times.
QrngReport run_qrng(int qubits, long samples, std::uint64_t seed);

struct ConvergenceStudyConfig {
    std::string family = "lipschitz";  // lipschitz | boolean-mean
    std::vector<std::string> methods;  // empty = family default
    std::vector<long> n_grid;          // empty = family default (powers of two)
    long trials = 101;
    std::uint64_t seed = 0;
    long sequence_length = 1024;       // boolean-mean: table length N
    int repetitions = 11;
    int phase_offset = 6;              // lipschitz: t = log2(n) + offset
};

struct MethodFit {
    std::string method;
    RateFit fit;
};

struct StudyResult {
    std::vector<ConvergenceRecord> records;
    std::vector<MethodFit> fits;
};

StudyResult run_convergence(const ConvergenceStudyConfig& cfg);

const std::string& convergence_csv_header();
std::string to_csv(const std::vector<ConvergenceRecord>& records);

} // namespace qmc
