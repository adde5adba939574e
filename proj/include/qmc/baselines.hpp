// baselines.hpp
// Classical reference methods (optimal-order deterministic quadrature, plain
// and control-variate Monte Carlo), convergence records, and rate fitting.

#pragma once

#include "qmc/circuit.hpp"
#include "qmc/interpolate.hpp"

#include <optional>
#include <string>

namespace qmc {

struct ConvergenceRecord {
    std::string method;  // deterministic | monte-carlo | cv-monte-carlo | quantum
    long n = 0;
    long trials = 0;
    double median_error = 0.0;
    long queries = 0;  // quantum queries, or classical f evaluations
    long gates = 0;
    long qubits = 0;
    long total_cost = 0;
    std::uint64_t seed = 0;
};

// Integral of the optimal-order interpolant: the deterministic baseline.
double det_quadrature(const Integrand& f, const HoelderSpec& spec, long n);

// Mean of n uniform draws from a tabulated sequence.
double mc_mean_sequence(const Eigen::VectorXd& values, long n, Rng& rng);
// Mean of n evaluations at uniform points of [0,1]^d.
double mc_mean_integrand(const Integrand& f, int dim, long n, Rng& rng);

// quadrature_main + Monte Carlo mean of n residual samples.
double cv_mc_integrate(const Integrand& f, const HoelderSpec& spec, long n, Rng& rng);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;     // log-log intercept
    double rms_residual = 0.0;  // around the fitted line
    int points_used = 0;
    int points_excluded = 0;    // zero errors (exact hits)
};

// Least-squares line through (log n, log median_error).
RateFit fit_rate(const std::vector<std::pair<double, double>>& n_vs_error);
RateFit fit_rate(const std::vector<ConvergenceRecord>& records);

// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

} // namespace qmc
