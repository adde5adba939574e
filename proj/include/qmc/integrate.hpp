// integrate.hpp
// Control-variate quantum integration: exact quadrature of the interpolant
// plus an amplitude-estimated mean of the residual over a fine midpoint
// lattice.

#pragma once

#include "qmc/estimate.hpp"
#include "qmc/interpolate.hpp"

namespace qmc {

struct IntegrationTask {
    Integrand f;
    HoelderSpec spec;
    long n = 16;            // coarse budget
    long fine_n = 0;        // N; 0 = choose_fine_grid
    int residual_bits = 0;  // m2; 0 = choose_fine_grid
    EstimateConfig config;
};

struct FineGridChoice {
    long fine_n = 0;
    int residual_bits = 0;
};

// N = smallest power of two >= n^(1 + d/(r+rho)), so the fine-grid
// discretization error sits below the target rate; m2 sized to push the
// encoding error below it as well.
FineGridChoice choose_fine_grid(long n, const HoelderSpec& spec);

// Residual sequence g(i) = f(t_i) - P_n f(t_i) over the rank-ordered
// midpoint lattice with fine_n points, declared range from
// residual_range_bound; if the data exceeds the declared range the range is
// widened (doubled max) and the event reported through *range_widened.
SequenceOracle residual_mean_target(const Integrand& f, const Interpolant& interp,
                                    const HoelderSpec& spec, long fine_n, int residual_bits,
                                    bool* range_widened = nullptr);

struct IntegrationResult {
    double value = 0.0;        // main part + estimated residual mean
    double main_part = 0.0;    // exact integral of the interpolant
    EstimateResult residual;   // the quantum mean estimate (already in value units)
    long classical_evals = 0;  // interpolation nodes + fine-grid tabulation
    bool range_widened = false;
};

IntegrationResult integrate_quantum(const IntegrationTask& task);

} // namespace qmc
