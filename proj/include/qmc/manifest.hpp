// manifest.hpp
// Named test integrands with class parameters and (where known) analytic
// integrals, plus the seeded families the convergence studies draw from.

#pragma once

#include "qmc/interpolate.hpp"
#include "qmc/oracle.hpp"

#include <optional>
#include <string>

namespace qmc {

struct ManifestEntry {
    std::string name;
    HoelderSpec spec;
    Integrand f;
    std::optional<double> analytic_integral;
    std::string description;
};

const std::vector<ManifestEntry>& integrand_manifest();
// Throws ConfigError listing the manifest when the name is unknown.
const ManifestEntry& find_integrand(const std::string& name);
std::string manifest_names();

// 1-periodic triangle wave |2 frac(u) - 1| and its exact antiderivative.
double triangle_wave(double u);
double triangle_wave_antiderivative(double x);

// Random member of the d=1 Lipschitz class (r=0, rho=1): a multi-scale
// triangle-wave mixture with unit Lipschitz budget, random signs and phases,
// and a closed-form integral.
struct LipschitzSample {
    Integrand f;
    double integral = 0.0;
};
LipschitzSample sample_lipschitz_integrand(std::uint64_t seed);

// Boolean sequence of the given length with mean drawn from [1/4, 3/4].
BooleanOracle sample_boolean_sequence(long length, std::uint64_t seed);

} // namespace qmc
