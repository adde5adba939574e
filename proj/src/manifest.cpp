#include "qmc/manifest.hpp"

#include "qmc/integrate.hpp"

#include <cmath>

namespace qmc {

double triangle_wave(double u) {
    const double t = u - std::floor(u);
    return std::abs(2.0 * t - 1.0);
}

double triangle_wave_antiderivative(double x) {
    const double whole = std::floor(x);
    const double t = x - whole;
    const double s = (t <= 0.5) ? t - t * t : t * t - t + 0.5;
    return 0.5 * whole + s;
}

namespace {

// Scales used by the Lipschitz family: every grid the studies touch
// (coarse k in 4..32, fine lattices up to 2^10) stays unresolved against one
// of them.
constexpr int kScales[] = {2, 3, 4, 5, 6, 7, 8, 9, 11};
constexpr int kNumScales = static_cast<int>(sizeof(kScales) / sizeof(kScales[0]));

double tri_component_integral(int j, double u) {
    const double pow2j = std::ldexp(1.0, j);
    return (triangle_wave_antiderivative(pow2j - u) - triangle_wave_antiderivative(-u)) / pow2j;
}

} // namespace

LipschitzSample sample_lipschitz_integrand(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x4c69701dULL));
    std::vector<double> phases(kNumScales);
    std::vector<double> weights(kNumScales);
    for (int c = 0; c < kNumScales; ++c) {
        // dyadic phases keep every kink on the interpolation grids, so the
        // resolved scales reproduce exactly and only unresolved scales
        // contribute residual; signed continuous weights vary the mixture
        phases[static_cast<std::size_t>(c)] = uniform01(rng) < 0.5 ? 0.0 : 0.5;
        const double sign = uniform01(rng) < 0.5 ? -1.0 : 1.0;
        weights[static_cast<std::size_t>(c)] = sign * (0.6 + 0.4 * uniform01(rng));
    }
    // Lip(tri(2^j x)) * 2^-j = 2 per component; budget split evenly.
    const double scale = 1.0 / (2.0 * kNumScales);

    LipschitzSample sample;
    for (int c = 0; c < kNumScales; ++c) {
        const int j = kScales[c];
        sample.integral += scale * weights[static_cast<std::size_t>(c)] *
                           std::ldexp(1.0, -j) *
                           tri_component_integral(j, phases[static_cast<std::size_t>(c)]);
    }
    sample.f = [phases, weights, scale](const Eigen::VectorXd& x) {
        double acc = 0.0;
        for (int c = 0; c < kNumScales; ++c) {
            const int j = kScales[c];
            acc += weights[static_cast<std::size_t>(c)] * std::ldexp(1.0, -j) *
                   triangle_wave(std::ldexp(x[0], j) - phases[static_cast<std::size_t>(c)]);
        }
        return scale * acc;
    };
    return sample;
}

BooleanOracle sample_boolean_sequence(long length, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xb001ULL));
    const double frac = 0.25 + 0.5 * uniform01(rng);
    const long ones = std::clamp(static_cast<long>(std::floor(frac * length)), 1L, length - 1);
    std::vector<std::uint8_t> table(static_cast<std::size_t>(length), 0);
    for (long i = 0; i < ones; ++i) table[static_cast<std::size_t>(i)] = 1;
    // Fisher-Yates keeps the draw deterministic for a given seed.
    for (long i = length - 1; i > 0; --i) {
        const auto j = static_cast<long>(uniform_index(rng, static_cast<std::uint64_t>(i + 1)));
        std::swap(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
    }
    return BooleanOracle(std::move(table));
}

const std::vector<ManifestEntry>& integrand_manifest() {
    static const std::vector<ManifestEntry> entries = [] {
        std::vector<ManifestEntry> m;
        m.push_back({"const075",
                     {0, 1.0, 1},
                     [](const Eigen::VectorXd&) { return 0.75; },
                     0.75,
                     "constant 0.75 on [0,1]"});
        m.push_back({"linear",
                     {0, 1.0, 1},
                     [](const Eigen::VectorXd& x) { return x[0]; },
                     0.5,
                     "f(x) = x"});
        m.push_back({"abs-kink",
                     {0, 1.0, 1},
                     [](const Eigen::VectorXd& x) { return std::abs(x[0] - 0.5); },
                     0.25,
                     "f(x) = |x - 1/2|"});
        m.push_back({"abs-kink-2d",
                     {0, 1.0, 2},
                     [](const Eigen::VectorXd& x) {
                         return 0.5 * (std::abs(x[0] - 0.5) + std::abs(x[1] - 0.5));
                     },
                     0.25,
                     "f(x,y) = (|x-1/2| + |y-1/2|)/2"});
        m.push_back({"prod-xy",
                     {0, 1.0, 2},
                     [](const Eigen::VectorXd& x) { return x[0] * x[1]; },
                     0.25,
                     "f(x,y) = x y"});
        m.push_back({"square",
                     {2, 1.0, 1},
                     [](const Eigen::VectorXd& x) { return x[0] * x[0]; },
                     1.0 / 3.0,
                     "f(x) = x^2, integrated with degree-2 cells"});
        m.push_back({"lipschitz-mix",
                     {0, 1.0, 1},
                     sample_lipschitz_integrand(424242).f,
                     sample_lipschitz_integrand(424242).integral,
                     "fixed member of the multi-scale Lipschitz family"});
        return m;
    }();
    return entries;
}

std::string manifest_names() {
    std::string names;
    for (const auto& e : integrand_manifest()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    return names;
}

const ManifestEntry& find_integrand(const std::string& name) {
    for (const auto& e : integrand_manifest())
        if (e.name == name) return e;
    throw ConfigError("unknown integrand '" + name + "'; available: " + manifest_names());
}

} // namespace qmc
