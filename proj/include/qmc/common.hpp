// common.hpp
// Shared aliases, seeded randomness, and small numeric helpers.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qmc {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

// Configuration-surface errors (bad names, budgets, malformed inputs)
// distinct from domain errors; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

// Largest register the statevector backend will allocate (2^m amplitudes).
inline constexpr int kMaxQubits = 26;

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int floor_log2(std::uint64_t n) {
    if (n == 0) throw std::domain_error("floor_log2: n must be positive");
    int p = 0;
    while (n >>= 1) ++p;
    return p;
}

// Largest k with k^d <= n (integer d-th root, no floating-point drift).
inline long integer_root(long n, int d) {
    if (n < 1 || d < 1) throw std::domain_error("integer_root: need n >= 1, d >= 1");
    long k = static_cast<long>(std::floor(std::pow(static_cast<double>(n), 1.0 / d)));
    while (k > 1) {
        long p = 1;
        bool over = false;
        for (int a = 0; a < d; ++a) {
            if (p > n / k) { over = true; break; }
            p *= k;
        }
        if (!over && p <= n) break;
        --k;
    }
    while (true) {
        long k1 = k + 1, p = 1;
        bool over = false;
        for (int a = 0; a < d; ++a) {
            if (p > n / k1) { over = true; break; }
            p *= k1;
        }
        if (over || p > n) break;
        k = k1;
    }
    return k;
}

// splitmix64 step; used to derive independent per-trial seeds from (seed, stream).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0,1) from the top 53 bits; identical across platforms,
// unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::domain_error("uniform_index: n must be positive");
    return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

inline double median_inplace(std::vector<double>& xs) {
    if (xs.empty()) throw std::domain_error("median: empty sample");
    const std::size_t mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
    if (xs.size() % 2 == 1) return xs[mid];
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid) - 1,
                     xs.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (xs[mid - 1] + xs[mid]);
}

} // namespace qmc
