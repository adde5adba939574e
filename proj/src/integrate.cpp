#include "qmc/integrate.hpp"

#include <cmath>
#include <iostream>

namespace qmc {

FineGridChoice choose_fine_grid(long n, const HoelderSpec& spec) {
    validate(spec);
    if (n < 1) throw std::domain_error("choose_fine_grid: need n >= 1");
    const double order = (spec.smoothness + spec.hoelder) / spec.dim;
    const double target = std::pow(static_cast<double>(n), 1.0 + 1.0 / order);
    int e = 0;
    while (std::ldexp(1.0, e) < target) ++e;
    if (e > kMaxQubits)
        throw ConfigError("choose_fine_grid: fine grid of 2^" + std::to_string(e) +
                          " points exceeds the qubit budget; reduce n");
    const double lg_n = std::log2(static_cast<double>(n));
    FineGridChoice choice;
    choice.fine_n = long{1} << e;
    choice.residual_bits =
        static_cast<int>(std::ceil(lg_n)) + static_cast<int>(std::ceil(order * lg_n)) + 2;
    if (choice.residual_bits < 2) choice.residual_bits = 2;
    if (choice.residual_bits > 52) choice.residual_bits = 52;
    return choice;
}

namespace {

// Axis-major midpoint lattice with per-axis counts 2^{e_a}, sum e_a = log2(N).
Eigen::VectorXd lattice_point(long index, const std::vector<long>& per_axis) {
    const int d = static_cast<int>(per_axis.size());
    Eigen::VectorXd x(d);
    long rem = index;
    for (int a = d - 1; a >= 0; --a) {
        const long na = per_axis[static_cast<std::size_t>(a)];
        const long ia = rem % na;
        rem /= na;
        x[a] = (static_cast<double>(ia) + 0.5) / static_cast<double>(na);
    }
    return x;
}

} // namespace

SequenceOracle residual_mean_target(const Integrand& f, const Interpolant& interp,
                                    const HoelderSpec& spec, long fine_n, int residual_bits,
                                    bool* range_widened) {
    if (!is_power_of_two(static_cast<std::uint64_t>(fine_n)))
        throw std::domain_error("residual_mean_target: N must be a power of two");
    const int d = interp.dim;
    const int e = floor_log2(static_cast<std::uint64_t>(fine_n));
    std::vector<long> per_axis(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const int ea = e / d + (a < e % d ? 1 : 0);
        per_axis[static_cast<std::size_t>(a)] = long{1} << ea;
    }

    Eigen::VectorXd g(fine_n);
    for (long i = 0; i < fine_n; ++i) {
        const Eigen::VectorXd x = lattice_point(i, per_axis);
        g[i] = f(x) - interp.evaluate(x);
    }

    double range = residual_range_bound(spec, interp.cells_per_axis);
    const double observed = g.cwiseAbs().maxCoeff();
    bool widened = false;
    if (observed > range) {
        range = 2.0 * observed;
        widened = true;
        std::cerr << "residual_mean_target: declared range exceeded (|g| up to " << observed
                  << "); widened to " << range << "\n";
    }
    if (range_widened) *range_widened = widened;
    if (range <= 0.0) range = 1e-12;  // all-zero residual still needs a valid interval
    return SequenceOracle(std::move(g), -range, range, residual_bits);
}

IntegrationResult integrate_quantum(const IntegrationTask& task) {
    validate(task.spec);
    const Interpolant interp = build_interpolant(task.f, task.spec, task.n);

    FineGridChoice choice;
    if (task.fine_n > 0 && task.residual_bits > 0) {
        choice.fine_n = task.fine_n;
        choice.residual_bits = task.residual_bits;
    } else {
        choice = choose_fine_grid(task.n, task.spec);
        if (task.fine_n > 0) choice.fine_n = task.fine_n;
        if (task.residual_bits > 0) choice.residual_bits = task.residual_bits;
    }
    if (choice.fine_n < task.n)
        throw std::domain_error("integrate_quantum: fine grid smaller than coarse budget");

    IntegrationResult out;
    out.main_part = quadrature_main(interp);
    const SequenceOracle residual = residual_mean_target(
        task.f, interp, task.spec, choice.fine_n, choice.residual_bits, &out.range_widened);
    out.residual = mean_real(residual, task.config);
    out.value = out.main_part + out.residual.value;
    out.classical_evals = interp.node_count() + choice.fine_n;
    out.residual.classical_evals = out.classical_evals;
    return out;
}

} // namespace qmc
