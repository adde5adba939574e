#include "qmc/baselines.hpp"

#include <cmath>
#include <iostream>

namespace qmc {

double det_quadrature(const Integrand& f, const HoelderSpec& spec, long n) {
    return quadrature_main(build_interpolant(f, spec, n));
}

double mc_mean_sequence(const Eigen::VectorXd& values, long n, Rng& rng) {
    if (n < 1) throw std::domain_error("mc_mean_sequence: need n >= 1");
    double acc = 0.0;
    for (long i = 0; i < n; ++i)
        acc += values[static_cast<Eigen::Index>(
            uniform_index(rng, static_cast<std::uint64_t>(values.size())))];
    return acc / static_cast<double>(n);
}

double mc_mean_integrand(const Integrand& f, int dim, long n, Rng& rng) {
    if (n < 1) throw std::domain_error("mc_mean_integrand: need n >= 1");
    Eigen::VectorXd x(dim);
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        for (int a = 0; a < dim; ++a) x[a] = uniform01(rng);
        acc += f(x);
    }
    return acc / static_cast<double>(n);
}

double cv_mc_integrate(const Integrand& f, const HoelderSpec& spec, long n, Rng& rng) {
    const Interpolant interp = build_interpolant(f, spec, n);
    Eigen::VectorXd x(spec.dim);
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        for (int a = 0; a < spec.dim; ++a) x[a] = uniform01(rng);
        acc += f(x) - interp.evaluate(x);
    }
    return quadrature_main(interp) + acc / static_cast<double>(n);
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& n_vs_error) {
    std::vector<double> xs, ys;
    int excluded = 0;
    for (const auto& [n, err] : n_vs_error) {
        if (err <= 0.0) {
            ++excluded;
            continue;
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(err));
    }
    if (excluded > 0)
        std::cerr << "fit_rate: excluded " << excluded << " exact-hit (zero error) points\n";
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw std::domain_error("fit_rate: need at least 3 distinct budgets with nonzero error");

    const auto m = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd a(m, 2);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        a(i, 0) = xs[static_cast<std::size_t>(i)];
        a(i, 1) = 1.0;
        b(i) = ys[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector2d sol = (a.transpose() * a).ldlt().solve(a.transpose() * b);

    RateFit fit;
    fit.slope = sol[0];
    fit.intercept = sol[1];
    fit.points_used = static_cast<int>(m);
    fit.points_excluded = excluded;
    fit.rms_residual = std::sqrt((a * sol - b).squaredNorm() / static_cast<double>(m));
    return fit;
}

RateFit fit_rate(const std::vector<ConvergenceRecord>& records) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(records.size());
    for (const auto& rec : records)
        pts.emplace_back(static_cast<double>(rec.n), rec.median_error);
    return fit_rate(pts);
}

namespace {

// Regularized upper incomplete gamma Q(s, x) by series / continued fraction.
double gamma_q(double s, double x) {
    if (x < 0.0 || s <= 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double lg = std::lgamma(s);
    if (x < s + 1.0) {
        // P(s,x) series; Q = 1 - P
        double term = 1.0 / s;
        double sum = term;
        double ap = s;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + s * std::log(x) - lg);
    }
    // Lentz continued fraction for Q
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + s * std::log(x) - lg) * h;
}

} // namespace

double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw std::domain_error("chi_square_pvalue: need dof >= 1");
    if (statistic <= 0.0) return 1.0;
    return gamma_q(0.5 * dof, 0.5 * statistic);
}

} // namespace qmc
