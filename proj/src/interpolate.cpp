#include "qmc/interpolate.hpp"

#include <cmath>

namespace qmc {

void validate(const HoelderSpec& spec) {
    if (spec.smoothness < 0) throw std::domain_error("HoelderSpec: need r >= 0");
    if (!(spec.hoelder > 0.0 && spec.hoelder <= 1.0))
        throw std::domain_error("HoelderSpec: need rho in (0,1]");
    if (spec.dim < 1) throw std::domain_error("HoelderSpec: need d >= 1");
}

namespace {

// Closed Newton-Cotes weights on [0,1] for degree q (sum to 1).
Eigen::VectorXd newton_cotes_weights(int q) {
    const int p = q + 1;
    Eigen::MatrixXd v(p, p);
    Eigen::VectorXd rhs(p);
    for (int row = 0; row < p; ++row) {
        for (int col = 0; col < p; ++col)
            v(row, col) = std::pow(static_cast<double>(col) / q, row);
        rhs(row) = 1.0 / (row + 1);
    }
    return v.fullPivLu().solve(rhs);
}

// Lagrange basis values at local coordinate xi for equispaced nodes l/q.
void lagrange_basis(int q, double xi, Eigen::VectorXd& out) {
    out.resize(q + 1);
    for (int l = 0; l <= q; ++l) {
        double prod = 1.0;
        const double xl = static_cast<double>(l) / q;
        for (int j = 0; j <= q; ++j) {
            if (j == l) continue;
            const double xj = static_cast<double>(j) / q;
            prod *= (xi - xj) / (xl - xj);
        }
        out[l] = prod;
    }
}

double lebesgue_constant(int q) {
    if (q <= 1) return 1.0;
    double best = 0.0;
    Eigen::VectorXd basis;
    for (int s = 0; s <= 200; ++s) {
        lagrange_basis(q, static_cast<double>(s) / 200.0, basis);
        best = std::max(best, basis.cwiseAbs().sum());
    }
    return best;
}

long ipow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

Interpolant build_interpolant(const Integrand& f, const HoelderSpec& spec, long n) {
    validate(spec);
    const int d = spec.dim;
    const int r = spec.smoothness;
    if (n < ipow(r + 1, d))
        throw std::domain_error("build_interpolant: budget n too small for degree r");

    Interpolant interp;
    interp.dim = d;
    interp.degree = std::max(r, 1);  // multilinear when r = 0
    interp.cells_per_axis = static_cast<int>(integer_root(n, d));

    const int q = interp.degree;
    const int k = interp.cells_per_axis;
    const long per_axis = static_cast<long>(k) * q + 1;
    const long count = ipow(per_axis, d);

    interp.nodes.resize(count, d);
    interp.node_values.resize(count);
    Eigen::VectorXd x(d);
    for (long i = 0; i < count; ++i) {
        long rem = i;
        for (int a = d - 1; a >= 0; --a) {
            const long t = rem % per_axis;
            rem /= per_axis;
            x[a] = static_cast<double>(t) / static_cast<double>(k * q);
        }
        interp.nodes.row(i) = x.transpose();
        interp.node_values[i] = f(x);
    }

    // Assemble weights cell by cell; shared nodes accumulate both sides.
    interp.weights = Eigen::VectorXd::Zero(count);
    const Eigen::VectorXd w_loc = newton_cotes_weights(q);
    const double h = 1.0 / k;
    const long cells = ipow(k, d);
    const long locals = ipow(q + 1, d);
    for (long cell = 0; cell < cells; ++cell) {
        std::vector<long> c(static_cast<std::size_t>(d));
        long rem = cell;
        for (int a = d - 1; a >= 0; --a) {
            c[static_cast<std::size_t>(a)] = rem % k;
            rem /= k;
        }
        for (long loc = 0; loc < locals; ++loc) {
            long lrem = loc;
            long node = 0;
            double w = 1.0;
            for (int a = d - 1; a >= 0; --a) {
                const long l = lrem % (q + 1);
                lrem /= (q + 1);
                w *= h * w_loc[l];
                // reconstruct axis-major node index incrementally
                const long t = c[static_cast<std::size_t>(a)] * q + l;
                node += t * ipow(per_axis, d - 1 - a);
            }
            interp.weights[node] += w;
        }
    }
    return interp;
}

double Interpolant::evaluate(const Eigen::VectorXd& x) const {
    const int q = degree;
    const int k = cells_per_axis;
    const long per_axis = static_cast<long>(k) * q + 1;

    std::vector<Eigen::VectorXd> basis(static_cast<std::size_t>(dim));
    std::vector<long> cell(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        double xa = std::clamp(x[a], 0.0, 1.0);
        long c = std::min(static_cast<long>(xa * k), static_cast<long>(k - 1));
        const double xi = xa * k - static_cast<double>(c);
        cell[static_cast<std::size_t>(a)] = c;
        lagrange_basis(q, xi, basis[static_cast<std::size_t>(a)]);
    }

    const long locals = ipow(q + 1, dim);
    double acc = 0.0;
    for (long loc = 0; loc < locals; ++loc) {
        long lrem = loc;
        long node = 0;
        double b = 1.0;
        for (int a = dim - 1; a >= 0; --a) {
            const long l = lrem % (q + 1);
            lrem /= (q + 1);
            b *= basis[static_cast<std::size_t>(a)][l];
            const long t = cell[static_cast<std::size_t>(a)] * q + l;
            node += t * ipow(per_axis, dim - 1 - a);
        }
        acc += b * node_values[node];
    }
    return acc;
}

double quadrature_main(const Interpolant& interp) {
    return interp.weights.dot(interp.node_values);
}

double residual_range_bound(const HoelderSpec& spec, int cells_per_axis) {
    validate(spec);
    const int r = spec.smoothness;
    const double h = 1.0 / cells_per_axis;
    double c;
    if (r == 0) {
        // multilinear: per-axis error of a rho-Hoelder function is (h/2)^rho
        c = spec.dim * std::pow(0.5, spec.hoelder);
    } else {
        double fact = 1.0;
        for (int i = 2; i <= r; ++i) fact *= i;
        c = spec.dim * (1.0 + lebesgue_constant(r)) * std::pow(0.5, spec.hoelder) / fact;
    }
    // class bound c * h^(r+rho), doubled for safety
    return 2.0 * c * std::pow(h, r + spec.hoelder);
}

} // namespace qmc
