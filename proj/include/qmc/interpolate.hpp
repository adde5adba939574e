// interpolate.hpp
// Tensor-product piecewise Lagrange interpolation on uniform grids of
// [0,1]^d, with exact quadrature weights for the interpolant.

#pragma once

#include "qmc/common.hpp"

#include <functional>

namespace qmc {

struct HoelderSpec {
    int smoothness = 0;    // r >= 0
    double hoelder = 1.0;  // rho in (0, 1]
    int dim = 1;           // d >= 1
};

void validate(const HoelderSpec& spec);

using Integrand = std::function<double(const Eigen::VectorXd&)>;

struct Interpolant {
    int dim = 1;
    int cells_per_axis = 1;       // k
    int degree = 1;               // per-axis polynomial degree q
    Eigen::MatrixXd nodes;        // node_count x dim
    Eigen::VectorXd node_values;  // f at the nodes
    Eigen::VectorXd weights;      // exact integrals of the nodal basis

    long node_count() const { return nodes.rows(); }
    double evaluate(const Eigen::VectorXd& x) const;
};

// Uniform grid of k = floor(n^(1/d)) cells per axis, degree r per axis
// (multilinear when r = 0). Requires n >= (r+1)^d.
Interpolant build_interpolant(const Integrand& f, const HoelderSpec& spec, long n);

// Exact integral of the interpolant: sum_i c_i f(tau_i).
double quadrature_main(const Interpolant& interp);

// Class-derived sup bound on |f - P_n f| for members of the Hoelder class,
// conservatively doubled; the declared residual range.
double residual_range_bound(const HoelderSpec& spec, int cells_per_axis);

} // namespace qmc
