#pragma once

#include <array>

#include <Eigen/Dense>

#include "schurcurv/exponent.hpp"

namespace schurcurv {

/// rho = (I + r . sigma)/2 with |r| < 1.
class BlochPoint {
public:
    /// Throws DomainError when |r| >= 1.
    explicit BlochPoint(std::array<double, 3> r);

    const std::array<double, 3>& r() const { return r_; }
    double radius() const;
    /// Eigenvalues ((1 + |r|)/2, (1 - |r|)/2).
    std::array<double, 2> eigenvalues() const;

private:
    std::array<double, 3> r_;
};

/// First divided difference of t -> p t^{1/p} (log t at p = inf).
class DividedDifferenceKernel {
public:
    explicit DividedDifferenceKernel(const Exponent& p) : p_(p) {}

    double operator()(double a, double b) const;
    /// Derivative t^{1/p - 1} (1/t at p = inf).
    double diagonal(double t) const;

private:
    Exponent p_;
};

/// g_ij = Tr(D phi(A_i) D phi(A_j)) with A_i = sigma_i / 2, the pull-back of
/// the Hilbert-Schmidt metric through phi = A_p. Requires |r| <= 0.99.
Eigen::Matrix3d pullback_metric_2x2(const Exponent& p, const BlochPoint& point);

/// Finite-difference scalar curvature of pullback_metric_2x2 over the Bloch
/// ball chart. Requires |r| <= 0.95.
double matrix_scal_fd(const Exponent& p, const BlochPoint& point, double step = 1e-3);

} // namespace schurcurv
