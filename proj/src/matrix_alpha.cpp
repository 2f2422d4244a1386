#include "schurcurv/matrix_alpha.hpp"

#include <cmath>
#include <utility>
#include <complex>

#include "schurcurv/error.hpp"
#include "schurcurv/riemann_fd.hpp"

namespace schurcurv {

BlochPoint::BlochPoint(std::array<double, 3> r) : r_(r) {
    if (!(radius() < 1.0))
        throw DomainError("Bloch vector must satisfy |r| < 1");
}

double BlochPoint::radius() const {
    return std::hypot(r_[0], r_[1], r_[2]);
}

std::array<double, 2> BlochPoint::eigenvalues() const {
    const double s = radius();
    return {0.5 * (1.0 + s), 0.5 * (1.0 - s)};
}

double DividedDifferenceKernel::diagonal(double t) const {
    if (p_.is_infinite())
        return 1.0 / t;
    return std::pow(t, p_.reciprocal() - 1.0);
}

double DividedDifferenceKernel::operator()(double a, double b) const {
    if (a < b)
        std::swap(a, b);
    const double d = (a - b) / b;
    if (std::abs(d) < 1e-8)
        return diagonal(0.5 * (a + b));
    const double log_ratio = std::log1p(d);
    if (p_.is_infinite())
        return log_ratio / (a - b);
    const double q = p_.reciprocal();
    return p_.value() * std::pow(b, q) * std::expm1(q * log_ratio) / (a - b);
}

namespace {

using Mat2 = Eigen::Matrix2cd;
using Cplx = std::complex<double>;

const std::array<Mat2, 3>& pauli() {
    static const std::array<Mat2, 3> sigma = [] {
        std::array<Mat2, 3> s;
        s[0] << 0, 1, 1, 0;
        s[1] << 0, Cplx(0, -1), Cplx(0, 1), 0;
        s[2] << 1, 0, 0, -1;
        return s;
    }();
    return sigma;
}

} // namespace

Eigen::Matrix3d pullback_metric_2x2(const Exponent& p, const BlochPoint& point) {
    const double s = point.radius();
    if (s > 0.99)
        throw DomainError("too close to state-space boundary");
    const DividedDifferenceKernel kernel(p);
    const auto& sigma = pauli();

    if (s == 0.0) {
        const double k = kernel.diagonal(0.5);
        return Eigen::Matrix3d::Identity() * (0.5 * k * k);
    }

    // Spectral projectors of rho and the kernel on eigenvalue pairs.
    const auto lambda = point.eigenvalues();
    Mat2 axis = Mat2::Zero();
    for (int i = 0; i < 3; ++i)
        axis += (point.r()[static_cast<std::size_t>(i)] / s) * sigma[static_cast<std::size_t>(i)];
    const std::array<Mat2, 2> proj = {0.5 * (Mat2::Identity() + axis), 0.5 * (Mat2::Identity() - axis)};
    double k2[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double k = kernel(lambda[static_cast<std::size_t>(a)], lambda[static_cast<std::size_t>(b)]);
            k2[a][b] = k * k;
        }

    // Tr(D phi(A_i) D phi(A_j)) = sum_ab K_ab^2 Tr(P_a A_i P_b A_j).
    Eigen::Matrix3d g;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const Mat2 prod = proj[static_cast<std::size_t>(a)] * (0.5 * sigma[static_cast<std::size_t>(i)]) *
                                      proj[static_cast<std::size_t>(b)] * (0.5 * sigma[static_cast<std::size_t>(j)]);
                    sum += k2[a][b] * prod.trace().real();
                }
            g(i, j) = sum;
            g(j, i) = sum;
        }
    return g;
}

double matrix_scal_fd(const Exponent& p, const BlochPoint& point, double step) {
    if (!(step > 0.0))
        throw DomainError("finite-difference step must be positive");
    if (point.radius() > 0.95)
        throw DomainError("too close to state-space boundary");
    const Eigen::Vector3d x(point.r()[0], point.r()[1], point.r()[2]);
    return scalar_curvature_fd(
        [&p](const Eigen::VectorXd& q) -> Eigen::MatrixXd {
            return pullback_metric_2x2(p, BlochPoint({q[0], q[1], q[2]}));
        },
        x, step);
}

} // namespace schurcurv
