#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "schurcurv/exponent.hpp"
#include "schurcurv/state.hpp"

namespace schurcurv {

/// Curvature of the plane curve A_p(cos^2 t, sin^2 t) at angle theta in
/// (0, pi/2). This is the embedded-curve curvature; the intrinsic scalar
/// curvature of the 1-dimensional simplex is identically zero.
///
/// Valid for p in (1, inf] and p < 0; p = 1 returns the flat limit 0. For p
/// in (0, 1) the magnitude of the same closed form is returned.
double plane_curvature(const Exponent& p, double theta);

/// Chart of the open simplex by its first n-1 coordinates.
class SimplexChart {
public:
    /// Throws DomainError unless all n implied entries are > 0.
    explicit SimplexChart(std::vector<double> coordinates);
    static SimplexChart from_density(const DensityVector& rho);

    /// Dimension n of the ambient vector (chart dimension is n - 1).
    std::size_t n() const { return coordinates_.size() + 1; }
    const std::vector<double>& coordinates() const { return coordinates_; }
    std::vector<double> density() const;
    double min_entry() const;

private:
    std::vector<double> coordinates_;
};

/// Pull-back of the Euclidean metric through rho -> p rho^{1/p}
/// (log rho at p = inf):
///   g_ij = rho_i^{2/p-2} delta_ij + rho_n^{2/p-2}.
Eigen::MatrixXd simplex_metric(const Exponent& p, const SimplexChart& chart);

/// Finite-difference scalar curvature of simplex_metric. Requires every entry
/// to exceed 4*step ("insufficient margin for stencil" otherwise). Returns
/// exactly 0 for n = 2.
double simplex_scal_fd(const Exponent& p, const SimplexChart& chart, double step = 1e-4);

/// <D phi(A), D(J o phi)(B)> for phi = p rho^{1/p}; p > 1 (or inf). A and B
/// must be tangent to the simplex (entries summing to 0).
double dualized_pullback_commutative(const Exponent& p, const DensityVector& rho,
                                     std::span<const double> a, std::span<const double> b);

/// sum_k a_k b_k / rho_k.
double fisher_form(const DensityVector& rho, std::span<const double> a, std::span<const double> b);

} // namespace schurcurv
