#pragma once

#include <functional>

#include <Eigen/Dense>

namespace schurcurv {

/// Metric tensor field in a chart.
using MetricField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Scalar curvature at `point` from metric values only.
///
/// First and second partial derivatives of g come from central differences
/// at `step`, `step/2` and `step/4`, Richardson-extrapolated to sixth order; the rest is the textbook
/// Christoffel -> Riemann -> Ricci -> scalar contraction. Caller guarantees
/// the metric is defined on the cube of half-width `step` around `point`.
double scalar_curvature_fd(const MetricField& metric, const Eigen::VectorXd& point, double step);

} // namespace schurcurv
