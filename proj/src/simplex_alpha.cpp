#include "schurcurv/simplex_alpha.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "schurcurv/error.hpp"
#include "schurcurv/riemann_fd.hpp"

namespace schurcurv {

double plane_curvature(const Exponent& p, double theta) {
    if (!(theta > 0.0 && theta < 0.5 * std::numbers::pi))
        throw DomainError("theta must lie in (0, pi/2)");
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (p.is_infinite()) {
        const double sc = s * c;
        return sc * sc / std::pow(c * c * c * c + s * s * s * s, 1.5);
    }
    const double v = p.value();
    if (v == 1.0)
        return 0.0;
    const double inv = 1.0 / v;
    const double amplitude = ((v - 1.0) / v) * std::pow(0.5, 2.0 * (1.0 - 2.0 * inv));
    const double g = std::pow(std::sin(2.0 * theta), 2.0 - 4.0 * inv);
    const double conj_exp = 4.0 * (1.0 - inv);  // 4 / p~
    const double f = std::pow(c, conj_exp) + std::pow(s, conj_exp);
    return std::abs(amplitude * g / std::pow(f, 1.5));
}

SimplexChart::SimplexChart(std::vector<double> coordinates) : coordinates_(std::move(coordinates)) {
    if (coordinates_.empty())
        throw DomainError("simplex chart needs n >= 2");
    if (!(min_entry() > 0.0))
        throw DomainError("simplex chart point is not strictly inside the simplex");
}

SimplexChart SimplexChart::from_density(const DensityVector& rho) {
    const auto& v = rho.vector();
    return SimplexChart(std::vector<double>(v.begin(), v.end() - 1));
}

std::vector<double> SimplexChart::density() const {
    std::vector<double> rho = coordinates_;
    rho.push_back(1.0 - std::accumulate(coordinates_.begin(), coordinates_.end(), 0.0));
    return rho;
}

double SimplexChart::min_entry() const {
    const auto rho = density();
    return *std::min_element(rho.begin(), rho.end());
}

namespace {

// 2/p - 2, the exponent of the diagonal metric weights.
double weight_exponent(const Exponent& p) {
    return 2.0 * p.reciprocal() - 2.0;
}

Eigen::MatrixXd metric_at(double e, const Eigen::VectorXd& coords) {
    const Eigen::Index m = coords.size();
    const double last = 1.0 - coords.sum();
    if (!(last > 0.0) || (coords.array() <= 0.0).any())
        throw DomainError("simplex chart point left the simplex");
    Eigen::MatrixXd g = Eigen::MatrixXd::Constant(m, m, std::pow(last, e));
    for (Eigen::Index i = 0; i < m; ++i)
        g(i, i) += std::pow(coords[i], e);
    return g;
}

} // namespace

Eigen::MatrixXd simplex_metric(const Exponent& p, const SimplexChart& chart) {
    const auto& c = chart.coordinates();
    return metric_at(weight_exponent(p),
                     Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size())));
}

double simplex_scal_fd(const Exponent& p, const SimplexChart& chart, double step) {
    if (!(step > 0.0))
        throw DomainError("finite-difference step must be positive");
    if (chart.n() == 2)
        return 0.0;
    if (!(chart.min_entry() > 4.0 * step))
        throw DomainError("insufficient margin for stencil");
    const double e = weight_exponent(p);
    const auto& c = chart.coordinates();
    const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
    return scalar_curvature_fd([e](const Eigen::VectorXd& q) { return metric_at(e, q); }, x, step);
}

namespace {

void require_tangent(std::span<const double> v, std::size_t n) {
    if (v.size() != n)
        throw DomainError("tangent vector has the wrong dimension");
    double sum = 0.0;
    double mass = 0.0;
    for (double x : v) {
        sum += x;
        mass += std::abs(x);
    }
    if (std::abs(sum) > 1e-12 * (1.0 + mass))
        throw DomainError("not a tangent vector: entries must sum to 0");
}

} // namespace

double dualized_pullback_commutative(const Exponent& p, const DensityVector& rho, std::span<const double> a,
                                     std::span<const double> b) {
    if (!p.is_infinite() && !(p.value() > 1.0))
        throw DomainError("dualized pull-back requires p > 1");
    require_tangent(a, rho.size());
    require_tangent(b, rho.size());
    const double e = p.reciprocal() - 1.0;       // 1/p - 1
    const double e_conj = -p.reciprocal();       // 1/p~ - 1
    double sum = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
        sum += (std::pow(rho[k], e) * a[k]) * (std::pow(rho[k], e_conj) * b[k]);
    return sum;
}

double fisher_form(const DensityVector& rho, std::span<const double> a, std::span<const double> b) {
    require_tangent(a, rho.size());
    require_tangent(b, rho.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
        sum += a[k] * b[k] / rho[k];
    return sum;
}

} // namespace schurcurv
