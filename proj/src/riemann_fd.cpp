#include "schurcurv/riemann_fd.hpp"

#include <cmath>
#include <vector>

#include "schurcurv/error.hpp"

namespace schurcurv {

namespace {

// Rank-3 and rank-4 tensors as flat arrays over a chart of dimension m.
struct Tensor3 {
    explicit Tensor3(Eigen::Index m) : m(m), data(static_cast<std::size_t>(m * m * m), 0.0) {}
    double& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) {
        return data[static_cast<std::size_t>((a * m + b) * m + c)];
    }
    double operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
        return data[static_cast<std::size_t>((a * m + b) * m + c)];
    }
    Eigen::Index m;
    std::vector<double> data;
};

struct Tensor4 {
    explicit Tensor4(Eigen::Index m) : m(m), data(static_cast<std::size_t>(m * m * m * m), 0.0) {}
    double& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c, Eigen::Index d) {
        return data[static_cast<std::size_t>(((a * m + b) * m + c) * m + d)];
    }
    double operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c, Eigen::Index d) const {
        return data[static_cast<std::size_t>(((a * m + b) * m + c) * m + d)];
    }
    Eigen::Index m;
    std::vector<double> data;
};

class Stencil {
public:
    Stencil(const MetricField& metric, const Eigen::VectorXd& x) : metric_(metric), x_(x) {}

    Eigen::MatrixXd at(Eigen::Index i, double di, Eigen::Index j = -1, double dj = 0.0) const {
        Eigen::VectorXd p = x_;
        p[i] += di;
        if (j >= 0)
            p[j] += dj;
        return metric_(p);
    }

    Eigen::MatrixXd first(Eigen::Index k, double h) const {
        return (at(k, h) - at(k, -h)) / (2.0 * h);
    }

    Eigen::MatrixXd second(Eigen::Index k, Eigen::Index l, double h, const Eigen::MatrixXd& g0) const {
        if (k == l)
            return (at(k, h) - 2.0 * g0 + at(k, -h)) / (h * h);
        return (at(k, h, l, h) - at(k, h, l, -h) - at(k, -h, l, h) + at(k, -h, l, -h)) / (4.0 * h * h);
    }

private:
    const MetricField& metric_;
    const Eigen::VectorXd& x_;
};

/// Richardson table over h, h/2, h/4 for an even error expansion in h.
template <class D>
Eigen::MatrixXd extrapolate(D difference, double h) {
    const Eigen::MatrixXd d0 = difference(h);
    const Eigen::MatrixXd d1 = difference(0.5 * h);
    const Eigen::MatrixXd d2 = difference(0.25 * h);
    const Eigen::MatrixXd r0 = (4.0 * d1 - d0) / 3.0;
    const Eigen::MatrixXd r1 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

} // namespace

double scalar_curvature_fd(const MetricField& metric, const Eigen::VectorXd& point, double step) {
    if (!(step > 0.0))
        throw DomainError("finite-difference step must be positive");
    const Eigen::Index m = point.size();
    const Eigen::MatrixXd g = metric(point);
    if (g.rows() != m || g.cols() != m)
        throw DomainError("metric dimension does not match chart dimension");
    if (m < 2)
        return 0.0;

    const Stencil stencil(metric, point);
    std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(m));
    std::vector<Eigen::MatrixXd> ddg(static_cast<std::size_t>(m * m));
    for (Eigen::Index k = 0; k < m; ++k) {
        dg[static_cast<std::size_t>(k)] = extrapolate([&](double h) { return stencil.first(k, h); }, step);
        for (Eigen::Index l = k; l < m; ++l) {
            const Eigen::MatrixXd d = extrapolate([&](double h) { return stencil.second(k, l, h, g); }, step);
            ddg[static_cast<std::size_t>(k * m + l)] = d;
            ddg[static_cast<std::size_t>(l * m + k)] = d;
        }
    }
    auto d1 = [&](Eigen::Index e, Eigen::Index a, Eigen::Index b) { return dg[static_cast<std::size_t>(e)](a, b); };
    auto d2 = [&](Eigen::Index e, Eigen::Index f, Eigen::Index a, Eigen::Index b) {
        return ddg[static_cast<std::size_t>(e * m + f)](a, b);
    };

    const Eigen::MatrixXd gi = g.inverse();

    // Christoffel symbols of the first kind and their derivatives:
    //   [bc, d] = (d_b g_dc + d_c g_db - d_d g_bc) / 2.
    Tensor3 gamma(m);   // Gamma^a_bc
    Tensor4 dgamma(m);  // d_e Gamma^a_bc, stored (e, a, b, c)
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b)
            for (Eigen::Index c = 0; c < m; ++c) {
                double sum = 0.0;
                for (Eigen::Index d = 0; d < m; ++d)
                    sum += gi(a, d) * 0.5 * (d1(b, d, c) + d1(c, d, b) - d1(d, b, c));
                gamma(a, b, c) = sum;
            }
    for (Eigen::Index e = 0; e < m; ++e) {
        const Eigen::MatrixXd dgi = -gi * dg[static_cast<std::size_t>(e)] * gi;
        for (Eigen::Index a = 0; a < m; ++a)
            for (Eigen::Index b = 0; b < m; ++b)
                for (Eigen::Index c = 0; c < m; ++c) {
                    double sum = 0.0;
                    for (Eigen::Index d = 0; d < m; ++d) {
                        const double first_kind = 0.5 * (d1(b, d, c) + d1(c, d, b) - d1(d, b, c));
                        const double first_kind_d = 0.5 * (d2(e, b, d, c) + d2(e, c, d, b) - d2(e, d, b, c));
                        sum += dgi(a, d) * first_kind + gi(a, d) * first_kind_d;
                    }
                    dgamma(e, a, b, c) = sum;
                }
    }

    // Ric_kj = R^i_kij with
    //   R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik.
    double scal = 0.0;
    for (Eigen::Index k = 0; k < m; ++k)
        for (Eigen::Index j = 0; j < m; ++j) {
            double ric = 0.0;
            for (Eigen::Index i = 0; i < m; ++i) {
                ric += dgamma(i, i, j, k) - dgamma(j, i, i, k);
                for (Eigen::Index q = 0; q < m; ++q)
                    ric += gamma(i, i, q) * gamma(q, j, k) - gamma(i, j, q) * gamma(q, i, k);
            }
            scal += gi(k, j) * ric;
        }
    if (!std::isfinite(scal))
        throw NumericalError("non-finite finite-difference curvature");
    return scal;
}

} // namespace schurcurv
