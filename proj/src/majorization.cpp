#include "schurcurv/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "schurcurv/error.hpp"
#include "schurcurv/rng.hpp"

namespace schurcurv {

namespace {

bool prefix_dominated(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size())
        throw DomainError("incomparable dimensions");
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy + kSumTolerance)
            return false;
    }
    return true;
}

} // namespace

DoublyStochasticMap::DoublyStochasticMap(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
        throw DomainError("doubly stochastic map must be square");
    if ((matrix_.array() < 0.0).any())
        throw DomainError("doubly stochastic map has a negative entry");
    const Eigen::VectorXd rows = matrix_.rowwise().sum();
    const Eigen::VectorXd cols = matrix_.colwise().sum();
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i)
        if (std::abs(rows[i] - 1.0) > kSumTolerance || std::abs(cols[i] - 1.0) > kSumTolerance)
            throw DomainError("doubly stochastic map needs unit row and column sums");
}

DoublyStochasticMap DoublyStochasticMap::identity(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    return DoublyStochasticMap(Eigen::MatrixXd::Identity(m, m));
}

std::vector<double> DoublyStochasticMap::apply(std::span<const double> v) const {
    if (v.size() != size())
        throw DomainError("incomparable dimensions");
    const Eigen::Map<const Eigen::VectorXd> in(v.data(), static_cast<Eigen::Index>(v.size()));
    const Eigen::VectorXd out = matrix_ * in;
    return {out.data(), out.data() + out.size()};
}

DensityVector DoublyStochasticMap::apply(const DensityVector& v) const {
    return DensityVector(apply(v.entries()));
}

bool majorizes(const DensityVector& x, const DensityVector& y) {
    return prefix_dominated(x.vector(), y.vector());
}

bool majorizes(const Spectrum& x, const Spectrum& y) {
    return prefix_dominated(x.vector(), y.vector());
}

bool is_permutation_of(const DensityVector& x, const DensityVector& y, double tol) {
    if (x.size() != y.size())
        return false;
    const auto sx = x.sorted_decreasing();
    const auto sy = y.sorted_decreasing();
    for (std::size_t i = 0; i < sx.size(); ++i)
        if (std::abs(sx[i] - sy[i]) > tol)
            return false;
    return true;
}

DoublyStochasticMap sample_doubly_stochastic(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 2 || k < 1)
        throw DomainError("sample_doubly_stochastic requires n >= 2 and k >= 1");
    Rng rng(seed);
    const std::vector<double> weights = rng.simplex(k);
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t s = 0; s < k; ++s) {
        const auto perm = rng.permutation(n);
        for (std::size_t i = 0; i < n; ++i)
            t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])) += weights[s];
    }
    // Dirichlet weights sum to 1 only up to rounding; renormalize so the
    // stochasticity checks hold with margin.
    for (int sweep = 0; sweep < 2; ++sweep) {
        t = t.array().colwise() / t.rowwise().sum().array();
        t = t.array().rowwise() / t.colwise().sum().array();
    }
    return DoublyStochasticMap(std::move(t));
}

DoublyStochasticMap sample_doubly_stochastic(std::size_t n, std::uint64_t seed) {
    return sample_doubly_stochastic(n, n * n, seed);
}

DensityVector sample_clamped_density(std::size_t n, std::uint64_t seed, double margin) {
    if (n < 2)
        throw DomainError("sample_clamped_density requires n >= 2");
    if (!(margin >= 0.0) || margin * static_cast<double>(n) >= 1.0)
        throw DomainError("clamping margin too large for dimension");
    Rng rng(seed);
    auto w = rng.simplex(n);
    const double shrink = 1.0 - margin * static_cast<double>(n);
    double total = 0.0;
    for (auto& x : w) {
        x = margin + shrink * x;
        total += x;
    }
    for (auto& x : w)
        x /= total;
    return DensityVector(std::move(w));
}

MajorizationPair sample_comparable_pair(std::size_t n, std::uint64_t seed) {
    DensityVector y = sample_clamped_density(n, derive_seed(seed, 0));
    DoublyStochasticMap t = sample_doubly_stochastic(n, derive_seed(seed, 1));
    DensityVector x = t.apply(y);
    return MajorizationPair{std::move(x), std::move(y), std::move(t)};
}

DensityVector mixing_path(const DensityVector& rho, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("mixing parameter must lie in [0, 1]");
    const double u = 1.0 / static_cast<double>(rho.size());
    std::vector<double> out(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        out[i] = (1.0 - t) * rho[i] + t * u;
    return DensityVector(std::move(out));
}

} // namespace schurcurv
