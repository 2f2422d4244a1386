#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "schurcurv/state.hpp"

// Majorization in the "more mixed" direction.
//
// Note the orientation: majorizes(x, y) reads "x is more mixed than y", i.e.
// every prefix sum of x sorted decreasingly is <= the matching prefix sum of
// y. This is the reverse of the symbol used by most majorization texts.

namespace schurcurv {

/// Non-negative n x n matrix with unit row and column sums (1e-12).
class DoublyStochasticMap {
public:
    explicit DoublyStochasticMap(Eigen::MatrixXd matrix);

    static DoublyStochasticMap identity(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
    const Eigen::MatrixXd& matrix() const { return matrix_; }

    /// (Tv)_j = sum_i t_ji v_i.
    std::vector<double> apply(std::span<const double> v) const;
    DensityVector apply(const DensityVector& v) const;

private:
    Eigen::MatrixXd matrix_;
};

struct MajorizationPair {
    DensityVector more_mixed;
    DensityVector less_mixed;
    std::optional<DoublyStochasticMap> witness;
};

/// x is more mixed than y. Throws DomainError("incomparable dimensions") on
/// a length mismatch.
bool majorizes(const DensityVector& x, const DensityVector& y);
/// Non-commutative case: comparison of eigenvalue lists.
bool majorizes(const Spectrum& x, const Spectrum& y);

/// x and y agree after sorting, entrywise within `tol`.
bool is_permutation_of(const DensityVector& x, const DensityVector& y, double tol = 1e-12);

/// Convex combination of k uniformly random permutation matrices with flat
/// Dirichlet weights (a point of the Birkhoff polytope).
DoublyStochasticMap sample_doubly_stochastic(std::size_t n, std::size_t k, std::uint64_t seed);
/// Same with the default k = n^2.
DoublyStochasticMap sample_doubly_stochastic(std::size_t n, std::uint64_t seed);

/// Uniform simplex point with every entry >= margin (affine shrink of the
/// flat Dirichlet draw).
DensityVector sample_clamped_density(std::size_t n, std::uint64_t seed, double margin = 1e-3);

/// (Ty, y, T) with y from sample_clamped_density and T from
/// sample_doubly_stochastic.
MajorizationPair sample_comparable_pair(std::size_t n, std::uint64_t seed);

/// (1 - t) rho + t * uniform; larger t is more mixed.
DensityVector mixing_path(const DensityVector& rho, double t);

} // namespace schurcurv
