#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace schurcurv {

inline constexpr double kSumTolerance = 1e-12;

/// A strictly positive probability vector of length n >= 2.
class DensityVector {
public:
    /// Throws DomainError unless every entry is > 0 and the sum is 1 within
    /// kSumTolerance.
    explicit DensityVector(std::vector<double> entries);

    static DensityVector uniform(std::size_t n);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::span<const double> entries() const { return entries_; }
    const std::vector<double>& vector() const { return entries_; }

    /// Entries sorted decreasingly.
    std::vector<double> sorted_decreasing() const;

private:
    std::vector<double> entries_;
};

/// Eigenvalue list (with multiplicities) of a faithful density matrix.
class Spectrum {
public:
    /// Throws DomainError("not a density spectrum") on non-positive entries or
    /// a trace different from 1.
    explicit Spectrum(std::vector<double> eigenvalues);
    explicit Spectrum(const DensityVector& v) : eigenvalues_(v.vector()) {}

    std::size_t size() const { return eigenvalues_.size(); }
    double operator[](std::size_t i) const { return eigenvalues_[i]; }
    std::span<const double> eigenvalues() const { return eigenvalues_; }
    const std::vector<double>& vector() const { return eigenvalues_; }

    DensityVector as_density() const { return DensityVector(eigenvalues_); }

private:
    std::vector<double> eigenvalues_;
};

} // namespace schurcurv
