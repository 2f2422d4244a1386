#include "schurcurv/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "schurcurv/error.hpp"

namespace schurcurv {

namespace {

bool positive_and_normalized(const std::vector<double>& v) {
    if (v.size() < 2)
        return false;
    for (double x : v)
        if (!(x > 0.0) || !std::isfinite(x))
            return false;
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    return std::abs(sum - 1.0) <= kSumTolerance;
}

} // namespace

DensityVector::DensityVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (!positive_and_normalized(entries_))
        throw DomainError("not a density vector: need n >= 2 positive entries summing to 1");
}

DensityVector DensityVector::uniform(std::size_t n) {
    return DensityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::vector<double> DensityVector::sorted_decreasing() const {
    std::vector<double> s = entries_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

Spectrum::Spectrum(std::vector<double> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
    if (!positive_and_normalized(eigenvalues_))
        throw DomainError("not a density spectrum");
}

} // namespace schurcurv
