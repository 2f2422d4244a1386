#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace schurcurv {

/// Seeded generator whose output sequence is fixed by the C++ standard
/// (mt19937_64 plus hand-written transforms), so sampled data are
/// bit-reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Exp(1).
    double exponential();
    /// Uniform permutation of 0..n-1 (Fisher-Yates).
    std::vector<std::size_t> permutation(std::size_t n);
    /// Uniform point of the closed probability simplex (flat Dirichlet).
    std::vector<double> simplex(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Independent stream seed for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace schurcurv
