#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurcurv/dittmann.hpp"
#include "schurcurv/exponent.hpp"
#include "schurcurv/majorization.hpp"
#include "schurcurv/metric_family.hpp"

namespace schurcurv {

/// Any scalar function of a density vector or a spectrum.
using Target = std::function<double(const DensityVector&)>;

enum class Classification { increasing, decreasing, neither, inconclusive };

const char* to_string(Classification c);

enum class Contribution {
    supports_increasing,  // f(more mixed) - f(less mixed) > tol
    supports_decreasing,  // f(more mixed) - f(less mixed) < -tol
    neutral,
};

const char* to_string(Contribution c);

struct ProbeRecord {
    MajorizationPair pair;
    double f_more_mixed;
    double f_less_mixed;
    double delta;      // f_more_mixed - f_less_mixed
    double tolerance;  // absolute, already scaled by the values
    Contribution contribution;
    bool permutation;  // the two vectors agree up to ordering
    std::string label;
};

struct SchurVerdict {
    Classification classification;
    std::size_t samples_tested;
    bool strict;
    std::size_t increasing_violations;  // pairs with delta < -tol
    std::size_t decreasing_violations;  // pairs with delta > tol
    /// Violating pairs, kept only when the verdict is "neither" (capped per
    /// direction; violating mandatory probes are always kept).
    std::vector<ProbeRecord> counterexamples;
    /// Every mandatory probe, violating or not.
    std::vector<ProbeRecord> probes;
};

/// Raised when the target throws; carries the pair being evaluated.
class TargetEvaluationError : public std::runtime_error {
public:
    TargetEvaluationError(const std::string& what, MajorizationPair pair)
        : std::runtime_error(what), pair_(std::move(pair)) {}
    const MajorizationPair& pair() const { return pair_; }

private:
    MajorizationPair pair_;
};

/// Per-pair tolerance is tol * (1 + max(|f(x)|, |f(y)|)).
ProbeRecord probe(const Target& target, const MajorizationPair& pair, double tol,
                  std::string label = {});

struct ClassifyOptions {
    std::size_t n = 3;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    /// Pairs always evaluated in addition to the random ones.
    std::vector<std::pair<std::string, MajorizationPair>> mandatory_probes;
    std::size_t max_counterexamples_per_direction = 16;
};

/// Random pairs alternate between Birkhoff pairs (Ty, y) and two points of
/// one mixing path. Deterministic in (seed, samples, n, tol).
SchurVerdict classify(const Target& target, const ClassifyOptions& options);

// Targets.

/// -sum rho log rho.
double shannon_entropy(const DensityVector& rho);
Target entropy_target();
Target negative_entropy_target();
/// Spectral curvature of a monotone metric (eigenvalues = the vector).
Target spectral_curvature_target(MetricFamily family, Convention convention = Convention::ambient);
/// Intrinsic alpha-geometry curvature of the simplex, finite differences.
/// The step shrinks to min(step, min_entry/20) near the boundary.
Target simplex_curvature_target(Exponent p, double step = 1e-4);
/// n = 2 only: plane curvature c_p at theta with rho = (cos^2, sin^2).
Target plane_curvature_target(Exponent p);

// Mandatory probes.

/// rho = (1/6, 1/6, 2/3) more mixed than sigma = (2/9, 1/9, 2/3).
MajorizationPair sld_counterexample_pair();
/// `count` pairs of 2-level spectra (l, 1 - l) from consecutive points of a
/// grid of l in [1/2, 0.995]; the first member of each pair is closer to 1/2.
std::vector<MajorizationPair> two_level_probe_grid(std::size_t count);

} // namespace schurcurv
