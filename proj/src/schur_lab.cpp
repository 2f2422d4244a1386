#include "schurcurv/schur_lab.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "schurcurv/error.hpp"
#include "schurcurv/rng.hpp"
#include "schurcurv/simplex_alpha.hpp"

namespace schurcurv {

const char* to_string(Classification c) {
    switch (c) {
    case Classification::increasing:
        return "increasing";
    case Classification::decreasing:
        return "decreasing";
    case Classification::neither:
        return "neither";
    case Classification::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

const char* to_string(Contribution c) {
    switch (c) {
    case Contribution::supports_increasing:
        return "supports-increasing";
    case Contribution::supports_decreasing:
        return "supports-decreasing";
    case Contribution::neutral:
        return "neutral";
    }
    return "unknown";
}

namespace {

double evaluate(const Target& target, const DensityVector& v, const MajorizationPair& pair) {
    double value = 0.0;
    try {
        value = target(v);
    } catch (const std::exception& e) {
        throw TargetEvaluationError(std::string("target evaluation failed: ") + e.what(), pair);
    }
    if (!std::isfinite(value))
        throw TargetEvaluationError("target returned a non-finite value", pair);
    return value;
}

// Second random mechanism: two points of one mixing path, t_more > t_less.
MajorizationPair chain_pair(std::size_t n, std::uint64_t seed) {
    DensityVector rho = sample_clamped_density(n, derive_seed(seed, 0));
    Rng rng(derive_seed(seed, 1));
    const double t_less = 0.5 * rng.uniform();
    const double t_more = t_less + 0.05 + 0.45 * rng.uniform();
    return MajorizationPair{mixing_path(rho, t_more), mixing_path(rho, t_less), std::nullopt};
}

} // namespace

ProbeRecord probe(const Target& target, const MajorizationPair& pair, double tol, std::string label) {
    if (!majorizes(pair.more_mixed, pair.less_mixed))
        throw DomainError("probe pair is not ordered by majorization");
    const double f_more = evaluate(target, pair.more_mixed, pair);
    const double f_less = evaluate(target, pair.less_mixed, pair);
    const double delta = f_more - f_less;
    const double tolerance = tol * (1.0 + std::max(std::abs(f_more), std::abs(f_less)));
    Contribution contribution = Contribution::neutral;
    if (delta > tolerance)
        contribution = Contribution::supports_increasing;
    else if (delta < -tolerance)
        contribution = Contribution::supports_decreasing;
    return ProbeRecord{pair,      f_more,       f_less,
                       delta,     tolerance,    contribution,
                       is_permutation_of(pair.more_mixed, pair.less_mixed), std::move(label)};
}

SchurVerdict classify(const Target& target, const ClassifyOptions& options) {
    if (options.samples < 1)
        throw DomainError("classify needs at least one sample");
    if (options.n < 2)
        throw DomainError("classify needs n >= 2");

    SchurVerdict verdict{};
    std::vector<ProbeRecord> violate_increasing;  // delta < -tol
    std::vector<ProbeRecord> violate_decreasing;  // delta > tol
    std::size_t flat = 0;
    std::size_t non_permutation = 0;
    bool any_flat_non_permutation = false;

    auto account = [&](ProbeRecord rec, bool mandatory) {
        ++verdict.samples_tested;
        if (!rec.permutation)
            ++non_permutation;
        switch (rec.contribution) {
        case Contribution::supports_decreasing:
            ++verdict.increasing_violations;
            if (mandatory || violate_increasing.size() < options.max_counterexamples_per_direction)
                violate_increasing.push_back(std::move(rec));
            break;
        case Contribution::supports_increasing:
            ++verdict.decreasing_violations;
            if (mandatory || violate_decreasing.size() < options.max_counterexamples_per_direction)
                violate_decreasing.push_back(std::move(rec));
            break;
        case Contribution::neutral:
            ++flat;
            if (!rec.permutation)
                any_flat_non_permutation = true;
            break;
        }
    };

    // Mandatory probes come first so their position in the output is fixed.
    for (const auto& [label, pair] : options.mandatory_probes) {
        ProbeRecord rec = probe(target, pair, options.tol, label);
        verdict.probes.push_back(rec);
        account(std::move(rec), true);
    }
    for (std::size_t i = 0; i < options.samples; ++i) {
        const std::uint64_t s = derive_seed(options.seed, i);
        MajorizationPair pair = (i % 2 == 0) ? sample_comparable_pair(options.n, s) : chain_pair(options.n, s);
        account(probe(target, pair, options.tol, {}), false);
    }

    const bool inc_ok = verdict.increasing_violations == 0;
    const bool dec_ok = verdict.decreasing_violations == 0;
    if (flat == verdict.samples_tested)
        verdict.classification = Classification::inconclusive;
    else if (inc_ok)
        verdict.classification = Classification::increasing;
    else if (dec_ok)
        verdict.classification = Classification::decreasing;
    else
        verdict.classification = Classification::neither;

    const bool monotone = verdict.classification == Classification::increasing ||
                          verdict.classification == Classification::decreasing;
    verdict.strict = monotone && non_permutation > 0 && !any_flat_non_permutation;

    if (verdict.classification == Classification::neither) {
        for (auto& r : violate_increasing)
            verdict.counterexamples.push_back(std::move(r));
        for (auto& r : violate_decreasing)
            verdict.counterexamples.push_back(std::move(r));
    }
    return verdict;
}

double shannon_entropy(const DensityVector& rho) {
    double h = 0.0;
    for (double p : rho.entries())
        h -= p * std::log(p);
    return h;
}

Target entropy_target() {
    return [](const DensityVector& rho) { return shannon_entropy(rho); };
}

Target negative_entropy_target() {
    return [](const DensityVector& rho) { return -shannon_entropy(rho); };
}

Target spectral_curvature_target(MetricFamily family, Convention convention) {
    return [family = std::move(family), convention](const DensityVector& rho) {
        return scal(family, Spectrum(rho), convention).value;
    };
}

Target simplex_curvature_target(Exponent p, double step) {
    return [p, step](const DensityVector& rho) {
        const auto chart = SimplexChart::from_density(rho);
        const double h = std::min(step, chart.min_entry() / 20.0);
        return simplex_scal_fd(p, chart, h);
    };
}

Target plane_curvature_target(Exponent p) {
    return [p](const DensityVector& rho) {
        if (rho.size() != 2)
            throw DomainError("plane curvature is defined for n = 2 only");
        return plane_curvature(p, std::acos(std::sqrt(rho[0])));
    };
}

MajorizationPair sld_counterexample_pair() {
    DensityVector rho({1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0});
    DensityVector sigma({2.0 / 9.0, 1.0 / 9.0, 2.0 / 3.0});
    return MajorizationPair{std::move(rho), std::move(sigma), std::nullopt};
}

std::vector<MajorizationPair> two_level_probe_grid(std::size_t count) {
    std::vector<MajorizationPair> pairs;
    pairs.reserve(count);
    const double lo = 0.5;
    const double hi = 0.995;
    for (std::size_t i = 0; i < count; ++i) {
        const double l_more = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count);
        const double l_less = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(count);
        pairs.push_back(MajorizationPair{DensityVector({l_more, 1.0 - l_more}),
                                         DensityVector({l_less, 1.0 - l_less}), std::nullopt});
    }
    return pairs;
}

} // namespace schurcurv
