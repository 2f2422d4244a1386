#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "schurcurv/dittmann.hpp"
#include "schurcurv/report_json.hpp"
#include "schurcurv/schur_lab.hpp"

using namespace schurcurv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ClassifyOptions options(std::size_t n, std::size_t samples, std::uint64_t seed = 0) {
    ClassifyOptions o;
    o.n = n;
    o.samples = samples;
    o.seed = seed;
    return o;
}

} // namespace

TEST_CASE("Shannon entropy", "[schur]") {
    CHECK_THAT(shannon_entropy(DensityVector::uniform(4)), WithinRel(std::log(4.0), 1e-15));
    CHECK_THAT(shannon_entropy(DensityVector({0.5, 0.5})), WithinRel(std::log(2.0), 1e-15));
}

TEST_CASE("entropy is strictly increasing for n up to 5", "[schur]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto v = classify(entropy_target(), options(n, 1000, n));
        CHECK(v.classification == Classification::increasing);
        CHECK(v.strict);
        CHECK(v.increasing_violations == 0);
        CHECK(v.counterexamples.empty());
        CHECK(v.samples_tested == 1000);
    }
}

TEST_CASE("negative entropy mirrors entropy", "[schur]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto v = classify(negative_entropy_target(), options(n, 1000, n));
        CHECK(v.classification == Classification::decreasing);
        CHECK(v.strict);
    }
}

TEST_CASE("constant targets are inconclusive", "[schur]") {
    const auto v = classify([](const DensityVector&) { return 3.0; }, options(3, 200));
    CHECK(v.classification == Classification::inconclusive);
    CHECK_FALSE(v.strict);
    const auto wy = classify(spectral_curvature_target(MetricFamily::wy(), Convention::normalized), options(3, 200));
    CHECK(wy.classification == Classification::inconclusive);
}

TEST_CASE("a weakly monotone target is not strict", "[schur]") {
    // Largest entry: Schur-decreasing, flat along pairs sharing the maximum.
    const auto target = [](const DensityVector& x) {
        return *std::max_element(x.entries().begin(), x.entries().end());
    };
    auto o = options(3, 300);
    const DensityVector a({0.2, 0.2, 0.6});
    const DensityVector b({0.3, 0.1, 0.6});
    o.mandatory_probes.emplace_back("flat", MajorizationPair{a, b, std::nullopt});
    const auto v = classify(target, o);
    CHECK(v.classification == Classification::decreasing);
    CHECK_FALSE(v.strict);
}

TEST_CASE("probe records", "[schur]") {
    const DensityVector x({0.4, 0.6});
    const auto same = probe(entropy_target(), MajorizationPair{x, x, std::nullopt}, 1e-9, "same");
    CHECK(same.delta == 0.0);
    CHECK(same.contribution == Contribution::neutral);
    CHECK(same.permutation);
    CHECK(same.label == "same");
    const auto rec = probe(entropy_target(), MajorizationPair{DensityVector::uniform(2), x, std::nullopt}, 1e-9);
    CHECK(rec.delta > 0.0);
    CHECK(rec.contribution == Contribution::supports_increasing);
    CHECK_THAT(rec.tolerance, WithinRel(1e-9 * (1.0 + std::log(2.0)), 1e-12));
}

TEST_CASE("the SLD pair under the fixed convention", "[schur]") {
    const auto pair = sld_counterexample_pair();
    CHECK(majorizes(pair.more_mixed, pair.less_mixed));
    CHECK(pair.more_mixed[0] == 1.0 / 6);
    const auto rec = probe(spectral_curvature_target(MetricFamily::sld()), pair, 1e-9);
    // Exact: 1539/50 - 3447/112.
    CHECK_THAT(rec.delta, WithinAbs(1539.0 / 50 - 3447.0 / 112, 1e-12));
    CHECK(rec.contribution == Contribution::supports_increasing);
}

TEST_CASE("SLD curvature is neither increasing nor decreasing", "[schur]") {
    auto o = options(3, 1000);
    o.mandatory_probes.emplace_back("sld-counterexample-pair", sld_counterexample_pair());
    const auto v = classify(spectral_curvature_target(MetricFamily::sld()), o);
    CHECK(v.classification == Classification::neither);
    CHECK(v.increasing_violations > 0);
    CHECK(v.decreasing_violations > 0);
    REQUIRE(v.probes.size() == 1);
    CHECK(v.probes[0].label == "sld-counterexample-pair");
    bool listed = false;
    for (const auto& c : v.counterexamples)
        listed = listed || c.label == "sld-counterexample-pair";
    CHECK(listed);
    CHECK(verdict_consistency_problem(to_json(v)).empty());
}

TEST_CASE("two-level probe grid", "[schur]") {
    const auto grid = two_level_probe_grid(1000);
    REQUIRE(grid.size() == 1000);
    for (const auto& pair : grid) {
        CHECK(majorizes(pair.more_mixed, pair.less_mixed));
        CHECK(pair.more_mixed[0] >= 0.5);
        CHECK(pair.less_mixed[0] <= 0.995 + 1e-15);
    }
}

TEST_CASE("BKM two-level probes show no increasing violations", "[schur]") {
    auto o = options(2, 200);
    for (auto& pair : two_level_probe_grid(1000))
        o.mandatory_probes.emplace_back("grid", std::move(pair));
    const auto v = classify(spectral_curvature_target(MetricFamily::bkm()), o);
    std::size_t grid_violations = 0;
    for (const auto& p : v.probes)
        grid_violations += p.contribution == Contribution::supports_decreasing;
    CHECK(grid_violations == 0);
}

TEST_CASE("classification is deterministic", "[schur]") {
    auto o = options(3, 300, 1234);
    o.mandatory_probes.emplace_back("sld-counterexample-pair", sld_counterexample_pair());
    const auto a = to_json(classify(spectral_curvature_target(MetricFamily::sld()), o)).dump();
    const auto b = to_json(classify(spectral_curvature_target(MetricFamily::sld()), o)).dump();
    CHECK(a == b);
    o.seed = 1235;
    const auto c = to_json(classify(spectral_curvature_target(MetricFamily::sld()), o)).dump();
    CHECK(a != c);
}

TEST_CASE("verdict invariants hold on serialized output", "[schur][property]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto v = classify(spectral_curvature_target(MetricFamily::sld()), options(3, 100, seed));
        const auto j = to_json(v);
        INFO(j.dump());
        CHECK(verdict_consistency_problem(j).empty());
        for (const auto& c : v.counterexamples) {
            CHECK(oracle::prefix_dominated(c.pair.more_mixed.vector(), c.pair.less_mixed.vector()));
            CHECK(std::abs(c.delta) > c.tolerance);
        }
    }
}

TEST_CASE("the consistency checker rejects broken verdicts", "[schur]") {
    auto o = options(3, 100);
    o.mandatory_probes.emplace_back("sld-counterexample-pair", sld_counterexample_pair());
    auto j = to_json(classify(spectral_curvature_target(MetricFamily::sld()), o));
    REQUIRE(verdict_consistency_problem(j).empty());
    auto swapped = j;
    auto& c = swapped["counterexamples"][0];
    std::swap(c["more_mixed"], c["less_mixed"]);
    CHECK_FALSE(verdict_consistency_problem(swapped).empty());
    auto relabeled = j;
    relabeled["classification"] = "increasing";
    CHECK_FALSE(verdict_consistency_problem(relabeled).empty());
    auto missing = j;
    missing.erase("probes");
    CHECK_FALSE(verdict_consistency_problem(missing).empty());
}

TEST_CASE("target failures carry the pair", "[schur]") {
    const Target bad = [](const DensityVector& x) -> double {
        if (x[0] > 0.0)
            throw std::runtime_error("boom");
        return 0.0;
    };
    try {
        classify(bad, options(3, 5));
        FAIL("expected an exception");
    } catch (const TargetEvaluationError& e) {
        CHECK(e.pair().more_mixed.size() == 3);
    }
}

TEST_CASE("plane and simplex targets", "[schur]") {
    const auto plane = plane_curvature_target(Exponent::finite(3.0));
    CHECK(std::isfinite(plane(DensityVector({0.3, 0.7}))));
    auto o = options(2, 300);
    o.tol = 1e-9;
    CHECK(classify(plane, o).classification == Classification::increasing);
    CHECK(classify(plane_curvature_target(Exponent::finite(1.5)), o).classification == Classification::decreasing);
    const auto simplex = simplex_curvature_target(Exponent::finite(2.0));
    CHECK_THAT(simplex(DensityVector({0.2, 0.3, 0.5})), WithinAbs(0.5, 1e-4));
    CHECK_THAT(simplex(DensityVector({0.0005, 0.4995, 0.5})), WithinAbs(0.5, 1e-3));
}
