#include "schurcurv/dittmann.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "schurcurv/error.hpp"

namespace schurcurv {

// Confluent arguments.
//
// Every singular quotient in h1..h3 is a divided difference of a smooth
// function, so near coincidences it is replaced by the mean of the matching
// partial derivative over the segment (or rectangle) spanned by the
// arguments. With 4-point Gauss-Legendre and segments shorter than 1% of the
// argument scale the quadrature error is far below double rounding, while
// the explicit quotient (used beyond that) loses at most eps/1e-4.
//
// The h1 numerator N(x, y, z) = c(x, y) - z c(x, z) c(y, z) vanishes
// identically on x = z and on y = z (symmetry of c and c(z, z) = 1/z), which
// is what makes the divided-difference form exact.

namespace {

constexpr double kConfluentTolerance = 1e-2;

constexpr std::array<double, 4> kNodes = {-0.8611363115940526, -0.3399810435848563,
                                          0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kWeights = {0.3478548451374538, 0.6521451548625461,
                                            0.6521451548625461, 0.3478548451374538};

bool near(double u, double v) {
    return std::abs(u - v) <= kConfluentTolerance * std::max(u, v);
}

// Mean of g over the segment between a and b (a == b allowed).
template <typename G>
double segment_mean(double a, double b, G&& g) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < kNodes.size(); ++i)
        sum += 0.5 * kWeights[i] * g(mid + half * kNodes[i]);
    return sum;
}

template <typename G>
double rectangle_mean(double a0, double a1, double b0, double b1, G&& g) {
    return segment_mean(a0, a1, [&](double s) { return segment_mean(b0, b1, [&](double t) { return g(s, t); }); });
}

void require_positive(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("curvature arguments must be positive");
}

} // namespace

const char* to_string(Convention c) {
    return c == Convention::ambient ? "ambient" : "normalized";
}

const char* to_string(FormulaPath p) {
    switch (p) {
    case FormulaPath::h_sum:
        return "h-sum";
    case FormulaPath::andai:
        return "andai";
    case FormulaPath::closed_form_constant:
        return "closed-form-constant";
    }
    return "unknown";
}

HComponents h_components(const MetricFamily& fam, double x, double y, double z) {
    require_positive(x);
    require_positive(y);
    require_positive(z);

    const double cxy = fam.c(x, y);
    const double cxz = fam.c(x, z);
    const double cyz = fam.c(y, z);
    const bool xz = near(x, z);
    const bool yz = near(y, z);
    const bool xy = near(x, y);

    // N(x, y, z) / ((x - z)(y - z))
    double n_quotient = 0.0;
    if (xz && yz) {
        n_quotient = rectangle_mean(z, x, z, y, [&](double s, double t) {
            return fam.c_d12(s, t) - z * fam.c_d1(s, z) * fam.c_d1(t, z);
        });
    } else if (xz) {
        n_quotient = segment_mean(z, x, [&](double s) { return fam.c_d1(s, y) - z * fam.c_d1(s, z) * cyz; }) /
                     (y - z);
    } else if (yz) {
        n_quotient = segment_mean(z, y, [&](double t) { return fam.c_d1(t, x) - z * fam.c_d1(t, z) * cxz; }) /
                     (x - z);
    } else {
        n_quotient = (cxy - z * cxz * cyz) / ((x - z) * (y - z));
    }

    // (c(x, z) - c(y, z)) / (x - y)
    const double c_slope =
        xy ? segment_mean(y, x, [&](double s) { return fam.c_d1(s, z); }) : (cxz - cyz) / (x - y);

    // ((ln c)'(z, x) - (ln c)'(z, y)) / (x - y)
    const double dlog_slope = xy ? segment_mean(y, x, [&](double s) { return fam.dlog_c_d12(z, s); })
                                 : (fam.dlog_c(z, x) - fam.dlog_c(z, y)) / (x - y);

    HComponents h{};
    h.h1 = n_quotient / (cxz * cyz);
    h.h2 = c_slope * c_slope / (cxy * cxz * cyz);
    h.h3 = z * dlog_slope;
    h.h4 = z * fam.dlog_c(z, x) * fam.dlog_c(z, y);
    h.h = h.h1 - 0.5 * h.h2 + 2.0 * h.h3 - h.h4;
    return h;
}

double normalization_shift(std::size_t n) {
    const double m = static_cast<double>(n * n);
    return 0.25 * (m - 1.0) * (m - 2.0);
}

namespace {

void require_scale(double metric_scale) {
    if (!(metric_scale > 0.0) || !std::isfinite(metric_scale))
        throw DomainError("metric scale must be positive");
}

double h_sum(const MetricFamily& family, const Spectrum& s) {
    const auto ev = s.eigenvalues();
    double total = 0.0;
    for (double x : ev)
        for (double y : ev)
            for (double z : ev)
                total += h_components(family, x, y, z).h;
    for (double x : ev)
        total -= h_components(family, x, x, x).h;
    if (!std::isfinite(total))
        throw NumericalError("non-finite curvature for metric " + family.id());
    return total;
}

} // namespace

CurvatureReport scal_ambient(const MetricFamily& family, const Spectrum& s, double metric_scale) {
    require_scale(metric_scale);
    return {h_sum(family, s) / metric_scale, Convention::ambient, family.id(), s.vector(), FormulaPath::h_sum,
            metric_scale};
}

CurvatureReport scal_normalized(const MetricFamily& family, const Spectrum& s, double metric_scale) {
    require_scale(metric_scale);
    const double value = (h_sum(family, s) + normalization_shift(s.size())) / metric_scale;
    return {value, Convention::normalized, family.id(), s.vector(), FormulaPath::h_sum, metric_scale};
}

CurvatureReport scal(const MetricFamily& family, const Spectrum& s, Convention convention, double metric_scale) {
    return convention == Convention::ambient ? scal_ambient(family, s, metric_scale)
                                             : scal_normalized(family, s, metric_scale);
}

CurvatureReport wy_constant(std::size_t n) {
    if (n < 2)
        throw DomainError("dimension must be >= 2");
    return {normalization_shift(n), Convention::normalized, "wy", {}, FormulaPath::closed_form_constant, 1.0};
}

namespace {

double andai_direct(const MetricFamily& family, double a) {
    const double u = (1.0 - a) / (1.0 + a);
    const double f = family.f(u);
    const auto [f1, f2] = family.derivatives(u);
    const double p = 1.0 + a;
    const double p2 = p * p;
    const double p3 = p2 * p;
    const double a2 = a * a;
    return 14.0 * (a - 1.0) * f1 * f1 / (p3 * f * f) + 2.0 * (a2 + 7.0 * a - 6.0) * f1 / (p2 * a * f) +
           8.0 * (1.0 - a) * f2 / (p3 * f) + 2.0 * p * f / a2 + (3.0 * a2 * a + 5.0 * a2 + 8.0 * a - 4.0) / (2.0 * p * a2);
}

} // namespace

double andai_r(const MetricFamily& family, double a) {
    if (!(std::abs(a) < 1.0))
        throw DomainError("Andai parameter must lie in (-1, 1)");
    // The individual terms blow up like 1/a^2 at the most mixed state; r is
    // even and smooth there, so fit r0 + r2 a^2 through a0 and 2 a0.
    constexpr double a0 = 1e-3;
    if (std::abs(a) < a0) {
        const double r1 = andai_direct(family, a0);
        const double r2 = andai_direct(family, 2.0 * a0);
        const double curvature = (r2 - r1) / (3.0 * a0 * a0);
        return r1 + curvature * (a * a - a0 * a0);
    }
    return andai_direct(family, a);
}

CurvatureReport andai_report(const MetricFamily& family, double a) {
    const double l1 = 0.5 * (1.0 + a);
    return {andai_r(family, a), Convention::normalized, family.id(), {l1, 1.0 - l1}, FormulaPath::andai, 1.0};
}

} // namespace schurcurv
