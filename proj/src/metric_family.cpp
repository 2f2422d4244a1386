#include "schurcurv/metric_family.hpp"

#include <array>
#include <cmath>

#include "schurcurv/error.hpp"

namespace schurcurv {

// f_p is written in logarithmic variables. With t = log x, a = 1/p and
// b = 1 - a = 1/p~, the defining quotient becomes
//
//     f_p(x) = phi(t)^2 / (phi(a t) phi(b t)),    phi(s) = expm1(s)/s,
//
// which has no 0/0 at x = 1 and covers p = 1 (a = 1) and p = inf (a = 0)
// without special cases. Derivatives go through psi = (log phi)'.

namespace {

// B_{2k} / (2k)!, k = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    0.083333333333333329,    -0.0013888888888888889,   3.3068783068783071e-05,
    -8.2671957671957675e-07, 2.08767569878681e-08,     -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13,  8.5860620562778452e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,   -1.3954464685812522e-19,
    3.5347070396294673e-21,
};

double log_phi(double s) {
    if (s == 0.0)
        return 0.0;
    if (s > 1.0)
        return s + std::log1p(-std::exp(-s)) - std::log(s);
    return std::log(std::expm1(s) / s);
}

// psi(s) = 1/(1 - e^{-s}) - 1/s
double psi(double s) {
    if (std::abs(s) < 1.0) {
        const double s2 = s * s;
        double sum = 0.0;
        for (std::size_t k = kBernoulliOverFactorial.size(); k-- > 0;)
            sum = sum * s2 + kBernoulliOverFactorial[k];
        return 0.5 + s * sum;
    }
    if (s < 0.0)
        return 1.0 - psi(-s);
    return 1.0 / (-std::expm1(-s)) - 1.0 / s;
}

// psi'(s) = 1/s^2 - 1/(4 sinh^2(s/2)), even in s.
double psi_prime(double s) {
    if (std::abs(s) < 1.0) {
        const double s2 = s * s;
        double sum = 0.0;
        for (std::size_t k = kBernoulliOverFactorial.size(); k-- > 0;)
            sum = sum * s2 + kBernoulliOverFactorial[k] * static_cast<double>(2 * k + 1);
        return sum;
    }
    const double sh = std::sinh(0.5 * s);
    return 1.0 / (s * s) - 1.0 / (4.0 * sh * sh);
}

void require_positive(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("argument must be a positive finite real");
}

double wyd_log_value(double a, double b, double t) {
    return 2.0 * log_phi(t) - log_phi(a * t) - log_phi(b * t);
}

} // namespace

bool is_admissible(const Exponent& p) {
    if (p.is_infinite())
        return true;
    const double v = p.value();
    return v <= -1.0 || v >= 0.5;
}

double f_wyd(const Exponent& p, double x) {
    require_positive(x);
    const double a = p.reciprocal();
    return std::exp(wyd_log_value(a, 1.0 - a, std::log(x)));
}

MetricFamily::MetricFamily(MetricKind kind, double a) : kind_(kind), a_(a), b_(1.0 - a) {}

MetricFamily MetricFamily::wyd(const Exponent& p) {
    if (!is_admissible(p))
        throw DomainError("WYD(" + p.to_string() + ") is not operator monotone");
    return MetricFamily(MetricKind::wyd, p.reciprocal());
}

MetricFamily MetricFamily::sld() {
    return MetricFamily(MetricKind::sld, 0.0);
}

MetricFamily MetricFamily::bkm() {
    return MetricFamily(MetricKind::bkm, 1.0);
}

MetricFamily MetricFamily::wy() {
    return MetricFamily(MetricKind::wy, 0.5);
}

std::optional<Exponent> MetricFamily::exponent() const {
    switch (kind_) {
    case MetricKind::sld:
        return std::nullopt;
    case MetricKind::bkm:
        return Exponent::finite(1.0);
    case MetricKind::wy:
        return Exponent::finite(2.0);
    case MetricKind::wyd:
        break;
    }
    return a_ == 0.0 ? Exponent::infinity() : Exponent::finite(1.0 / a_);
}

std::string MetricFamily::id() const {
    switch (kind_) {
    case MetricKind::sld:
        return "sld";
    case MetricKind::bkm:
        return "bkm";
    case MetricKind::wy:
        return "wy";
    case MetricKind::wyd:
        break;
    }
    return "wyd:" + exponent()->to_string();
}

MetricFamily::LogJet MetricFamily::jet(double x) const {
    require_positive(x);
    if (kind_ == MetricKind::sld) {
        const double q = 1.0 + x;
        return {0.5 * q, x / q, x / (q * q)};
    }
    const double t = std::log(x);
    const double value = std::exp(wyd_log_value(a_, b_, t));
    const double g1 = 2.0 * psi(t) - a_ * psi(a_ * t) - b_ * psi(b_ * t);
    const double g2 = 2.0 * psi_prime(t) - a_ * a_ * psi_prime(a_ * t) - b_ * b_ * psi_prime(b_ * t);
    return {value, g1, g2};
}

double MetricFamily::f(double x) const {
    return jet(x).value;
}

Derivatives MetricFamily::derivatives(double x) const {
    const LogJet j = jet(x);
    return {j.value * j.g1 / x, j.value * (j.g2 - j.g1 + j.g1 * j.g1) / (x * x)};
}

double MetricFamily::log_slope(double x) const {
    return jet(x).g1 / x;
}

double MetricFamily::log_slope_derivative(double x) const {
    const LogJet j = jet(x);
    return (j.g2 - j.g1) / (x * x);
}

double MetricFamily::c(double x, double y) const {
    require_positive(y);
    return 1.0 / (y * f(x / y));
}

double MetricFamily::dlog_c(double z, double x) const {
    require_positive(x);
    require_positive(z);
    return -jet(z / x).g1 / z;
}

double MetricFamily::c_d1(double x, double y) const {
    return c(x, y) * dlog_c(x, y);
}

double MetricFamily::dlog_c_d12(double x, double y) const {
    require_positive(x);
    require_positive(y);
    return jet(x / y).g2 / (x * y);
}

double MetricFamily::c_d12(double x, double y) const {
    return c(x, y) * (dlog_c_d12(x, y) + dlog_c(x, y) * dlog_c(y, x));
}

} // namespace schurcurv
