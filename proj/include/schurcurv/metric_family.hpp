#pragma once

#include <optional>
#include <string>

#include "schurcurv/exponent.hpp"

namespace schurcurv {

/// p is in (-inf, -1] U [1/2, +inf], the range where f_p is operator monotone.
bool is_admissible(const Exponent& p);

/// The Wigner-Yanase-Dyson function
///   f_p(x) = (x - 1)^2 / (p p~ (x^{1/p} - 1)(x^{1/p~} - 1)),
/// with f_1 = f_inf = (x - 1)/log x. Defined for every p != 0 (no
/// admissibility check); throws DomainError for x <= 0.
double f_wyd(const Exponent& p, double x);

struct Derivatives {
    double first;
    double second;
};

enum class MetricKind { wyd, sld, bkm, wy };

/// A normalized symmetric operator monotone function f together with the
/// Chentsov-Morozova kernel c(x, y) = 1 / (y f(x/y)) and the derivatives the
/// curvature formulas need. All evaluators are analytic; nothing here
/// differentiates numerically.
///
/// Immutable after construction and safe to share between threads.
class MetricFamily {
public:
    /// WYD(p); throws DomainError when p is not admissible.
    static MetricFamily wyd(const Exponent& p);
    static MetricFamily sld();
    static MetricFamily bkm();
    static MetricFamily wy();

    MetricKind kind() const { return kind_; }
    /// Exponent of the WYD representation (1 for BKM, 2 for WY); empty for SLD.
    std::optional<Exponent> exponent() const;
    /// "wyd:<p>", "sld", "bkm" or "wy".
    std::string id() const;

    double f(double x) const;
    Derivatives derivatives(double x) const;
    /// f'(x) / f(x).
    double log_slope(double x) const;
    /// d/dx [f'(x) / f(x)].
    double log_slope_derivative(double x) const;

    /// c(x, y) = 1 / (y f(x/y)).
    double c(double x, double y) const;
    /// dc/dx.
    double c_d1(double x, double y) const;
    /// d^2 c / dx dy.
    double c_d12(double x, double y) const;
    /// d/dz log c(z, x): derivative in the FIRST argument.
    double dlog_c(double z, double x) const;
    /// d^2/dx dy log c(x, y).
    double dlog_c_d12(double x, double y) const;

private:
    MetricFamily(MetricKind kind, double a);

    struct LogJet {
        double value;  // f(x)
        double g1;     // d/dt log f(e^t) at t = log x
        double g2;     // d^2/dt^2 log f(e^t)
    };
    LogJet jet(double x) const;

    MetricKind kind_;
    // WYD weights a = 1/p and b = 1 - a = 1/p~; unused for SLD.
    double a_;
    double b_;
};

} // namespace schurcurv
