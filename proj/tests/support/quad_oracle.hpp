// Quad-precision reference values for the spectral curvature ingredients.
//
// Everything is evaluated straight from the defining quotients in __float128;
// coinciding arguments are approached from nearby distinct triples and
// Richardson-extrapolated, which is affordable only with the extra digits.
#pragma once

#include <cmath>
#include <functional>

#include <quadmath.h>

namespace oracle {

using quad = __float128;

/// f_p(x) from the defining quotient; p = 1 handled as (x-1)/log x.
inline quad wyd_f(quad p, quad x) {
    if (x == 1)
        return 1;
    if (p == 1)
        return (x - 1) / logq(x);
    const quad a = 1 / p;
    const quad b = 1 - a;
    return (x - 1) * (x - 1) / (p * (p / (p - 1)) * (powq(x, a) - 1) * (powq(x, b) - 1));
}

/// Quotient rule on the defining quotient of f_p.
inline quad wyd_df(quad p, quad x) {
    if (p == 1) {
        const quad l = logq(x);
        return (l - (x - 1) / x) / (l * l);
    }
    const quad a = 1 / p;
    const quad b = 1 - a;
    const quad k = p * (p / (p - 1));
    const quad n = (x - 1) * (x - 1);
    const quad dn = 2 * (x - 1);
    const quad d = k * (powq(x, a) - 1) * (powq(x, b) - 1);
    const quad dd = k * (a * powq(x, a - 1) * (powq(x, b) - 1) + b * powq(x, b - 1) * (powq(x, a) - 1));
    return (dn * d - n * dd) / (d * d);
}

struct QuadFamily {
    std::function<quad(quad)> f;
    std::function<quad(quad)> df;

    quad c(quad x, quad y) const { return 1 / (y * f(x / y)); }
    quad dlog_c(quad z, quad x) const { return -df(z / x) / (x * f(z / x)); }

    /// h at pairwise distinct arguments.
    quad h_distinct(quad x, quad y, quad z) const {
        const quad cxy = c(x, y);
        const quad cxz = c(x, z);
        const quad cyz = c(y, z);
        const quad h1 = (cxy - z * cxz * cyz) / ((x - z) * (y - z) * cxz * cyz);
        const quad h2 = (cxz - cyz) * (cxz - cyz) / ((x - y) * (x - y) * cxy * cxz * cyz);
        const quad h3 = z * (dlog_c(z, x) - dlog_c(z, y)) / (x - y);
        const quad h4 = z * dlog_c(z, x) * dlog_c(z, y);
        return h1 - h2 / 2 + 2 * h3 - h4;
    }

    /// h at arbitrary positive arguments: spread the triple by eps along a
    /// fixed direction, then Richardson-extrapolate eps -> 0.
    double h(double x, double y, double z) const {
        const quad scale = fmaxq(fmaxq(x, y), z);
        const auto at = [&](quad eps) { return h_distinct(x, y + eps * scale, z + 2 * eps * scale); };
        const auto apart = [&](double u, double v) { return std::abs(u - v) > 1e-4 * scale; };
        if (apart(x, y) && apart(y, z) && apart(x, z))
            return static_cast<double>(h_distinct(x, y, z));
        // H(e) = h + O(e); three Richardson levels leave O(e^3).
        const quad e = 1e-6Q;
        const auto r1 = [&](quad s) { return 2 * at(s / 2) - at(s); };
        const auto r2 = [&](quad s) { return (4 * r1(s / 2) - r1(s)) / 3; };
        return static_cast<double>((8 * r2(e / 2) - r2(e)) / 7);
    }
};

inline QuadFamily quad_sld() {
    return {[](quad x) { return (1 + x) / 2; }, [](quad) { return quad(0.5); }};
}

inline QuadFamily quad_wyd(quad p) {
    return {[p](quad x) { return wyd_f(p, x); }, [p](quad x) { return wyd_df(p, x); }};
}

} // namespace oracle
