#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schurcurv/metric_family.hpp"
#include "schurcurv/state.hpp"

namespace schurcurv {

enum class Convention {
    ambient,     // metric on all positive matrices
    normalized,  // metric restricted to trace-one matrices
};

enum class FormulaPath { h_sum, andai, closed_form_constant };

const char* to_string(Convention c);
const char* to_string(FormulaPath p);

struct CurvatureReport {
    double value;
    Convention convention;
    std::string metric_id;
    std::vector<double> spectrum;
    FormulaPath formula_path;
    /// The metric was multiplied by this constant; the curvature scales by
    /// its inverse. 1/4 gives the Bures normalization of SLD.
    double metric_scale = 1.0;
};

struct HComponents {
    double h1;
    double h2;
    double h3;
    double h4;
    /// h1 - h2/2 + 2 h3 - h4
    double h;
};

/// The four auxiliary functions of the spectral curvature formula. Coinciding
/// (or nearly coinciding) arguments are handled through their confluent
/// limits, so the result is finite for every positive triple.
HComponents h_components(const MetricFamily& family, double x, double y, double z);

/// (n^2 - 1)(n^2 - 2)/4: normalized minus ambient curvature at unit scale.
double normalization_shift(std::size_t n);

/// Sum of h over all ordered triples of the eigenvalue list minus its
/// diagonal. Eigenvalues are counted with multiplicity.
CurvatureReport scal_ambient(const MetricFamily& family, const Spectrum& s, double metric_scale = 1.0);
CurvatureReport scal_normalized(const MetricFamily& family, const Spectrum& s, double metric_scale = 1.0);
CurvatureReport scal(const MetricFamily& family, const Spectrum& s, Convention convention,
                     double metric_scale = 1.0);

/// Normalized curvature of the WY metric, (n^2 - 1)(n^2 - 2)/4, from the
/// closed form rather than the h-sum.
CurvatureReport wy_constant(std::size_t n);

/// Closed-form normalized curvature r_f(a) of a 2x2 state with eigenvalues
/// ((1 + a)/2, (1 - a)/2). Throws DomainError for |a| >= 1.
double andai_r(const MetricFamily& family, double a);
CurvatureReport andai_report(const MetricFamily& family, double a);

} // namespace schurcurv
