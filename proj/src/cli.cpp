#include "schurcurv/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurcurv/dittmann.hpp"
#include "schurcurv/error.hpp"
#include "schurcurv/exponent.hpp"
#include "schurcurv/matrix_alpha.hpp"
#include "schurcurv/metric_family.hpp"
#include "schurcurv/parse.hpp"
#include "schurcurv/report_json.hpp"
#include "schurcurv/schur_lab.hpp"
#include "schurcurv/simplex_alpha.hpp"

namespace schurcurv {

namespace {

using nlohmann::json;

constexpr const char* kOutputDirEnv = "SCHURCURV_OUTPUT_DIR";

/// Relative output paths are resolved against $SCHURCURV_OUTPUT_DIR when set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
            p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    const auto path = resolve_output(out_path);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw DomainError("cannot open output file " + path.string());
    file << text;
}

std::string csv(const char* header, const std::vector<std::pair<double, double>>& rows) {
    std::string s = std::string(header) + "\n";
    for (const auto& [x, y] : rows)
        s += format_double(x) + "," + format_double(y) + "\n";
    return s;
}

json envelope(const std::string& command, json config) {
    return json{{"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

MetricFamily parse_metric(const std::string& selector) {
    if (selector == "sld")
        return MetricFamily::sld();
    if (selector == "bkm")
        return MetricFamily::bkm();
    if (selector == "wy")
        return MetricFamily::wy();
    if (selector.rfind("wyd:", 0) == 0) {
        const Exponent p = parse_exponent(selector.substr(4));
        if (!is_admissible(p))
            throw DomainError("wyd:" + p.to_string() + " is not operator monotone (p must lie in (-inf,-1] U [1/2,inf])");
        return MetricFamily::wyd(p);
    }
    throw DomainError("unknown metric '" + selector + "' (expected sld, bkm, wy or wyd:<p>)");
}

Convention parse_convention(const std::string& s) {
    if (s == "ambient")
        return Convention::ambient;
    if (s == "normalized")
        return Convention::normalized;
    throw DomainError("convention must be ambient, normalized or both");
}

std::vector<double> andai_curve(const MetricFamily& family, const GridSpec& grid) {
    if (!(grid.min > -1.0 && grid.max < 1.0))
        throw DomainError("Andai grid must lie inside (-1, 1)");
    std::vector<double> r;
    for (double a : grid.points())
        r.push_back(andai_r(family, a));
    return r;
}

std::string andai_csv(const MetricFamily& family, const GridSpec& grid) {
    const auto a = grid.points();
    const auto r = andai_curve(family, grid);
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < a.size(); ++i)
        rows.emplace_back(a[i], r[i]);
    return csv("a,r", rows);
}

struct TargetSpec {
    Target target;
    double default_tol;
    std::vector<std::pair<std::string, MajorizationPair>> probes;
};

TargetSpec parse_target(const std::string& spec, std::size_t n) {
    if (spec == "entropy")
        return {entropy_target(), 1e-9, {}};
    if (spec == "neg-entropy")
        return {negative_entropy_target(), 1e-9, {}};
    if (spec.rfind("spectrum:", 0) == 0) {
        TargetSpec t{spectral_curvature_target(parse_metric(spec.substr(9))), 1e-9, {}};
        if (n == 3)
            t.probes.emplace_back("sld-counterexample-pair", sld_counterexample_pair());
        if (n == 2) {
            std::size_t i = 0;
            for (auto& pair : two_level_probe_grid(1000))
                t.probes.emplace_back("two-level-grid-" + std::to_string(i++), std::move(pair));
        }
        return t;
    }
    if (spec.rfind("simplex:", 0) == 0) {
        const Exponent p = parse_exponent(spec.substr(8));
        if (n == 2)
            return {plane_curvature_target(p), 1e-9, {}};
        return {simplex_curvature_target(p), 1e-6, {}};
    }
    if (spec.rfind("plane:", 0) == 0) {
        if (n != 2)
            throw DomainError("plane targets require --n 2");
        return {plane_curvature_target(parse_exponent(spec.substr(6))), 1e-9, {}};
    }
    throw DomainError("unknown target '" + spec +
                      "' (expected entropy, neg-entropy, spectrum:<metric>, simplex:<p>, plane:<p>)");
}

// Conjecture evidence. Nothing here is asserted; expectations are recorded
// next to the observations.

const char* expected_simplex_direction(const Exponent& p) {
    if (p.is_infinite() || p.value() > 2.0)
        return "increasing";
    if (p.value() > 1.0 && p.value() < 2.0)
        return "decreasing";
    return "exploratory";
}

std::string monotone_direction(const std::vector<double>& values, double tol) {
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        const double t = tol * (1.0 + std::abs(values[i]));
        if (d < -t)
            up = false;
        if (d > t)
            down = false;
    }
    if (up && down)
        return "constant";
    if (up)
        return "increasing";
    if (down)
        return "decreasing";
    return "neither";
}

json evidence_report(std::size_t samples, std::uint64_t seed) {
    json report = envelope("evidence", json{{"samples", samples}, {"seed", seed}});

    json simplex = json::array();
    for (const auto& p : {Exponent::finite(1.5), Exponent::finite(3.0), Exponent::infinity()})
        for (std::size_t n : {3u, 4u}) {
            ClassifyOptions opt;
            opt.n = n;
            opt.samples = samples;
            opt.seed = seed;
            opt.tol = 1e-6;
            const auto verdict = classify(simplex_curvature_target(p), opt);
            const std::string expected = expected_simplex_direction(p);
            simplex.push_back(json{{"p", p.to_string()},
                                   {"n", n},
                                   {"expected", expected},
                                   {"agrees", expected == to_string(verdict.classification)},
                                   {"verdict", to_json(verdict)}});
        }
    report["simplex"] = simplex;

    json radial = json::array();
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    for (const auto& p : {Exponent::finite(1.5), Exponent::finite(3.0), Exponent::finite(10.0), Exponent::infinity()}) {
        std::vector<double> radii;
        std::vector<double> values;
        for (int k = 0; k < 100; ++k) {
            const double s = 0.9 * k / 99.0;
            radii.push_back(s);
            values.push_back(matrix_scal_fd(p, BlochPoint({s * inv_sqrt3, s * inv_sqrt3, s * inv_sqrt3})));
        }
        // More mixed means smaller |r|: Schur-increasing is decreasing in |r|.
        const std::string schur = expected_simplex_direction(p);
        const std::string expected = schur == "increasing" ? "decreasing" : "increasing";
        const std::string observed = monotone_direction(values, 1e-6);
        radial.push_back(json{{"p", p.to_string()},
                              {"expected_in_radius", expected},
                              {"observed_in_radius", observed},
                              {"agrees", expected == observed},
                              {"radii", radii},
                              {"scal", values}});
    }
    report["matrix_radial"] = radial;

    json wyd = json::array();
    const GridSpec grid{-0.99, 0.99, 199};
    for (int k = 1; k <= 6; ++k) {
        const Exponent p = Exponent::finite(1.0 + std::pow(10.0, -k));
        const MetricFamily family = MetricFamily::wyd(p);
        ClassifyOptions opt;
        opt.n = 3;
        opt.samples = samples;
        opt.seed = seed;
        opt.mandatory_probes.emplace_back("sld-counterexample-pair", sld_counterexample_pair());
        const auto verdict = classify(spectral_curvature_target(family), opt);
        const auto r = andai_curve(family, grid);
        double max_second_difference = -INFINITY;
        for (std::size_t i = 1; i + 1 < r.size(); ++i)
            max_second_difference = std::max(max_second_difference, r[i - 1] - 2.0 * r[i] + r[i + 1]);
        const auto argmax = static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
        wyd.push_back(json{{"p", p.to_string()},
                           {"n3_verdict", to_json(verdict)},
                           {"andai_max_second_difference", max_second_difference},
                           {"andai_argmax_a", grid.points()[argmax]}});
    }
    report["wyd_scan"] = wyd;

    ClassifyOptions opt;
    opt.n = 3;
    opt.samples = samples;
    opt.seed = seed;
    report["bkm_n3"] = to_json(classify(spectral_curvature_target(MetricFamily::bkm()), opt));
    return report;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalar curvature of alpha-geometries and monotone metrics, and Schur-monotonicity tests"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string out_path;

    // plane
    auto* plane = app.add_subcommand("plane", "plane curvature c_p(theta) as CSV (theta,c)");
    std::string plane_p;
    std::string plane_grid;
    plane->add_option("--p", plane_p, "exponent p (number, a/b or inf)")->required();
    plane->add_option("--grid", plane_grid, "theta grid min:max:count inside (0, pi/2)")->required();
    plane->add_option("--out", out_path, "output file (default stdout)");

    // curvature
    auto* curvature = app.add_subcommand("curvature", "spectral scalar curvature of a monotone metric (JSON)");
    std::string metric_sel;
    std::string eigs;
    std::string convention = "ambient";
    std::string metric_scale = "1";
    curvature->add_option("--metric", metric_sel, "sld | bkm | wy | wyd:<p>")->required();
    curvature->add_option("--eigs", eigs, "comma-separated eigenvalues, a/b allowed")->required();
    curvature->add_option("--convention", convention, "ambient | normalized | both");
    curvature->add_option("--metric-scale", metric_scale, "constant factor applied to the metric (1/4: Bures)");
    curvature->add_option("--out", out_path, "output file (default stdout)");

    // andai
    auto* andai = app.add_subcommand("andai", "2x2 normalized curvature r(a) as CSV (a,r)");
    std::string andai_metric;
    std::string andai_p;
    std::string andai_grid;
    andai->add_option("--metric", andai_metric, "sld | bkm | wy | wyd:<p>");
    andai->add_option("--p", andai_p, "WYD exponent (shorthand for --metric wyd:<p>)");
    andai->add_option("--grid", andai_grid, "a grid min:max:count inside (-1, 1)")->required();
    andai->add_option("--out", out_path, "output file (default stdout)");

    // figures
    auto* figures = app.add_subcommand("figures", "write r_p CSVs for p = 1 + 1e-1 and p = 1 + 1e-6");
    std::string figure_dir = ".";
    figures->add_option("--out-dir", figure_dir, "directory for figure1.csv and figure2.csv");

    // schur
    auto* schur = app.add_subcommand("schur", "empirical Schur-monotonicity verdict (JSON)");
    std::string target;
    std::size_t schur_n = 3;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::string tol_text;
    schur->add_option("--target", target, "entropy | neg-entropy | spectrum:<metric> | simplex:<p> | plane:<p>")
        ->required();
    schur->add_option("--n", schur_n, "dimension")->check(CLI::Range(2, 64));
    schur->add_option("--samples", samples, "random pairs")->check(CLI::Range(1, 100000000));
    schur->add_option("--seed", seed, "seed");
    schur->add_option("--tol", tol_text, "relative tolerance (default 1e-9, 1e-6 for simplex targets)");
    schur->add_option("--out", out_path, "output file (default stdout)");

    // simplex
    auto* simplex = app.add_subcommand("simplex", "finite-difference alpha-geometry curvature on the simplex");
    std::string simplex_p = "2";
    std::size_t simplex_n = 0;
    std::string rho_text;
    double simplex_step = 1e-4;
    simplex->add_option("--p", simplex_p, "exponent p");
    simplex->add_option("--n", simplex_n, "dimension (checked against --rho)");
    simplex->add_option("--rho", rho_text, "density vector, a/b allowed")->required();
    simplex->add_option("--step", simplex_step, "finite-difference step");
    simplex->add_option("--out", out_path, "output file (default stdout)");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "finite-difference alpha-geometry curvature on 2x2 states");
    std::string matrix_p = "2";
    std::string bloch_text;
    double matrix_step = 1e-3;
    matrix->add_option("--p", matrix_p, "exponent p");
    matrix->add_option("--bloch", bloch_text, "Bloch vector x,y,z")->required();
    matrix->add_option("--step", matrix_step, "finite-difference step");
    matrix->add_option("--out", out_path, "output file (default stdout)");

    // evidence
    auto* evidence = app.add_subcommand("evidence", "conjecture evidence report (JSON, non-asserting)");
    std::size_t evidence_samples = 300;
    std::uint64_t evidence_seed = 0;
    evidence->add_option("--samples", evidence_samples, "random pairs per verdict")->check(CLI::Range(1, 10000000));
    evidence->add_option("--seed", evidence_seed, "seed");
    evidence->add_option("--out", out_path, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (plane->parsed()) {
        const Exponent p = parse_exponent(plane_p);
        const GridSpec grid = parse_grid(plane_grid);
        std::vector<std::pair<double, double>> rows;
        for (double theta : grid.points())
            rows.emplace_back(theta, plane_curvature(p, theta));
        emit(csv("theta,c", rows), out_path, out);
        return 0;
    }

    if (curvature->parsed()) {
        const MetricFamily family = parse_metric(metric_sel);
        const Spectrum spectrum(parse_number_list(eigs));
        const double scale = parse_number(metric_scale);
        std::vector<Convention> conventions;
        if (convention == "both")
            conventions = {Convention::ambient, Convention::normalized};
        else
            conventions = {parse_convention(convention)};
        json doc = envelope("curvature", json{{"metric", family.id()},
                                              {"eigs", eigs},
                                              {"convention", convention},
                                              {"metric_scale", scale}});
        json reports = json::array();
        for (auto c : conventions)
            reports.push_back(to_json(scal(family, spectrum, c, scale)));
        doc["reports"] = reports;
        emit(doc.dump(2) + "\n", out_path, out);
        return 0;
    }

    if (andai->parsed()) {
        if (andai_metric.empty() == andai_p.empty())
            throw DomainError("andai needs exactly one of --metric or --p");
        const MetricFamily family = parse_metric(andai_metric.empty() ? "wyd:" + andai_p : andai_metric);
        emit(andai_csv(family, parse_grid(andai_grid)), out_path, out);
        return 0;
    }

    if (figures->parsed()) {
        const GridSpec grid{-0.99, 0.99, 199};
        const std::filesystem::path dir(figure_dir);
        emit(andai_csv(MetricFamily::wyd(Exponent::finite(1.0 + 1e-1)), grid), (dir / "figure1.csv").string(), out);
        emit(andai_csv(MetricFamily::wyd(Exponent::finite(1.0 + 1e-6)), grid), (dir / "figure2.csv").string(), out);
        return 0;
    }

    if (schur->parsed()) {
        TargetSpec spec = parse_target(target, schur_n);
        ClassifyOptions opt;
        opt.n = schur_n;
        opt.samples = samples;
        opt.seed = seed;
        opt.tol = tol_text.empty() ? spec.default_tol : parse_number(tol_text);
        opt.mandatory_probes = std::move(spec.probes);
        const SchurVerdict verdict = classify(spec.target, opt);
        json doc = envelope("schur", json{{"target", target},
                                          {"n", schur_n},
                                          {"samples", samples},
                                          {"seed", seed},
                                          {"tol", opt.tol}});
        doc["verdict"] = to_json(verdict);
        emit(doc.dump(2) + "\n", out_path, out);
        return 0;
    }

    if (simplex->parsed()) {
        const Exponent p = parse_exponent(simplex_p);
        const DensityVector rho(parse_number_list(rho_text));
        if (simplex_n != 0 && simplex_n != rho.size())
            throw DomainError("--n does not match the length of --rho");
        const double value = simplex_scal_fd(p, SimplexChart::from_density(rho), simplex_step);
        json doc = envelope("simplex", json{{"p", p.to_string()}, {"rho", rho.vector()}, {"step", simplex_step}});
        doc["scal"] = value;
        doc["formula_path"] = "finite-difference";
        emit(doc.dump(2) + "\n", out_path, out);
        return 0;
    }

    if (matrix->parsed()) {
        const Exponent p = parse_exponent(matrix_p);
        const auto r = parse_number_list(bloch_text);
        if (r.size() != 3)
            throw DomainError("--bloch needs three components");
        const BlochPoint point({r[0], r[1], r[2]});
        const double value = matrix_scal_fd(p, point, matrix_step);
        json doc = envelope("matrix", json{{"p", p.to_string()}, {"bloch", r}, {"step", matrix_step}});
        doc["scal"] = value;
        doc["formula_path"] = "finite-difference";
        emit(doc.dump(2) + "\n", out_path, out);
        return 0;
    }

    if (evidence->parsed()) {
        emit(evidence_report(evidence_samples, evidence_seed).dump(2) + "\n", out_path, out);
        return 0;
    }
    return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

} // namespace schurcurv
