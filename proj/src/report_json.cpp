#include "schurcurv/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace schurcurv {

using nlohmann::json;

json to_json(const CurvatureReport& report) {
    return json{
        {"value", report.value},
        {"convention", to_string(report.convention)},
        {"metric", report.metric_id},
        {"spectrum", report.spectrum},
        {"formula_path", to_string(report.formula_path)},
        {"metric_scale", report.metric_scale},
    };
}

json to_json(const ProbeRecord& record) {
    json j{
        {"more_mixed", record.pair.more_mixed.vector()},
        {"less_mixed", record.pair.less_mixed.vector()},
        {"f_more_mixed", record.f_more_mixed},
        {"f_less_mixed", record.f_less_mixed},
        {"delta", record.delta},
        {"tolerance", record.tolerance},
        {"contribution", to_string(record.contribution)},
        {"permutation", record.permutation},
    };
    if (!record.label.empty())
        j["label"] = record.label;
    return j;
}

json to_json(const SchurVerdict& verdict) {
    json counterexamples = json::array();
    for (const auto& r : verdict.counterexamples)
        counterexamples.push_back(to_json(r));
    json probes = json::array();
    for (const auto& r : verdict.probes)
        probes.push_back(to_json(r));
    return json{
        {"classification", to_string(verdict.classification)},
        {"samples_tested", verdict.samples_tested},
        {"strict", verdict.strict},
        {"increasing_violations", verdict.increasing_violations},
        {"decreasing_violations", verdict.decreasing_violations},
        {"counterexamples", counterexamples},
        {"probes", probes},
    };
}

namespace {

// Independent re-check of the "more mixed" relation from raw JSON arrays.
bool prefix_dominated(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size())
        return false;
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy + 1e-12)
            return false;
    }
    return true;
}

} // namespace

std::string verdict_consistency_problem(const json& v) {
    for (const char* key : {"classification", "samples_tested", "strict", "increasing_violations",
                            "decreasing_violations", "counterexamples", "probes"})
        if (!v.contains(key))
            return std::string("missing key ") + key;

    const auto cls = v["classification"].get<std::string>();
    const auto inc = v["increasing_violations"].get<std::size_t>();
    const auto dec = v["decreasing_violations"].get<std::size_t>();
    const auto samples = v["samples_tested"].get<std::size_t>();
    if (inc + dec > samples)
        return "more violations than samples";
    if (cls == "increasing" && inc != 0)
        return "increasing verdict with increasing violations";
    if (cls == "decreasing" && dec != 0)
        return "decreasing verdict with decreasing violations";
    if (cls == "inconclusive" && (inc != 0 || dec != 0))
        return "inconclusive verdict with violations";
    if (v["strict"].get<bool>() && cls != "increasing" && cls != "decreasing")
        return "strictness claimed for a non-monotone verdict";

    bool has_inc = false;
    bool has_dec = false;
    for (const auto& c : v["counterexamples"]) {
        const auto more = c["more_mixed"].get<std::vector<double>>();
        const auto less = c["less_mixed"].get<std::vector<double>>();
        if (!prefix_dominated(more, less))
            return "counterexample pair is not ordered by majorization";
        const double delta = c["f_more_mixed"].get<double>() - c["f_less_mixed"].get<double>();
        const double tol = c["tolerance"].get<double>();
        if (delta < -tol)
            has_inc = true;
        else if (delta > tol)
            has_dec = true;
        else
            return "counterexample does not violate by more than its tolerance";
    }
    if (cls == "neither" && !(has_inc && has_dec))
        return "neither verdict lacks counterexamples in both directions";
    if (cls != "neither" && !v["counterexamples"].empty())
        return "counterexamples attached to a monotone verdict";
    return {};
}

} // namespace schurcurv
