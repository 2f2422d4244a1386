#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schurcurv {

/// Locale-independent number parsing. Accepts decimals ("0.25", "1e-3") and
/// exact ratios of decimals ("2/9"), where the division is the only rounding
/// step. Throws DomainError on malformed input.
double parse_number(std::string_view text);

/// Comma-separated list of parse_number tokens.
std::vector<double> parse_number_list(std::string_view text);

/// Shortest decimal that round-trips to the same double ('.' separator).
std::string format_double(double x);

struct GridSpec {
    double min;
    double max;
    std::size_t count;

    /// count points from min to max inclusive.
    std::vector<double> points() const;
};

/// "min:max:count" with count >= 2 and min < max.
GridSpec parse_grid(std::string_view text);

} // namespace schurcurv
