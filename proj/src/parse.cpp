#include "schurcurv/parse.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "schurcurv/error.hpp"

namespace schurcurv {

namespace {

double parse_decimal(std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last)
        throw DomainError("malformed number '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

double parse_number(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_decimal(text);
    const double num = parse_decimal(trim(text.substr(0, slash)));
    const double den = parse_decimal(trim(text.substr(slash + 1)));
    if (den == 0.0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out(count);
    // Mirrored weights make symmetric grids exactly symmetric.
    const auto last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double w_max = static_cast<double>(i) / last;
        const double w_min = static_cast<double>(count - 1 - i) / last;
        out[i] = min * w_min + max * w_max;
    }
    return out;
}

GridSpec parse_grid(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw DomainError("grid must be min:max:count");
    GridSpec g{};
    g.min = parse_number(text.substr(0, c1));
    g.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double count = parse_number(text.substr(c2 + 1));
    if (!(count >= 2.0) || count != std::floor(count))
        throw DomainError("grid count must be an integer >= 2");
    if (!(g.min < g.max))
        throw DomainError("grid requires min < max");
    g.count = static_cast<std::size_t>(count);
    return g;
}

} // namespace schurcurv
