#include "schurcurv/exponent.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "schurcurv/error.hpp"
#include "schurcurv/parse.hpp"

namespace schurcurv {

Exponent Exponent::finite(double p) {
    if (p == 0.0)
        throw DomainError("undefined parameter: p = 0");
    if (std::isnan(p))
        throw DomainError("undefined parameter: p is NaN");
    if (std::isinf(p))
        return infinity();
    return Exponent(false, p);
}

Exponent Exponent::from_alpha(double alpha) {
    if (alpha == 1.0)
        return infinity();
    return finite(2.0 / (1.0 - alpha));
}

double Exponent::value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

Exponent Exponent::conjugate() const {
    if (infinite_)
        return finite(1.0);
    if (p_ == 1.0)
        return infinity();
    return finite(p_ / (p_ - 1.0));
}

std::string Exponent::to_string() const {
    if (infinite_)
        return "inf";
    return format_double(p_);
}

Exponent parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "+inf" || text == "Inf")
        return Exponent::infinity();
    return Exponent::finite(parse_number(text));
}

} // namespace schurcurv
