#pragma once

#include <string>

namespace schurcurv {

/// The Amari exponent p (alpha = 1 - 2/p), with p = +infinity as its own
/// value rather than a float. p = 0 is never representable.
class Exponent {
public:
    static Exponent finite(double p);
    static Exponent infinity() { return Exponent(true, 0.0); }
    static Exponent from_alpha(double alpha);

    bool is_infinite() const { return infinite_; }
    /// +inf for the infinite exponent.
    double value() const;
    /// 1/p, which is 0 at infinity.
    double reciprocal() const { return infinite_ ? 0.0 : 1.0 / p_; }
    /// Hoelder conjugate: 1/p + 1/p~ = 1, with 1 <-> infinity.
    Exponent conjugate() const;
    double alpha() const { return 1.0 - 2.0 * reciprocal(); }

    /// "inf" or the shortest round-trip decimal of p.
    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
    }

private:
    Exponent(bool infinite, double p) : infinite_(infinite), p_(p) {}

    bool infinite_;
    double p_;
};

/// Parses "inf", "infinity", a decimal, or an exact "a/b" ratio.
Exponent parse_exponent(const std::string& text);

} // namespace schurcurv
