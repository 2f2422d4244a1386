#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <set>

#include "schurcurv/error.hpp"
#include "schurcurv/exponent.hpp"
#include "schurcurv/parse.hpp"
#include "schurcurv/rng.hpp"
#include "schurcurv/state.hpp"

using namespace schurcurv;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("exponent p = 0 is undefined", "[exponent]") {
    REQUIRE_THROWS_WITH(Exponent::finite(0.0), ContainsSubstring("undefined parameter"));
    REQUIRE_THROWS_AS(Exponent::finite(std::nan("")), DomainError);
}

TEST_CASE("exponent conjugates and alpha", "[exponent]") {
    CHECK(Exponent::finite(2.0).conjugate() == Exponent::finite(2.0));
    CHECK(Exponent::finite(1.0).conjugate().is_infinite());
    CHECK(Exponent::infinity().conjugate() == Exponent::finite(1.0));
    CHECK_THAT(Exponent::finite(3.0).conjugate().value(), WithinRel(1.5, 1e-15));
    CHECK_THAT(Exponent::finite(-1.0).conjugate().value(), WithinRel(0.5, 1e-15));
    CHECK(Exponent::infinity().alpha() == 1.0);
    CHECK(Exponent::finite(2.0).alpha() == 0.0);
    CHECK(Exponent::from_alpha(0.0) == Exponent::finite(2.0));
    CHECK(Exponent::from_alpha(1.0).is_infinite());
}

TEST_CASE("exponent conjugate is an involution", "[exponent][property]") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double p = 0.5 + 20.0 * rng.uniform();
        if (p == 1.0)
            continue;
        const Exponent e = Exponent::finite(p);
        CHECK_THAT(1.0 / p + e.conjugate().reciprocal(), WithinAbs(1.0, 1e-14));
        CHECK_THAT(e.conjugate().conjugate().value(), WithinRel(p, 1e-12));
    }
}

TEST_CASE("exponent parsing", "[exponent][parse]") {
    CHECK(parse_exponent("inf").is_infinite());
    CHECK(parse_exponent("infinity").is_infinite());
    CHECK(parse_exponent("3/2") == Exponent::finite(1.5));
    CHECK(parse_exponent("-10").value() == -10.0);
    CHECK(parse_exponent("inf").to_string() == "inf");
    CHECK(Exponent::finite(1.1).to_string() == "1.1");
    REQUIRE_THROWS_AS(parse_exponent("0"), DomainError);
    REQUIRE_THROWS_AS(parse_exponent("abc"), DomainError);
}

TEST_CASE("rational tokens are divided once", "[parse]") {
    CHECK(parse_number("2/9") == 2.0 / 9.0);
    CHECK(parse_number("1/6") == 1.0 / 6.0);
    CHECK(parse_number("0.25") == 0.25);
    CHECK(parse_number("1e-3") == 1e-3);
    CHECK(parse_number("-3") == -3.0);
    CHECK(parse_number(" 2 / 9 ") == 2.0 / 9.0);
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.2.3", "2/9x"})
        REQUIRE_THROWS_AS(parse_number(bad), DomainError);
}

TEST_CASE("number lists", "[parse]") {
    const auto v = parse_number_list("2/9,1/9,2/3");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 2.0 / 9.0);
    CHECK(v[2] == 2.0 / 3.0);
    REQUIRE_THROWS_AS(parse_number_list("1,,2"), DomainError);
    REQUIRE_THROWS_AS(parse_number_list(""), DomainError);
}

TEST_CASE("format_double round-trips", "[parse][property]") {
    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const double x = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.below(40)) - 20);
        const std::string s = format_double(x);
        CHECK(s.find(',') == std::string::npos);
        CHECK(parse_number(s) == x);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("grid specs", "[parse]") {
    const GridSpec g = parse_grid("-0.99:0.99:199");
    const auto pts = g.points();
    REQUIRE(pts.size() == 199);
    CHECK(pts.front() == -0.99);
    CHECK(pts.back() == 0.99);
    CHECK(pts[99] == 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i] == -pts[pts.size() - 1 - i]);
    REQUIRE_THROWS_AS(parse_grid(""), DomainError);
    REQUIRE_THROWS_AS(parse_grid("0:1:1"), DomainError);
    REQUIRE_THROWS_AS(parse_grid("1:0:5"), DomainError);
    REQUIRE_THROWS_AS(parse_grid("0:1"), DomainError);
}

TEST_CASE("density vector invariants", "[state]") {
    CHECK_NOTHROW(DensityVector({0.5, 0.5}));
    REQUIRE_THROWS_AS(DensityVector({1.0}), DomainError);
    REQUIRE_THROWS_AS(DensityVector({0.5, 0.6}), DomainError);
    REQUIRE_THROWS_AS(DensityVector({1.0, 0.0}), DomainError);
    REQUIRE_THROWS_AS(DensityVector({1.5, -0.5}), DomainError);
    CHECK_NOTHROW(DensityVector({0.5 + 5e-13, 0.5}));
    REQUIRE_THROWS_AS(DensityVector({0.5 + 5e-12, 0.5}), DomainError);
    const auto u = DensityVector::uniform(4);
    for (double x : u.entries())
        CHECK(x == 0.25);
    CHECK(DensityVector({0.2, 0.5, 0.3}).sorted_decreasing() == std::vector<double>{0.5, 0.3, 0.2});
}

TEST_CASE("spectrum errors name the problem", "[state]") {
    REQUIRE_THROWS_WITH(Spectrum({0.5, 0.6}), ContainsSubstring("not a density spectrum"));
    REQUIRE_THROWS_WITH(Spectrum({1.0, 0.0}), ContainsSubstring("not a density spectrum"));
    const Spectrum s({2.0 / 9.0, 1.0 / 9.0, 2.0 / 3.0});
    CHECK(s.size() == 3);
    CHECK(s.as_density().size() == 3);
}

TEST_CASE("rng is deterministic and in range", "[rng]") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform() == b.uniform());
    Rng r(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        CHECK((u >= 0.0 && u < 1.0));
        CHECK(r.below(7) < 7);
        CHECK(r.exponential() >= 0.0);
    }
    CHECK(derive_seed(0, 0) != derive_seed(0, 1));
    CHECK(derive_seed(1, 0) != derive_seed(0, 1));
}

TEST_CASE("permutations and simplex draws", "[rng][property]") {
    Rng r(3);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 2 + r.below(6);
        const auto perm = r.permutation(n);
        CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == n);
        CHECK(*std::max_element(perm.begin(), perm.end()) == n - 1);
        const auto s = r.simplex(n);
        double sum = 0.0;
        for (double x : s) {
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK_THAT(sum, WithinAbs(1.0, 1e-14));
    }
}

TEST_CASE("flat Dirichlet has uniform marginal mean", "[rng]") {
    Rng r(9);
    double first = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i)
        first += r.simplex(4)[0];
    CHECK_THAT(first / draws, WithinAbs(0.25, 0.01));
}
