#include <map>
#include <random>

#include "bargraph/enumerate.hpp"
#include "bargraph/series.hpp"
#include "doctest.h"

using namespace bargraph::series;

namespace {

TruncatedSeries to_z(const TruncatedSeries& s, int cap) {
    return s.map_exponents([](const Exponents& e) { return Exponents{e.t, e.s, e.x + e.y, 0}; },
                           Caps{cap, s.caps().t, s.caps().s});
}

TruncatedSeries random_series(std::mt19937& rng, Caps caps) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-5, 5), den(1, 3);
    SeriesBuilder b(caps);
    for (int i = 0; i < 6; ++i) {
        Exponents e{deg(rng) % (caps.t + 1), deg(rng) % (caps.s + 1), deg(rng), deg(rng)};
        if (caps.admits(e)) b.add(e, Rational(coef(rng), den(rng)));
    }
    return std::move(b).build();
}

}  // namespace

TEST_CASE("basic arithmetic") {
    Ring r({6, 2, 2});
    auto x = r.x();
    CHECK((1 + x) * (1 - x) == 1 - x * x);
    CHECK(((1 + x) * (1 - x)).coeff({0, 0, 2, 0}) == -1);
    CHECK((x - x).is_zero());
    CHECK(x.pow(7).is_zero());
    CHECK(x.pow(0) == r.one());
}

TEST_CASE("z specialization of a polynomial") {
    Ring r({6, 0, 0});
    auto p = r.x() * r.y() + r.x() * r.x() * r.y();
    auto z = to_z(p, 6);
    CHECK(z.coeff({0, 0, 2, 0}) == 1);
    CHECK(z.coeff({0, 0, 3, 0}) == 1);
    CHECK(z.size() == 2);
}

TEST_CASE("substitute x -> x/(1+x) undoes x/(1-x)") {
    Ring r({10, 0, 0});
    auto x = r.x();
    auto f = x / (1 - x);
    CHECK(substitute(f, Var::x, x / (1 + x)) == x);
}

TEST_CASE("substitute rejects a unit value") {
    Ring r({4, 0, 0});
    CHECK_THROWS_AS(substitute(r.x(), Var::x, 1 + r.x()), SeriesError);
}

TEST_CASE("cap mismatch") {
    Ring a({4, 0, 0}), b({5, 0, 0});
    try {
        (void)(a.x() + b.x());
        FAIL("no throw");
    } catch (const SeriesError& e) {
        CHECK(e.kind() == SeriesError::Kind::CapMismatch);
    }
}

TEST_CASE("sqrt_series") {
    Ring r({8, 0, 0});
    CHECK(sqrt_series(r.one()) == r.one());
    auto u = r.x();
    auto s = sqrt_series(1 - 2 * u);
    // binomial series of (1-2u)^{1/2}: 1, -1, -1/2, -1/2, -5/8
    CHECK(s.coeff({0, 0, 1, 0}) == -1);
    CHECK(s.coeff({0, 0, 2, 0}) == Rational(-1, 2));
    CHECK(s.coeff({0, 0, 3, 0}) == Rational(-1, 2));
    CHECK(s.coeff({0, 0, 4, 0}) == Rational(-5, 8));
    CHECK(s * s == 1 - 2 * u);
    try {
        (void)sqrt_series(4 + u);
        FAIL("no throw");
    } catch (const SeriesError& e) {
        CHECK(e.kind() == SeriesError::Kind::BadConstantTerm);
    }
}

TEST_CASE("sqrt of the bargraph discriminant in z") {
    const int cap = 10;
    Ring r({cap, 0, 0});
    auto z = r.x();
    auto q = 1 - 2 * z - z * z;
    auto root = sqrt_series(q * q - 4 * z.pow(3));
    CHECK(root.coeff({}) == 1);
    CHECK(root.coeff({0, 0, 1, 0}) == -2);
    CHECK(root.coeff({0, 0, 2, 0}) == -1);
    CHECK(root.coeff({0, 0, 3, 0}) == -2);
    CHECK(root.coeff({0, 0, 4, 0}) == -4);
    // root = 1 - 2z - z^2 - 2z B(z), B counted by brute force
    for (int n = 2; n < cap; ++n) {
        long count = 0;
        bargraph::paths::for_each_bargraph(n, [&](const auto&) { ++count; });
        CHECK(root.coeff({0, 0, n + 1, 0}) == -2 * count);
    }
}

TEST_CASE("solve_quadratic on the bargraph equation") {
    const int cap = 12;
    Ring r({cap, 0, 0});
    auto x = r.x(), y = r.y();
    auto B = solve_quadratic({x, -(1 - x - y - x * y), x * y, 0});
    CHECK(B.is_integral());
    CHECK(x * B * B - (1 - x - y - x * y) * B + x * y == r.zero());
    auto bz = to_z(B, cap);
    const long expected[] = {0, 0, 1, 2, 5, 13, 35, 97, 275};
    for (int n = 0; n <= 8; ++n) CHECK(bz.coeff({0, 0, n, 0}) == expected[n]);
    // coefficient of x^h y^u against brute force
    for (int n = 2; n <= cap; ++n) {
        std::map<std::pair<int, int>, long> counts;
        bargraph::paths::for_each_bargraph(n, [&](const auto& w) { ++counts[{w.num_h(), w.num_u()}]; });
        for (const auto& [k, c] : counts) CHECK(B.coeff({0, 0, k.first, k.second}) == c);
    }
}

TEST_CASE("solve_quadratic errors") {
    Ring r({4, 1, 0});
    auto x = r.x();
    try {
        (void)solve_quadratic({r.zero(), r.one(), r.one(), 0});
        FAIL("no throw");
    } catch (const SeriesError& e) {
        CHECK(e.kind() == SeriesError::Kind::NoBranch);
    }
    try {
        (void)solve_quadratic({r.one(), r.zero(), -(x * x), 0});
        FAIL("no throw");
    } catch (const SeriesError& e) {
        CHECK(e.kind() == SeriesError::Kind::NotConvergent);
    }
}

TEST_CASE("inverse of non-unit") {
    Ring r({4, 1, 0});
    try {
        (void)inverse(r.x());
        FAIL("no throw");
    } catch (const SeriesError& e) {
        CHECK(e.kind() == SeriesError::Kind::DivisionByNonUnit);
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(12345);
    Caps caps{5, 2, 1};
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, caps), b = random_series(rng, caps), c = random_series(rng, caps);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        auto unit = 1 + a - TruncatedSeries::constant(caps, a.constant_term());
        CHECK(unit * inverse(unit) == TruncatedSeries::constant(caps, 1));
    }
}

TEST_CASE("continued fraction depth 1") {
    // -y + y/(-tx + 1/(1-y)), truncated at the first level
    Ring r({5, 5, 0});
    auto t = r.t(), x = r.x(), y = r.y();
    auto cf = continued_fraction({{y, -t * x + inverse(1 - y)}}, 1) - y;
    // -tx + 1/(1-y) = (1 - tx(1-y)) / (1-y), so the value is y(1-y)/(1 - tx + txy) - y
    auto expected = y * (1 - y) / (1 - t * x + t * x * y) - y;
    CHECK(cf == expected);
    CHECK(cf.coeff({1, 0, 1, 1}) == 1);
    CHECK(cf.coeff({0, 0, 0, 2}) == -1);
}

TEST_CASE("continued fraction non-unit denominator") {
    Ring r({4, 0, 0});
    CHECK_THROWS_AS(continued_fraction({{r.one(), r.x()}}, 1), SeriesError);
}

TEST_CASE("divide_monomial and dump") {
    Ring r({4, 2, 0});
    auto s = r.t() * r.x() * (1 + r.y());
    auto q = divide_monomial(s, {1, 0, 1, 0});
    CHECK(q.caps() == Caps{3, 1, 0});
    CHECK(dump(q) == "0 0 0 0 1/1\n0 0 0 1 1/1\n");
    CHECK_THROWS_AS(divide_monomial(1 + s, {1, 0, 0, 0}), SeriesError);
}

TEST_CASE("first_difference") {
    Ring r({4, 0, 0});
    CHECK_FALSE(first_difference(r.x(), r.x()).has_value());
    auto d = first_difference(r.x() + r.y(), r.x());
    REQUIRE(d.has_value());
    CHECK(*d == Exponents{0, 0, 0, 1});
}

TEST_CASE("solve_fixed_point for M") {
    const int cap = 8;
    Ring r({cap, 0, 0});
    auto x = r.x(), y = r.y();
    auto sol = solve_fixed_point(
        [&](const std::vector<TruncatedSeries>& v) {
            return std::vector<TruncatedSeries>{(1 + y * (v[0] - 1)) * (1 + x * v[0])};
        },
        {r.one()});
    auto via_b = solve_quadratic({x, -(1 - x - y - x * y), x * y, 0});
    CHECK(y * (sol[0] - 1) == via_b);
}
