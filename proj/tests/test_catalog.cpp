#include <string>

#include "bargraph/catalog.hpp"
#include "doctest.h"

using namespace bargraph;
using namespace bargraph::catalog;
using series::Ring;
using TS = series::TruncatedSeries;

namespace {

int cap_for(const GfSpec& g, int base) { return g.caps(base, g.default_param).s > 0 ? base - 2 : base; }

std::vector<std::optional<int>> params_of(const GfSpec& g) {
    std::vector<std::optional<int>> out{std::nullopt};
    for (int p : g.test_params) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("B(z,z) coefficients") {
    auto bz = to_z(expand("B", 8));
    const long expected[] = {0, 0, 1, 2, 5, 13, 35, 97, 275};
    for (int n = 0; n <= 8; ++n) CHECK(bz.coeff({0, 0, n, 0}) == expected[n]);
}

TEST_CASE("every entry agrees across routes and with the oracle") {
    for (const auto& g : registry()) {
        const int cap = cap_for(g, 10);
        for (auto p : params_of(g)) {
            auto rep = cross_route(g.id, cap, p);
            CHECK_MESSAGE(rep.ok(), rep.str());
            auto o = oracle_compare(g.id, cap, p);
            CHECK_MESSAGE(o.ok(), o.str());
            CHECK(o.terms > 0);
        }
    }
}

TEST_CASE("printed errata are reported with their first difference") {
    for (int l = 1; l <= 4; ++l) {
        auto rep = cross_route("v_l", 8, l);
        REQUIRE(rep.errata().size() == 1);
        CHECK(rep.errata()[0]->route == "printed-quadratic");
        CHECK(rep.errata()[0]->detail.find("first difference") != std::string::npos);
    }
    auto oh = cross_route("oh_eh", 8);
    REQUIRE(oh.errata().size() == 1);
    CHECK(oh.errata()[0]->route == "printed-radical");
    CHECK(oh.str().find("ERRATUM") != std::string::npos);
    for (const char* id : {"B", "stair", "uc", "xfd", "hs", "fd", "iuc", "B_sym", "B_WA", "B_SA", "K"}) {
        CHECK_MESSAGE(cross_route(id, 10).errata().empty(), id);
    }
}

TEST_CASE("specialization collapse") {
    const int cap = 9;
    const TS b = expand("B", cap);
    for (const auto& g : registry()) {
        if (g.source != Source::Bargraphs || g.markers == "-") continue;
        auto s = expand(g.id, cap);
        s = series::specialize(s, series::Var::t, 1);
        s = series::specialize(s, series::Var::s, 1);
        auto flat = s.map_exponents([](const series::Exponents& e) { return series::Exponents{0, 0, e.x, e.y}; },
                                    {cap, 0, 0});
        CHECK_MESSAGE(flat == b, g.id);
    }
}

TEST_CASE("sum collapse on the joint dr/df entry") {
    auto joint = expand("dr_df_joint", 8);
    auto dr = series::specialize(joint, series::Var::s, 1)
                  .map_exponents([](const series::Exponents& e) { return series::Exponents{e.t, 0, e.x, e.y}; },
                                 {8, 8, 0});
    CHECK(dr == expand("dr", 8));
}

TEST_CASE("ch_1 coincides with uc") { CHECK(expand("ch_h", 10, 1) == expand("uc", 10)); }

TEST_CASE("identities hold at cap 12") {
    for (const auto& i : identities()) {
        auto rep = check_identity(i.id, 12);
        CHECK_MESSAGE(rep.ok, rep.str());
    }
    CHECK_THROWS_AS(check_identity("nope", 4), UnknownId);
}

TEST_CASE("first descent recurrence") {
    auto rep = check_fd_recurrence(12);
    CHECK(rep.ok());
    CHECK(rep.checked == 66);
}

TEST_CASE("corner marker convention") {
    // t marks DH and s marks UH; the swapped reading disagrees with brute force
    const int cap = 8;
    auto joint = expand("corners_joint", cap);
    auto brute = oracle_series("corners_joint", cap);
    CHECK(joint == brute);
    auto swapped = joint.map_exponents(
        [](const series::Exponents& e) { return series::Exponents{e.s, e.t, e.x, e.y}; }, joint.caps());
    CHECK_FALSE(swapped == brute);
}

TEST_CASE("literal odd/even system disagrees with brute force") {
    const int cap = 8;
    Ring r({cap, cap, cap});
    auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
    auto v = series::solve_fixed_point(
        [&](const std::vector<TS>& u) {
            return std::vector<TS>{(1 + y * (u[1] - 1)) * (1 + t * x * u[0]), (1 + y * (u[0] - 1)) * (1 + s * y * u[1])};
        },
        {r.one(), r.one()});
    auto literal = y * (v[0] - 1);
    auto brute = oracle_series("oh_eh", cap);
    CHECK_FALSE(literal == brute);
    CHECK(expand("oh_eh", cap) == brute);
}

TEST_CASE("parameters and errors") {
    CHECK_THROWS_AS(find("nope"), UnknownId);
    CHECK_THROWS_AS(expand("nope", 4), UnknownId);
    CHECK_THROWS_AS(expand("B", 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand("v_l", 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(expand("total_corners", 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(oracle_series("B", 17), paths::BudgetExceeded);
    CHECK(resolve_param(find("ch_h"), std::nullopt) == 1);
    CHECK(resolve_param(find("P_h"), std::nullopt) == 0);
}

TEST_CASE("total corners variant adds the bottom corners") {
    auto base = expand("total_corners", 8, 0);
    auto poly = expand("total_corners", 8, 1);
    auto shifted = base.map_exponents(
        [](const series::Exponents& e) { return series::Exponents{e.t + 2, e.s, e.x, e.y}; }, base.caps());
    CHECK(poly == shifted);
}

TEST_CASE("area continued fraction at cap 8") {
    auto rep = cross_route("area", 8);
    CHECK(rep.ok());
    CHECK(oracle_compare("area", 8).ok());
}

TEST_CASE("catalog listing") {
    auto text = list_text();
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == registry().size());
    CHECK(text.find("oh_eh | t:oh s:eh | functional-equation,closed-radical |") != std::string::npos);
}
