#include "bargraph/bijections.hpp"
#include "bargraph/enumerate.hpp"
#include "doctest.h"

using namespace bargraph;
using namespace bargraph::bijections;
using paths::Kind;

namespace {

PathWord bar(const char* w) { return PathWord::parse(w, Kind::Bargraph); }

BijectionError::Kind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const BijectionError& e) {
        return e.kind();
    }
    FAIL("no BijectionError");
    return BijectionError::Kind::InvalidInput;
}

}  // namespace

TEST_CASE("delta fixtures") {
    CHECK(delta(PathWord::parse("H", Kind::Motzkin)).str() == "UHD");
    auto m = PathWord::parse("UUHDHDHUHUHHDHUUHDDD", Kind::Motzkin);
    auto g = delta(m);
    CHECK(g.weight() == 15);
    CHECK(delta_inv(g) == m);
    CHECK(paths::stat(g, "hfc") == paths::stat(m, "hfc") + 1);
    CHECK(kind_of([] { (void)delta(PathWord::parse("", Kind::Motzkin)); }) == BijectionError::Kind::InvalidInput);
}

TEST_CASE("secondary structures") {
    const long expected[] = {1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423};
    for (int n = 0; n <= 10; ++n) CHECK(brute_force_secondary(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK(dr0_to_secondary(bar("UHD")).str() == ".");
    CHECK(dr0_to_secondary(bar("UHUHDD")).str() == "(.)");
    CHECK(dr0_to_secondary(bar("UHUHHDD")).str() == "(..)");
    CHECK(dr0_to_secondary(bar("UHHHD")).str() == "...");
    CHECK(secondary_to_dr0(SecondaryStructure::parse("(..)")).str() == "UHUHHDD");
    CHECK(secondary_to_dr0(SecondaryStructure::parse("(.).")).str() == "UHUHDHD");
    CHECK(kind_of([] { (void)dr0_to_secondary(bar("UUHDD")); }) == BijectionError::Kind::HasDoubleRise);
    CHECK_FALSE((SecondaryStructure{4, {{1, 3}, {2, 4}}}.valid()));
    CHECK_FALSE((SecondaryStructure{3, {{1, 2}}}.valid()));
    CHECK_THROWS_AS(SecondaryStructure::parse("(()"), BijectionError);
}

TEST_CASE("first descent split") {
    auto a = fd_split_map(bar("UUUHHHDDD"));
    CHECK(a.which == FdCase::H);
    CHECK(a.image.str() == "UUUHHDDD");
    auto b = fd_split_map(bar("UUUUHDDDHD"));
    CHECK(b.which == FdCase::U);
    CHECK(b.image.str() == "UUUHDDHD");
    CHECK(fd_split_inv(b).str() == "UUUUHDDDHD");
    // the other printed example has semiperimeter 7 and first descent 4
    auto c = fd_split_map(bar("UUUUHHHDDDD"));
    CHECK(c.image.str() == "UUUUHHDDDD");
    CHECK(kind_of([] { (void)fd_split_map(bar("UHD")); }) == BijectionError::Kind::TooSmall);
}

TEST_CASE("strip maps on the n = 6, h = 2 fixtures") {
    const char* lch_pairs[][2] = {{"UUUUUHDDDDD", "UUUHDDD"}, {"UUUUHHDDDD", "UUHHDD"}, {"UUUUHDHDDD", "UUHDHD"},
                                  {"UUUHUHDDDD", "UHUHDD"},   {"UUUHHHDDD", "UHHHD"}};
    const char* lhs_pairs[][2] = {{"UUUHHHDDD", "UUUHDDD"}, {"UUHHHHDD", "UUHHDD"}, {"UUHHHDHD", "UUHDHD"},
                                  {"UHHHUHDD", "UHUHDD"},   {"UHHHHHD", "UHHHD"}};
    for (auto& p : lch_pairs) {
        CHECK(lch_strip(bar(p[0]), 2).str() == p[1]);
        CHECK(lch_unstrip(bar(p[1]), 2).str() == p[0]);
    }
    for (auto& p : lhs_pairs) {
        CHECK(lhs_strip(bar(p[0]), 2).str() == p[1]);
        CHECK(lhs_unstrip(bar(p[1]), 2).str() == p[0]);
    }
    long lch_domain = 0, lhs_domain = 0;
    paths::for_each_bargraph(6, [&](const PathWord& g) {
        lch_domain += paths::stat(g, "lch") > 2;
        lhs_domain += paths::stat(g, "lhs") > 2;
    });
    CHECK(lch_domain == 5);
    CHECK(lhs_domain == 5);
    CHECK(lch_strip(bar("UUUHDDD"), 2).str() == "UHD");
    CHECK(kind_of([] { (void)lch_strip(bar("UUHDD"), 2); }) == BijectionError::Kind::PreconditionFailed);
}

TEST_CASE("phi") {
    CHECK(phi(bar("UHHUHDD")).str() == "UHUHHDD");
    CHECK(phi_inv(bar("UHUHHDD")).str() == "UHHUHDD");
    CHECK(phi(bar("UUHDD")).str() == "UUHDD");
    CHECK(kind_of([] { (void)phi(bar("UHHD")); }) == BijectionError::Kind::SingleRow);
}

TEST_CASE("f") {
    CHECK(f_map(bar("UUHDD")).str().empty());
    CHECK(f_map(bar("UUUHDDD")).str() == "H");
    auto g = bar("UUUUUUHDDHUHDDHUUUHDHUHDDDHUUHDDDDD");
    CHECK(f_map(g).str() == "HHUHUHHDHDUHHUHDHDH");
    CHECK(f_inv(f_map(g)) == g);
    CHECK(kind_of([] { (void)f_map(bar("UHD")); }) == BijectionError::Kind::BaseExcluded);
    CHECK(kind_of([] { (void)f_map(bar("UHHD")); }) == BijectionError::Kind::NotStrictlyAlternating);
}

TEST_CASE("exhaustive verification") {
    struct Case {
        const char* name;
        int n;
    };
    for (auto c : {Case{"delta", 10}, Case{"dr0_to_secondary", 10}, Case{"fd_split_map", 12}, Case{"lch_strip", 12},
                   Case{"lhs_strip", 12}, Case{"phi", 12}, Case{"f_map", 12}}) {
        auto rep = verify_bijection(c.name, c.n);
        CHECK_MESSAGE(rep.ok(), rep.str());
        CHECK(rep.domain_size == rep.codomain_size);
        CHECK(rep.domain_size > 0);
    }
    CHECK_THROWS_AS(verify_bijection("nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_bijection("phi", 17), paths::BudgetExceeded);
}

TEST_CASE("apply by name") {
    CHECK(apply("delta", "H") == "UHD");
    CHECK(apply("fd_split_map", "UUUUHDDDHD") == "U:UUUHDDHD");
    CHECK(apply("fd_split_map_inv", "U:UUUHDDHD") == "UUUUHDDDHD");
    CHECK(apply("lhs_strip", "UHHHHHD", 2) == "UHHHD");
    CHECK(apply("dr0_to_secondary_inv", "(.).") == "UHUHDHD");
    CHECK_THROWS_AS(apply("nope", "UHD"), std::invalid_argument);
    CHECK_THROWS_AS(apply("phi", "UUD"), paths::NotAPath);
}
