#include <map>
#include <set>

#include "bargraph/enumerate.hpp"
#include "bargraph/statistics.hpp"
#include "doctest.h"

using namespace bargraph::paths;

namespace {

std::string reason_of(std::string_view word, Kind kind) {
    try {
        (void)PathWord::parse(word, kind);
    } catch (const NotAPath& e) {
        return e.reason();
    }
    return "";
}

PathWord bar(std::string_view w) { return PathWord::parse(w, Kind::Bargraph); }
PathWord mot(std::string_view w) { return PathWord::parse(w, Kind::Motzkin); }

// Every word over {U,H,D} of the given length, filtered by validation.
std::set<std::string> brute_force(int length, Kind kind, int weight) {
    std::set<std::string> out;
    std::string w(length, 'U');
    const char alphabet[] = {'U', 'H', 'D'};
    std::vector<int> digits(length, 0);
    while (true) {
        for (int i = 0; i < length; ++i) w[i] = alphabet[digits[i]];
        try {
            auto p = PathWord::parse(w, kind);
            if (p.weight() == weight) out.insert(w);
        } catch (const NotAPath&) {
        }
        int i = length - 1;
        while (i >= 0 && digits[i] == 2) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    return out;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(bar("UUUHDDD").size() == 7);
    CHECK(reason_of("UD", Kind::Motzkin).find("peak UD") != std::string::npos);
    CHECK(reason_of("UHDHUHD", Kind::Bargraph).find("touches axis") != std::string::npos);
    CHECK(reason_of("UHDUHD", Kind::Bargraph).find("valley DU") != std::string::npos);
    CHECK(reason_of("HD", Kind::Motzkin).find("negative") != std::string::npos);
    CHECK(reason_of("UH", Kind::Motzkin).find("bad endpoint") != std::string::npos);
    CHECK(reason_of("HUHD", Kind::Bargraph).find("bad endpoint") != std::string::npos);
    CHECK(reason_of("", Kind::Bargraph).find("empty") != std::string::npos);
    CHECK(reason_of("UXD", Kind::Bargraph).find("unknown step") != std::string::npos);
    CHECK(mot("").empty());
    CHECK(reason_of("UHDUHD", Kind::KPath).empty());
    CHECK(reason_of("UUHDD", Kind::KPath).find("UU") != std::string::npos);
}

TEST_CASE("bargraph enumeration small cases") {
    auto b2 = enumerate_bargraphs(2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].str() == "UHD");
    auto b3 = enumerate_bargraphs(3);
    REQUIRE(b3.size() == 2);
    CHECK(b3[0].str() == "UUHDD");
    CHECK(b3[1].str() == "UHHD");
    CHECK(enumerate_bargraphs(8).size() == 275);
    CHECK(enumerate_bargraphs(1).empty());
    CHECK(enumerate_bargraphs(-3).empty());
}

TEST_CASE("motzkin enumeration small cases") {
    auto m0 = enumerate_cornerless_motzkin(0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0].empty());
    auto m1 = enumerate_cornerless_motzkin(1);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].str() == "H");
    CHECK(enumerate_cornerless_motzkin(7).size() == 275);
}

TEST_CASE("enumerators agree with brute force over all words") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::string> expected;
        for (int len = 0; len <= 2 * n; ++len) {
            auto part = brute_force(len, Kind::Bargraph, n);
            expected.insert(part.begin(), part.end());
        }
        std::set<std::string> got;
        std::string prev;
        for (const auto& w : enumerate_bargraphs(n)) {
            CHECK(got.insert(w.str()).second);
            CHECK(PathWord::parse(w.str(), Kind::Bargraph).str() == w.str());
        }
        CHECK(got == expected);
    }
    for (int n = 0; n <= 5; ++n) {
        std::set<std::string> expected;
        for (int len = 0; len <= 2 * n; ++len) {
            auto part = brute_force(len, Kind::Motzkin, n);
            expected.insert(part.begin(), part.end());
        }
        std::set<std::string> got;
        for (const auto& w : enumerate_cornerless_motzkin(n)) got.insert(w.str());
        CHECK(got == expected);
    }
    for (int len = 0; len <= 9; ++len) {
        std::set<std::string> expected;
        for (int weight = 0; weight <= len; ++weight) {
            auto part = brute_force(len, Kind::KPath, weight);
            expected.insert(part.begin(), part.end());
        }
        std::set<std::string> got;
        for (const auto& w : enumerate_kpaths(len)) got.insert(w.str());
        CHECK(got == expected);
    }
}

TEST_CASE("prefix enumeration") {
    for (int n = 0; n <= 5; ++n) {
        std::map<int, std::set<std::string>> expected;
        for (int len = 0; len <= 2 * n; ++len) {
            for (const auto& w : brute_force(len, Kind::Prefix, n)) {
                expected[PathWord::parse(w, Kind::Prefix).end_height()].insert(w);
            }
        }
        for (int h = 0; h <= 3; ++h) {
            std::set<std::string> got;
            for (const auto& w : enumerate_prefixes(n, h)) got.insert(w.str());
            CHECK(got == expected[h]);
        }
    }
    CHECK(enumerate_prefixes(4, 0).size() == enumerate_cornerless_motzkin(4).size());
}

TEST_CASE("enumeration order is strictly increasing") {
    auto bs = enumerate_bargraphs(9);
    auto key = [](const PathWord& w) {
        std::string s = w.str();
        for (char& c : s) c = c == 'U' ? 'a' : (c == 'H' ? 'b' : 'c');
        return s;
    };
    for (std::size_t i = 1; i < bs.size(); ++i) CHECK(key(bs[i - 1]) < key(bs[i]));
}

TEST_CASE("delta counting identity") {
    for (int n = 2; n <= 12; ++n) {
        CHECK(enumerate_cornerless_motzkin(n - 1).size() == enumerate_bargraphs(n).size());
    }
}

TEST_CASE("statistics on fixed words") {
    auto fig1 = PathWord::parse("UUUHDHDHUHUHHDHUUHDDDD", Kind::Bargraph);
    CHECK(stat(fig1, "semi") == 15);
    CHECK(stat(bar("UUUUHHHDDDD"), "fd") == 4);
    CHECK(stat(bar("UUUHHDDD"), "fd") == 3);
    CHECK(stat(bar("UUHHDHD"), "area") == 5);
    CHECK(stat(bar("UHUHHDD"), "hfc") == 1);
    CHECK(stat(bar("UUHUHDDD"), "dr") == 1);
    CHECK(stat(bar("UUHUHDDD"), "df") == 2);
    CHECK(stat(bar("UUHDHUUHDDHD"), "v_1") == 1);
    CHECK(stat(bar("UUHDHHUHDD"), "v_2") == 1);
    CHECK(stat(bar("UUHDHHUHDD"), "v_1") == 0);
    CHECK(stat(bar("UUHDHHUHDD"), "p_1") == 2);
    CHECK(stat(bar("UUHDHHUHDD"), "peaks") == 2);
    CHECK(stat(bar("UUHHDHHHUHDD"), "hsp") == 3);
    CHECK(stat(bar("UUHHDHHHUHDD"), "hsv") == 3);
    CHECK(stat(bar("UUHHDHHHUHDD"), "valleys") == 1);
    CHECK(stat(bar("UHHD"), "hs") == 1);
    CHECK(stat(bar("UUHDHUHDD"), "uhs") == 3);
    CHECK(stat(bar("UUHDHUHDD"), "xfd") == 1);
    CHECK(stat(bar("UHHUHDD"), "uc") == 2);
    CHECK(stat(bar("UHHUHDD"), "ch_2") == 1);
    CHECK(stat(bar("UHHUHDD"), "iuc") == 2);
    CHECK(stat(bar("UUHDHD"), "iuc") == 0);
    CHECK(stat(bar("UUHDHD"), "lch") == 1);
    CHECK(stat(bar("UUHHDD"), "lch") == 2);
    CHECK(stat(bar("UUHHDHD"), "lhs") == 2);
    CHECK(stat(bar("UHUHUHDDD"), "uhu") == 2);
    CHECK(stat(bar("UHUHUHDDD"), "stair") == 6);
    CHECK(stat(bar("UHUHHDD"), "stair") == 4);
    CHECK(stat(bar("UUHDD"), "stair") == 1);
    CHECK(stat(bar("UHUHHDD"), "oh") == 1);
    CHECK(stat(bar("UHUHHDD"), "eh") == 2);
}

TEST_CASE("motzkin-side statistics") {
    CHECK(stat(mot(""), "fd") == 1);
    CHECK(stat(mot("HH"), "fd") == 1);
    CHECK(stat(mot("UHD"), "fd") == 2);
    CHECK(stat(mot("UHDH"), "fd") == 1);
    CHECK(stat(mot("HUHUHDD"), "stair") == 5);
    CHECK(stat(mot("HUHD"), "uc") == 1);
    CHECK(stat(mot("HUHD"), "ch_2") == 1);
    CHECK(stat(mot("HUHD"), "lch") == 0);
    CHECK(stat(mot("UHD"), "lch") == 1);
    CHECK(stat(mot("HUHD"), "oh") == 1);
    CHECK(stat(mot("HUHD"), "eh") == 1);
    CHECK(stat(mot("HHUHD"), "iuc") == 2);
    CHECK(stat(mot("UUHHDD"), "area") == 4);
}

TEST_CASE("unknown statistic") {
    CHECK_THROWS_AS(StatId::parse("nope"), UnknownStatistic);
    CHECK_THROWS_AS(StatId::parse("v_"), UnknownStatistic);
    CHECK_THROWS_AS(StatId::parse("v_0"), UnknownStatistic);
    CHECK_THROWS_AS(StatId::parse("ch_x"), UnknownStatistic);
    CHECK(StatId::parse("ch_3").name() == "ch_3");
    CHECK(StatId::parse("hfc").name() == "hfc");
}

TEST_CASE("delta transports statistics") {
    auto starts_with = [](const PathWord& w, std::string_view p) { return w.str().rfind(p, 0) == 0; };
    for (int n = 1; n <= 9; ++n) {
        for (const auto& a : enumerate_cornerless_motzkin(n)) {
            auto g = PathWord::parse("U" + a.str() + "D", Kind::Bargraph);
            CHECK(stat(g, "hfc") == stat(a, "hfc") + 1);
            CHECK(stat(g, "dr") == stat(a, "dr") + starts_with(a, "U"));
            CHECK(stat(g, "df") == stat(a, "df") + (a.str().back() == 'D'));
            CHECK(stat(g, "lch") == stat(a, "lch") + 1);
            CHECK(stat(g, "stair") == stat(a, "stair") + 1);
            CHECK(stat(g, "uhu") == stat(a, "uhu") + starts_with(a, "HU"));
            CHECK(stat(g, "uh") == stat(a, "uh") + starts_with(a, "H"));
            for (int l = 1; l <= 3; ++l) {
                const std::string name = "p_" + std::to_string(l);
                CHECK(stat(g, name) == stat(a, name) + (a.str() == std::string(l, 'H')));
            }
            CHECK(stat(g, "numU") == stat(a, "numU") + 1);
            for (const char* same : {"numH", "v_1", "v_2", "dh", "hs", "uhs", "fd", "xfd", "uc", "ch_2",
                                     "ch_3", "iuc", "lhs", "oh", "eh"}) {
                CHECK_MESSAGE(stat(g, same) == stat(a, same), std::string(same) << " on " << a.str());
            }
            CHECK(stat(g, "area") == stat(a, "area") + a.num_h());
        }
    }
}

TEST_CASE("bargraph invariants") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& g : enumerate_bargraphs(n)) {
            CHECK(stat(g, "uh") == 1 + stat(g, "hu"));
            CHECK(stat(g, "hd") == 1 + stat(g, "dh"));
            CHECK(2 * stat(g, "hs") == stat(g, "corners"));
            CHECK(stat(g, "stair") >= 1);
            CHECK(stat(g, "fd") >= 1);
            CHECK(stat(g, "area") >= g.num_h());
            const int lch = stat(g, "lch");
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] == Step::H) CHECK(lch <= g.height_before(i));
            }
        }
    }
}

TEST_CASE("distribution") {
    auto d = distribution(Family::Bargraph, 2, {StatId::parse("hfc")});
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries.begin()->first == DistKey{1, 1, {1}});
    CHECK(d.entries.begin()->second == 1);
    CHECK(distribution(Family::Bargraph, 4, {}).total() == 5);
    CHECK(d.dump() == "1 1 1 1\n");
    CHECK_THROWS_AS(distribution(Family::Bargraph, 17, {}), BudgetExceeded);
    CHECK(distribution(Family::Bargraph, 16, {}).total() == 1810011);
}

TEST_CASE("lch and lhs equidistributed at n = 6") {
    auto value_multiset = [](const StatDistribution& d) {
        std::map<int, mpz_class> m;
        for (const auto& [k, c] : d.entries) m[k.values[0]] += c;
        return m;
    };
    auto a = distribution(Family::Bargraph, 6, {StatId::parse("lch")});
    auto b = distribution(Family::Bargraph, 6, {StatId::parse("lhs")});
    CHECK(value_multiset(a) == value_multiset(b));
}

TEST_CASE("reflection equidistributions") {
    for (int n = 2; n <= 9; ++n) {
        auto d = distribution(Family::Bargraph, n, {StatId::parse("dr"), StatId::parse("df")});
        auto swapped = distribution(Family::Bargraph, n, {StatId::parse("df"), StatId::parse("dr")});
        CHECK(d.entries == swapped.entries);
        auto c = distribution(Family::Bargraph, n, {StatId::parse("uh"), StatId::parse("dh")});
        auto cs = distribution(Family::Bargraph, n, {StatId::parse("hd"), StatId::parse("hu")});
        CHECK(c.entries == cs.entries);
    }
}

TEST_CASE("subset predicates") {
    CHECK(is_symmetric(bar("UHD")));
    CHECK(is_symmetric(bar("UHHD")));
    CHECK_FALSE(is_symmetric(bar("UHUHDD")));
    CHECK(is_weakly_alternating(bar("UHD")));
    CHECK(is_strictly_alternating(bar("UHD")));
    CHECK_FALSE(is_weakly_alternating(bar("UHUHDD")));
    CHECK(is_strictly_alternating(bar("UUHDHUHDD")));
    CHECK(is_weakly_alternating(bar("UUHHDHHUHDD")));
    CHECK_FALSE(is_strictly_alternating(bar("UUHHDHHUHDD")));
    CHECK(is_nondecreasing(bar("UHUHHDD")));
    CHECK_FALSE(is_nondecreasing(bar("UUHDHD")));
    CHECK(is_increasing(bar("UHUHDD")));
    CHECK_FALSE(is_increasing(bar("UHHD")));
}
