#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "bargraph/oeis.hpp"
#include "doctest.h"

using namespace bargraph::oeis;
namespace fs = std::filesystem;

namespace {

OeisError::Kind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const OeisError& e) {
        return e.kind();
    }
    FAIL("no OeisError");
    return OeisError::Kind::ParseError;
}

fs::path scratch_dir(const char* tag) {
    auto p = fs::temp_directory_path() / ("bargraph_oeis_" + std::string(tag) + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("b-file parsing") {
    auto s = parse_bfile("A000001", "# comment\n\n3 7\n4 11\n5 123456789012345678901234567890\n");
    CHECK(s.offset == 3);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[2] == mpz_class("123456789012345678901234567890"));
    CHECK(format_bfile(s) == "3 7\n4 11\n5 123456789012345678901234567890\n");
    CHECK(kind_of([] { (void)parse_bfile("A000001", "0 1\n2 3\n"); }) == OeisError::Kind::ParseError);
    CHECK(kind_of([] { (void)parse_bfile("A000001", "0 x\n"); }) == OeisError::Kind::ParseError);
    CHECK(kind_of([] { (void)parse_bfile("A000001", "# only\n"); }) == OeisError::Kind::ParseError);
}

TEST_CASE("ids and offline resolution") {
    CHECK(kind_of([] { check_id("A12345"); }) == OeisError::Kind::BadId);
    CHECK(kind_of([] { check_id("B123456"); }) == OeisError::Kind::BadId);
    Config cfg;
    cfg.cache_dir = scratch_dir("cold").string();
    CHECK(kind_of([&] { (void)load("A000000", cfg); }) == OeisError::Kind::NotFound);
    CHECK(kind_of([&] { (void)load("A023432", cfg); }) == OeisError::Kind::NetworkDisabled);

    fs::create_directories(cfg.cache_dir);
    std::ofstream(fs::path(cfg.cache_dir) / "b023432.txt") << "0 1\n1 1\n2 1\n3 2\n";
    auto s = load("A023432", cfg);
    CHECK(s.origin == Origin::Cache);
    CHECK(s.terms.size() == 4);
    fs::remove_all(cfg.cache_dir);
}

TEST_CASE("bargraph counts against the pinned entry") {
    auto cfg = Config::from_environment();
    cfg.allow_network = false;
    auto seq = load("A082582", cfg);
    CHECK(seq.origin == Origin::Fixture);
    CHECK(seq.offset == 0);
    REQUIRE(seq.terms.size() == 22);
    const auto* row = find_row("A082582");
    REQUIRE(row != nullptr);
    REQUIRE(row->computed);
    auto computed = row->computed(21);
    CHECK(computed.size() == 20);
    auto rep = compare(seq, computed, row->first_index);
    CHECK_MESSAGE(rep.ok, rep.str());
    CHECK(rep.shift == 0);
    CHECK(rep.matched == 20);
}

TEST_CASE("shift search") {
    OeisSequence seq{"A000001", 0, ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796}), Origin::Fixture};
    auto exact = compare(seq, ints({2, 5, 14, 42, 132, 429, 1430, 4862, 16796}), 2);
    CHECK(exact.ok);
    CHECK(exact.shift == 0);
    auto shifted = compare(seq, ints({1, 2, 5, 14, 42, 132, 429, 1430, 4862}), 0);
    CHECK(shifted.ok);
    CHECK(shifted.shift == 1);
    auto bad = compare(seq, ints({1, 1, 2, 5, 14, 42, 131, 429, 1430}), 0);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.mismatch_index);
    CHECK(*bad.mismatch_index == 6);
    CHECK(bad.expected == "132");
    CHECK(bad.got == "131");
    auto short_overlap = compare(seq, ints({1, 1, 2}), 0);
    CHECK_FALSE(short_overlap.ok);
}

TEST_CASE("strictly alternating counts are the K counts shifted by 3") {
    const auto* sa = find_row("A023342");
    const auto* k = find_row("A023432");
    REQUIRE(sa != nullptr);
    REQUIRE(k != nullptr);
    auto a = sa->computed(16);
    auto b = k->computed(16);
    REQUIRE(a.size() == 15);
    CHECK(a[0] == 1);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] == b[i - 1]);
    OeisSequence as_k{"A023432", 0, b, Origin::Fixture};
    auto rep = compare(as_k, a, sa->first_index);
    CHECK(rep.ok);
    CHECK(rep.shift == -3);
}

TEST_CASE("table coverage") {
    CHECK(table().size() >= 36);
    for (const auto& r : table()) CHECK_NOTHROW(check_id(r.a_number));
    CHECK(find_row("A273346") != nullptr);
    CHECK(find_row("A999999") == nullptr);
}
