#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bargraph/bijections.hpp"
#include "bargraph/catalog.hpp"
#include "bargraph/enumerate.hpp"
#include "bargraph/oeis.hpp"

using namespace bargraph;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

long z_coeff(const series::TruncatedSeries& z, int n) { return z.coeff({0, 0, n, 0}).get_num().get_si(); }

long count_bargraphs(int n, const std::function<bool(const paths::PathWord&)>& keep = {}) {
    long c = 0;
    paths::for_each_bargraph(n, [&](const paths::PathWord& w) { c += !keep || keep(w); });
    return c;
}

Outcome ac1() {
    const auto start = Clock::now();
    const long printed[] = {1, 2, 5, 13, 35, 97, 275};
    const auto z = catalog::to_z(catalog::expand("B", 8));
    for (int n = 2; n <= 8; ++n) {
        const long brute = count_bargraphs(n);
        if (brute != printed[n - 2] || z_coeff(z, n) != brute) {
            return {false, "n = " + std::to_string(n) + ": brute " + std::to_string(brute) + ", series " +
                               std::to_string(z_coeff(z, n))};
        }
    }
    const double t = seconds_since(start);
    return {t < 1.0, "|B_n| = 1, 2, 5, 13, 35, 97, 275 for n = 2..8 by enumeration and by B(z,z)"};
}

Outcome ac2() {
    const auto start = Clock::now();
    for (int n = 2; n <= 14; ++n) {
        long m = 0;
        paths::for_each_cornerless_motzkin(n - 1, [&](const paths::PathWord&) { ++m; });
        const long b = count_bargraphs(n);
        if (m != b) return {false, "n = " + std::to_string(n) + ": |M| " + std::to_string(m) + ", |B| " + std::to_string(b)};
    }
    auto rep = bijections::verify_bijection("delta", 12);
    if (!rep.ok()) return {false, rep.str()};
    const double t = seconds_since(start);
    return {t < 60.0, "|M_(n-1)| = |B_n| for n <= 14; delta round-trips on " + std::to_string(rep.domain_size) +
                          " paths up to 12"};
}

Outcome ac3() {
    struct Item {
        const char* id;
        std::vector<int> params;
    };
    const std::vector<Item> items{{"hfc", {}},  {"dr", {}},          {"dr_df_joint", {}},   {"v_l", {1, 2, 3, 4}},
                                  {"p_l", {1, 2, 3, 4}}, {"p_hsp", {}}, {"v_hsv", {}}, {"corners_joint", {}},
                                  {"hs", {}},   {"uhs", {}},         {"fd", {}},            {"xfd", {}},
                                  {"uc", {}},   {"ch_h", {1, 2, 3, 4}}, {"iuc", {}},        {"lch", {}},
                                  {"lhs", {}},  {"uhu", {}},         {"stair", {}},         {"oh_eh", {}},
                                  {"area_cf", {}}};
    int checks = 0;
    std::size_t terms = 0;
    for (const auto& it : items) {
        const auto& g = catalog::find(it.id);
        const int cap = g.markers.find("s:") != std::string::npos ? 8 : 10;
        std::vector<std::optional<int>> params;
        for (int p : it.params) params.emplace_back(p);
        if (params.empty()) params.emplace_back();
        for (const auto& p : params) {
            auto rep = catalog::oracle_compare(it.id, cap, p);
            if (!rep.ok()) return {false, rep.str()};
            ++checks;
            terms += rep.terms;
        }
    }
    return {true, std::to_string(checks) + " oracle comparisons, " + std::to_string(terms) + " coefficients, all exact"};
}

Outcome ac4() {
    int entries = 0;
    std::vector<std::string> errata;
    for (const auto& g : catalog::registry()) {
        std::vector<std::optional<int>> params;
        for (int p : g.test_params) params.emplace_back(p);
        if (params.empty()) params.emplace_back();
        for (const auto& p : params) {
            auto rep = catalog::cross_route(g.id, 10, p);
            if (!rep.ok()) return {false, rep.str()};
            for (const auto* r : rep.errata()) {
                std::string tag = g.id;
                if (p) tag += "(" + std::to_string(*p) + ")";
                errata.push_back(tag + " " + r->route + ": " + r->detail);
            }
            ++entries;
        }
    }
    std::string detail = std::to_string(entries) + " entries agree across routes at cap 10";
    if (!errata.empty()) {
        detail += "; errata reported";
        for (const auto& e : errata) detail += "\n      " + e;
    }
    return {true, detail};
}

Outcome ac5() {
    for (const char* id : {"delta_relation", "hs_from_corners", "lch_lhs", "lhs_iuc", "K_BSA", "BWA_BSA"}) {
        auto rep = catalog::check_identity(id, 12);
        if (!rep.ok) return {false, rep.str()};
    }
    return {true, "delta_relation, hs_from_corners, lch_lhs, lhs_iuc, K_BSA, BWA_BSA hold at cap 12"};
}

Outcome ac6() {
    auto rec = catalog::check_fd_recurrence(12);
    if (!rec.ok()) return {false, rec.failures.front()};
    auto rep = bijections::verify_bijection("fd_split_map", 12);
    if (!rep.ok()) return {false, rep.str()};
    return {true, std::to_string(rec.checked) + " recurrence cases; fd_split_map verified on " +
                      std::to_string(rep.domain_size) + " bargraphs"};
}

Outcome ac7() {
    std::ostringstream detail;
    const std::pair<const char*, int> suites[] = {
        {"dr0_to_secondary", 10}, {"lch_strip", 12}, {"lhs_strip", 12}, {"phi", 12}, {"f_map", 12}};
    for (const auto& [name, n] : suites) {
        auto rep = bijections::verify_bijection(name, n);
        if (!rep.ok()) return {false, rep.str()};
        detail << name << " " << rep.domain_size << "; ";
    }
    const long expected[] = {1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423};
    for (int n = 0; n <= 10; ++n) {
        if (static_cast<long>(bijections::brute_force_secondary(n).size()) != expected[n]) {
            return {false, "secondary structure count at n = " + std::to_string(n)};
        }
    }
    detail << "all failure lists empty";
    return {true, detail.str()};
}

Outcome ac8() {
    const std::pair<const char*, bool (*)(const paths::PathWord&)> subsets[] = {
        {"B_sym", paths::is_symmetric}, {"B_WA", paths::is_weakly_alternating}, {"B_SA", paths::is_strictly_alternating}};
    for (const auto& [id, pred] : subsets) {
        const auto z = catalog::to_z(catalog::expand(id, 12));
        for (int n = 2; n <= 12; ++n) {
            const long brute = count_bargraphs(n, pred);
            if (brute != z_coeff(z, n)) {
                return {false, std::string(id) + " n = " + std::to_string(n) + ": brute " + std::to_string(brute) +
                                   ", series " + std::to_string(z_coeff(z, n))};
            }
        }
    }
    return {true, "symmetric, weakly and strictly alternating counts match for n <= 12"};
}

Outcome ac9() {
    const auto cfg = oeis::Config::from_environment();
    std::vector<std::string> problems;
    std::ostringstream good;
    for (const char* id : {"A082582", "A023432"}) {
        const auto* row = oeis::find_row(id);
        try {
            const auto seq = oeis::load(id, cfg);
            const auto rep = oeis::compare(seq, row->computed(21), row->first_index);
            if (!rep.ok || (std::string(id) == "A082582" && rep.matched < 15)) {
                problems.push_back(rep.str());
            } else {
                good << rep.str() << "; ";
            }
        } catch (const oeis::OeisError& e) {
            problems.push_back(e.what());
        }
    }
    const auto sa = oeis::find_row("A023342")->computed(16);
    const auto k = oeis::find_row("A023432")->computed(16);
    for (std::size_t i = 1; i < sa.size(); ++i) {
        if (sa[i] != k[i - 1]) problems.push_back("strictly alternating counts are not K shifted by 3");
    }
    if (problems.empty()) return {true, good.str() + "A023342 read as A023432 shifted by 3"};
    std::string detail;
    for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
    return {false, good.str() + detail};
}

Outcome ac10(const std::string& cli) {
    if (cli.empty()) return {false, "no CLI path given (--cli)"};
    const auto start = Clock::now();
    const std::string cmd = "\"" + cli + "\" verify --all --cap 10 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {false, "could not run " + cli};
    std::string output, last;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    const int status = pclose(pipe);
    const double t = seconds_since(start);
    std::istringstream lines(output);
    for (std::string line; std::getline(lines, line);) last = line;
    std::ostringstream detail;
    detail.precision(2);
    detail << std::fixed << "verify --all --cap 10 exit " << WEXITSTATUS(status) << " in " << t << " s (" << last << ")";
    return {status == 0 && t < 300.0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks AC1 to AC10"};
    std::string cli;
    std::vector<std::string> expect_fail;
    app.add_option("--cli", cli, "path of the bargraph executable");
    app.add_option("--expect-fail", expect_fail, "criteria known to fail; they do not affect the exit code");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", [&] { return ac10(cli); }}};

    const std::set<std::string> expected(expect_fail.begin(), expect_fail.end());
    int passed = 0;
    std::vector<std::string> unexpected;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double t = seconds_since(start);
        std::cout << name << (name.size() < 4 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
        std::cout.precision(2);
        std::cout << std::fixed << " [" << t << " s]";
        if (!o.pass && expected.count(name)) std::cout << " (expected)";
        std::cout << std::endl;
        if (o.pass) {
            ++passed;
        } else if (!expected.count(name)) {
            unexpected.push_back(name);
        }
    }
    std::cout << "acceptance: " << passed << " of " << criteria.size() << " passed";
    if (!unexpected.empty()) std::cout << ", unexpected failures:";
    for (const auto& u : unexpected) std::cout << ' ' << u;
    std::cout << '\n';
    return unexpected.empty() ? 0 : 1;
}
