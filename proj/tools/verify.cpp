#include "verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bargraph/bijections.hpp"
#include "bargraph/catalog.hpp"

namespace bargraph::cli {

namespace {

constexpr int kJointCap = 8;
constexpr int kOeisCapLimit = 30;

// Entries whose A-number in the table is read as another entry.
const std::map<std::string, std::string> kReadAs{{"A023342", "A023432"}};

bool two_markers(const catalog::GfSpec& g) { return g.markers.find("s:") != std::string::npos; }

void indent(std::ostream& out, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out << "    " << line << '\n';
}

void check_entry(const std::string& id, const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    const auto& g = catalog::find(id);
    const int cap = two_markers(g) ? std::min(opt.cap, kJointCap) : opt.cap;
    std::vector<int> params = g.parametrized() ? g.test_params : std::vector<int>{g.default_param};
    for (int p : params) {
        std::string label = "gf " + g.id;
        if (g.parametrized()) label += " " + g.param_name + "=" + std::to_string(p);
        label += " cap " + std::to_string(cap);
        const std::optional<int> param = g.parametrized() ? std::optional<int>(p) : std::nullopt;
        auto cr = catalog::cross_route(g.id, cap, param);
        bool route_fail = false;
        for (const auto& r : cr.routes) {
            if (r.ok) continue;
            if (!r.erratum.empty()) {
                ++tally.errata;
                out << "ERRATUM " << label << " route " << r.route << ": " << r.erratum << '\n';
                if (!r.detail.empty()) out << "    " << r.detail << '\n';
            } else {
                route_fail = true;
            }
        }
        if (route_fail) {
            ++tally.failed;
            out << "FAIL    " << label << ": routes disagree\n";
            indent(out, cr.str());
            continue;
        }
        catalog::OracleReport orc;
        try {
            orc = catalog::oracle_compare(g.id, cap, param, opt.budget);
        } catch (const catalog::CrossRouteMismatch& e) {
            ++tally.failed;
            out << "FAIL    " << label << ": " << e.what() << '\n';
            continue;
        }
        if (!orc.ok()) {
            ++tally.failed;
            out << "FAIL    " << label << ": oracle disagrees\n";
            indent(out, orc.str());
            continue;
        }
        ++tally.passed;
        out << "PASS    " << label << ": " << cr.routes.size() << (cr.routes.size() == 1 ? " route, " : " routes, ")
            << orc.terms << " oracle terms\n";
    }
}

void check_identity(const std::string& id, const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    auto rep = catalog::check_identity(id, opt.cap);
    const std::string label = "identity " + id + " cap " + std::to_string(opt.cap);
    if (rep.ok) {
        ++tally.passed;
        out << "PASS    " << label << ": " << rep.statement << '\n';
    } else {
        ++tally.failed;
        out << "FAIL    " << label << '\n';
        indent(out, rep.str());
    }
}

void check_recurrence(const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    auto rep = catalog::check_fd_recurrence(opt.cap, opt.budget);
    const std::string label = "recurrence fd n <= " + std::to_string(opt.cap);
    if (rep.ok()) {
        ++tally.passed;
        out << "PASS    " << label << ": a(n,k) = a(n-1,k) + a(n-1,k-1), " << rep.checked << " cases\n";
    } else {
        ++tally.failed;
        out << "FAIL    " << label << '\n';
        for (const auto& f : rep.failures) out << "    " << f << '\n';
    }
}

void check_bijection(const std::string& name, const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    auto rep = bijections::verify_bijection(name, opt.cap, opt.budget);
    const std::string label = "bijection " + name + " n <= " + std::to_string(opt.cap);
    if (rep.ok()) {
        ++tally.passed;
        out << "PASS    " << label << ": " << rep.domain_size << " objects\n";
    } else {
        ++tally.failed;
        out << "FAIL    " << label << '\n';
        indent(out, rep.str());
    }
}

void check_sequence(const oeis::TableRow& row, const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    const auto it = kReadAs.find(row.a_number);
    const std::string source = it == kReadAs.end() ? row.a_number : it->second;
    std::string label = "oeis " + row.a_number;
    if (source != row.a_number) label += " (read as " + source + ")";
    oeis::OeisSequence seq;
    try {
        seq = oeis::load(source, opt.oeis);
    } catch (const oeis::OeisError& e) {
        ++tally.skipped;
        out << "SKIP    " << label << ": " << e.what() << '\n';
        return;
    }
    const int last = seq.offset + static_cast<int>(seq.terms.size()) - 1;
    const int cap = std::clamp(last + 3, opt.cap, kOeisCapLimit);
    auto rep = oeis::compare(seq, row.computed(cap), row.first_index);
    if (rep.ok) {
        ++tally.passed;
        out << "PASS    " << label << " [" << oeis::to_string(seq.origin) << "]: " << rep.str() << '\n';
    } else {
        ++tally.failed;
        out << "FAIL    " << label << " [" << oeis::to_string(seq.origin) << "]: " << rep.str() << '\n';
    }
}

void check_shift_relation(const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    const auto* sa = oeis::find_row("A023342");
    const auto* k = oeis::find_row("A023432");
    const auto a = sa->computed(opt.cap);
    const auto b = k->computed(opt.cap);
    std::optional<int> bad;
    for (int n = 3; n <= opt.cap && !bad; ++n) {
        if (a[n - sa->first_index] != b[n - 3 - k->first_index]) bad = n;
    }
    const std::string label = "oeis A023342 vs A023432 cap " + std::to_string(opt.cap);
    if (bad) {
        ++tally.failed;
        out << "FAIL    " << label << ": strictly alternating count at n = " << *bad << " is not K at n - 3\n";
        return;
    }
    ++tally.passed;
    out << "PASS    " << label << ": strictly alternating count at n equals K at n - 3 for 3 <= n <= " << opt.cap
        << '\n';
    out << "NOTE    A023342: " << sa->note << '\n';
}

void check_oeis(const std::string& name, const VerifyOptions& opt, VerifyTally& tally, std::ostream& out) {
    if (name != "oeis") {
        check_sequence(*oeis::find_row(name), opt, tally, out);
        return;
    }
    for (const auto& row : oeis::table()) {
        if (row.computed) check_sequence(row, opt, tally, out);
    }
    check_shift_relation(opt, tally, out);
}

}  // namespace

std::vector<Check> all_checks() {
    std::vector<Check> v;
    for (const auto& g : catalog::registry()) v.push_back({CheckKind::Entry, g.id});
    for (const auto& i : catalog::identities()) v.push_back({CheckKind::Identity, i.id});
    v.push_back({CheckKind::Recurrence, "fd_recurrence"});
    for (const auto& b : bijections::bijection_names()) v.push_back({CheckKind::Bijection, b});
    v.push_back({CheckKind::Oeis, "oeis"});
    return v;
}

std::vector<Check> resolve_checks(const std::vector<std::string>& names) {
    std::vector<Check> v;
    for (const auto& n : names) {
        const auto& ids = catalog::identities();
        const auto& bij = bijections::bijection_names();
        if (n == "fd_recurrence") {
            v.push_back({CheckKind::Recurrence, n});
        } else if (n == "oeis") {
            v.push_back({CheckKind::Oeis, n});
        } else if (std::any_of(ids.begin(), ids.end(), [&](const auto& i) { return i.id == n; })) {
            v.push_back({CheckKind::Identity, n});
        } else if (std::find(bij.begin(), bij.end(), n) != bij.end()) {
            v.push_back({CheckKind::Bijection, n});
        } else if (const auto* row = oeis::find_row(n); row && row->computed) {
            v.push_back({CheckKind::Oeis, n});
        } else if (row) {
            throw std::invalid_argument(n + " has no fixed sequence reading to compare");
        } else {
            v.push_back({CheckKind::Entry, catalog::find(n).id});
        }
    }
    return v;
}

VerifyTally run_checks(const std::vector<Check>& checks, const VerifyOptions& opt, std::ostream& out) {
    VerifyTally tally;
    for (const auto& c : checks) {
        switch (c.kind) {
            case CheckKind::Entry: check_entry(c.name, opt, tally, out); break;
            case CheckKind::Identity: check_identity(c.name, opt, tally, out); break;
            case CheckKind::Recurrence: check_recurrence(opt, tally, out); break;
            case CheckKind::Bijection: check_bijection(c.name, opt, tally, out); break;
            case CheckKind::Oeis: check_oeis(c.name, opt, tally, out); break;
        }
        out.flush();
    }
    out << "verify: " << tally.passed << " passed, " << tally.failed << " failed, " << tally.errata << " errata, "
        << tally.skipped << " skipped\n";
    return tally;
}

}  // namespace bargraph::cli
