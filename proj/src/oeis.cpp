#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "bargraph/oeis.hpp"

#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bargraph/catalog.hpp"

#ifndef BARGRAPH_DATA_DIR
#define BARGRAPH_DATA_DIR "data"
#endif

namespace bargraph::oeis {

namespace fs = std::filesystem;
using E = OeisError::Kind;

std::string_view to_string(Origin o) {
    switch (o) {
        case Origin::Fixture: return "fixture";
        case Origin::Cache: return "cache";
        case Origin::Network: return "network";
    }
    return "?";
}

void check_id(std::string_view id) {
    bool ok = id.size() == 7 && id[0] == 'A';
    for (std::size_t i = 1; ok && i < id.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(id[i])) != 0;
    if (!ok) throw OeisError(E::BadId, "not an OEIS A-number: '" + std::string(id) + "'");
}

OeisSequence parse_bfile(std::string_view id, std::string_view text) {
    OeisSequence s;
    s.id = std::string(id);
    std::istringstream in{std::string(text)};
    std::string line;
    long expected = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        if (!(fields >> index >> value)) {
            throw OeisError(E::ParseError, s.id + " line " + std::to_string(line_no) + ": expected 'index value'");
        }
        mpz_class v;
        if (v.set_str(value, 10) != 0) {
            throw OeisError(E::ParseError, s.id + " line " + std::to_string(line_no) + ": bad value '" + value + "'");
        }
        if (s.terms.empty()) {
            s.offset = static_cast<int>(index);
        } else if (index != expected) {
            throw OeisError(E::ParseError, s.id + " line " + std::to_string(line_no) + ": index " +
                                               std::to_string(index) + " out of sequence");
        }
        expected = index + 1;
        s.terms.push_back(v);
    }
    if (s.terms.empty()) throw OeisError(E::ParseError, s.id + ": no terms");
    return s;
}

std::string format_bfile(const OeisSequence& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.terms.size(); ++i) out << s.offset + static_cast<long>(i) << ' ' << s.terms[i].get_str() << '\n';
    return out.str();
}

Config Config::from_environment() {
    Config c;
    c.fixture_dir = std::string(BARGRAPH_DATA_DIR) + "/oeis";
    if (const char* dir = std::getenv("BARGRAPH_OEIS_CACHE")) c.cache_dir = dir;
    if (const char* net = std::getenv("BARGRAPH_ALLOW_NETWORK")) {
        const std::string v = net;
        c.allow_network = v == "1" || v == "true" || v == "yes";
    }
    return c;
}

namespace {

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fetch(std::string_view id) {
    httplib::SSLClient cli("oeis.org", 443);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    cli.set_follow_location(true);
    const std::string path = "/" + std::string(id) + "/" + bfile_name(id);
    auto res = cli.Get(path);
    if (!res) throw OeisError(E::NetworkError, "fetching " + path + ": " + httplib::to_string(res.error()));
    if (res->status == 404) throw OeisError(E::NotFound, std::string(id) + " not found on oeis.org");
    if (res->status != 200) {
        throw OeisError(E::NetworkError, "fetching " + path + ": HTTP " + std::to_string(res->status));
    }
    return res->body;
}

void store(const fs::path& dir, std::string_view id, const std::string& body) {
    fs::create_directories(dir);
    const fs::path target = dir / bfile_name(id);
    const fs::path tmp = dir / (bfile_name(id) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << body;
    }
    fs::rename(tmp, target);
}

}  // namespace

OeisSequence load(std::string_view id, const Config& cfg) {
    check_id(id);
    if (id == "A000000") throw OeisError(E::NotFound, "A000000 does not exist");
    if (!cfg.fixture_dir.empty()) {
        if (auto text = read_file(fs::path(cfg.fixture_dir) / bfile_name(id))) {
            auto s = parse_bfile(id, *text);
            s.origin = Origin::Fixture;
            return s;
        }
    }
    if (!cfg.cache_dir.empty()) {
        if (auto text = read_file(fs::path(cfg.cache_dir) / bfile_name(id))) {
            auto s = parse_bfile(id, *text);
            s.origin = Origin::Cache;
            return s;
        }
    }
    if (!cfg.allow_network) {
        throw OeisError(E::NetworkDisabled, std::string(id) + " has no fixture or cached b-file and network access is off");
    }
    const std::string body = fetch(id);
    auto s = parse_bfile(id, body);
    s.origin = Origin::Network;
    if (!cfg.cache_dir.empty()) store(cfg.cache_dir, id, body);
    return s;
}

std::string CompareReport::str() const {
    std::ostringstream out;
    out << id << ": ";
    if (ok) {
        out << "match on " << matched << " terms";
        if (shift != 0) out << " at shift " << (shift > 0 ? "+" : "") << shift;
    } else {
        out << "no alignment within shift 3";
        if (mismatch_index) {
            out << "; at shift 0, " << matched << " of " << overlap << " leading terms agree, first mismatch at index "
                << *mismatch_index << " (oeis " << expected << ", computed " << got << ")";
        } else if (overlap > 0) {
            out << "; only " << overlap << " aligned terms";
        }
    }
    return out.str();
}

CompareReport compare(const OeisSequence& seq, const std::vector<mpz_class>& computed, int first_index,
                      std::size_t min_overlap) {
    struct Attempt {
        std::size_t matched = 0;
        std::size_t overlap = 0;
        std::optional<long> mismatch;
    };
    auto attempt = [&](int shift) {
        Attempt a;
        for (std::size_t i = 0; i < computed.size(); ++i) {
            const long oeis_index = first_index + static_cast<long>(i) + shift;
            const long j = oeis_index - seq.offset;
            if (j < 0 || j >= static_cast<long>(seq.terms.size())) continue;
            ++a.overlap;
            if (seq.terms[j] == computed[i]) {
                if (!a.mismatch) ++a.matched;
            } else if (!a.mismatch) {
                a.mismatch = first_index + static_cast<long>(i);
            }
        }
        return a;
    };
    CompareReport rep;
    rep.id = seq.id;
    for (int shift : {0, 1, -1, 2, -2, 3, -3}) {
        const Attempt a = attempt(shift);
        if (!a.mismatch && a.overlap >= min_overlap) {
            rep.ok = true;
            rep.shift = shift;
            rep.matched = a.matched;
            rep.overlap = a.overlap;
            return rep;
        }
    }
    const Attempt a = attempt(0);
    rep.matched = a.matched;
    rep.overlap = a.overlap;
    rep.mismatch_index = a.mismatch;
    if (a.mismatch) {
        const long i = *a.mismatch - first_index;
        rep.expected = seq.terms[i + first_index - seq.offset].get_str();
        rep.got = computed[i].get_str();
    }
    return rep;
}

namespace {

std::function<std::vector<mpz_class>(int)> z_coefficients(std::string id, int from) {
    return [id, from](int cap) {
        const auto z = catalog::to_z(catalog::expand(id, cap));
        std::vector<mpz_class> out;
        for (int n = from; n <= cap; ++n) out.push_back(z.coeff({0, 0, n, 0}).get_num());
        return out;
    };
}

std::vector<TableRow> build_table() {
    const std::string tri = "triangle by semiperimeter and statistic value; row layout not pinned without the b-file";
    const std::string companion = "companion entry of the same row; its exact reading is not stated in the text";
    std::vector<TableRow> t;
    auto row = [&](std::string a, std::string subject, std::string cat, Shape shape, std::string note) {
        t.push_back({std::move(a), std::move(subject), std::move(cat), shape, std::move(note), {}, 0});
    };
    t.push_back({"A082582", "bargraphs by semiperimeter", "B", Shape::Sequence, "", z_coefficients("B", 2), 2});
    row("A273342", "height of the first column", "hfc", Shape::Triangle, tri);
    row("A273343", "height of the first column", "hfc", Shape::Sequence, companion);
    row("A273713", "double rises", "dr", Shape::Triangle, tri);
    row("A273714", "double rises", "dr", Shape::Sequence, companion);
    row("A276066", "double rises and double falls", "dr_df_joint", Shape::Triangle, tri);
    row("A273721", "valleys of width 1", "v_l", Shape::Triangle, tri);
    row("A273722", "valleys of width 1", "v_l", Shape::Sequence, companion);
    row("A273715", "peaks of width 1", "p_l", Shape::Triangle, tri);
    row("A273716", "peaks of width 1", "p_l", Shape::Sequence, companion);
    row("A273717", "DH corners", "corners_joint", Shape::Triangle, tri);
    row("A273718", "DH corners", "corners_joint", Shape::Sequence, companion);
    row("A274486", "horizontal segments", "hs", Shape::Triangle, tri);
    row("A274491", "horizontal segments of length 1", "uhs", Shape::Triangle, tri);
    row("A274492", "horizontal segments of length 1", "uhs", Shape::Sequence, companion);
    row("A276067", "length of the first descent", "fd", Shape::Triangle, tri);
    row("A276068", "length of the first descent", "fd", Shape::Sequence, companion);
    row("A273897", "x-coordinate of the first descent", "xfd", Shape::Triangle, tri);
    row("A273898", "x-coordinate of the first descent", "xfd", Shape::Sequence, companion);
    row("A273899", "columns of height 1", "uc", Shape::Triangle, tri);
    row("A273900", "columns of height 1", "uc", Shape::Sequence, companion);
    row("A274490", "initial columns of height 1", "iuc", Shape::Triangle, tri);
    row("A274488", "least column height and width of the leftmost horizontal segment", "lch", Shape::Triangle,
        tri + "; the same entry serves lhs by equidistribution");
    row("A273896", "occurrences of UHU", "uhu", Shape::Triangle, tri);
    row("A274494", "length of the initial staircase", "stair", Shape::Triangle, tri);
    row("A274495", "length of the initial staircase", "stair", Shape::Sequence, companion);
    row("A273901", "odd-height and even-height columns", "oh_eh", Shape::Triangle, tri);
    row("A273902", "odd-height and even-height columns", "oh_eh", Shape::Sequence, companion);
    row("A273903", "odd-height and even-height columns", "oh_eh", Shape::Triangle, tri);
    row("A273904", "odd-height and even-height columns", "oh_eh", Shape::Sequence, companion);
    row("A273346", "area", "area", Shape::Triangle, tri);
    row("A273347", "area", "area", Shape::Sequence, companion);
    row("A273348", "area", "area", Shape::Sequence, companion);
    t.push_back({"A273905", "symmetric bargraphs", "B_sym", Shape::Sequence, "", z_coefficients("B_sym", 2), 2});
    t.push_back(
        {"A275448", "weakly alternating bargraphs", "B_WA", Shape::Sequence, "", z_coefficients("B_WA", 2), 2});
    t.push_back({"A023342", "strictly alternating bargraphs", "B_SA", Shape::Sequence,
                 "as listed in the table; B_SA(z,z) = z^2 + z^3 K(z,z), so these counts are the A023432 terms "
                 "shifted by 3, and A023342 reads as a digit transposition of A023432",
                 z_coefficients("B_SA", 2), 2});
    t.push_back({"A023432", "Motzkin paths avoiding UD, UU and DD, by length", "K", Shape::Sequence, "",
                 z_coefficients("K", 0), 0});
    return t;
}

}  // namespace

const std::vector<TableRow>& table() {
    static const std::vector<TableRow> t = build_table();
    return t;
}

const TableRow* find_row(std::string_view a_number) {
    for (const auto& r : table()) {
        if (r.a_number == a_number) return &r;
    }
    return nullptr;
}

}  // namespace bargraph::oeis
