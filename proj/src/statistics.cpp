#include "bargraph/statistics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <climits>
#include <sstream>

#include "bargraph/enumerate.hpp"

namespace bargraph::paths {

namespace {

struct Entry {
    Stat stat;
    std::string_view name;
    bool parametrized;
    std::string_view what;
};

constexpr std::array kEntries = {
    Entry{Stat::NumH, "numH", false, "number of H steps"},
    Entry{Stat::NumU, "numU", false, "number of U steps"},
    Entry{Stat::Semiperimeter, "semi", false, "#U + #H"},
    Entry{Stat::Hfc, "hfc", false, "height of the first column / initial ascent"},
    Entry{Stat::Dr, "dr", false, "double rises UU"},
    Entry{Stat::Df, "df", false, "double falls DD"},
    Entry{Stat::ValleysOfWidth, "v", true, "valleys D H^l U of width l"},
    Entry{Stat::PeaksOfWidth, "p", true, "peaks U H^l D of width l"},
    Entry{Stat::Valleys, "valleys", false, "valleys of any width"},
    Entry{Stat::Hsv, "hsv", false, "H steps in valleys"},
    Entry{Stat::Peaks, "peaks", false, "peaks of any width"},
    Entry{Stat::Hsp, "hsp", false, "H steps in peaks"},
    Entry{Stat::DH, "dh", false, "DH corners"},
    Entry{Stat::HU, "hu", false, "HU corners"},
    Entry{Stat::UH, "uh", false, "UH corners"},
    Entry{Stat::HD, "hd", false, "HD corners"},
    Entry{Stat::Corners, "corners", false, "dh + hu + uh + hd"},
    Entry{Stat::Hs, "hs", false, "horizontal segments"},
    Entry{Stat::Uhs, "uhs", false, "horizontal segments of length 1"},
    Entry{Stat::Fd, "fd", false, "length of the first descent"},
    Entry{Stat::Xfd, "xfd", false, "H steps before the first descent"},
    Entry{Stat::Uc, "uc", false, "columns of height 1"},
    Entry{Stat::ColumnsOfHeight, "ch", true, "columns of height h"},
    Entry{Stat::Iuc, "iuc", false, "initial columns of height 1"},
    Entry{Stat::Lch, "lch", false, "least column height"},
    Entry{Stat::Lhs, "lhs", false, "width of the leftmost horizontal segment"},
    Entry{Stat::Uhu, "uhu", false, "occurrences of UHU"},
    Entry{Stat::Stair, "stair", false, "length in steps of the initial staircase"},
    Entry{Stat::Oh, "oh", false, "columns of odd height"},
    Entry{Stat::Eh, "eh", false, "columns of even height"},
    Entry{Stat::Area, "area", false, "area under the H steps"},
};

const Entry& entry(Stat s) {
    for (const auto& e : kEntries) {
        if (e.stat == s) return e;
    }
    throw UnknownStatistic("?");
}

int count_factor(const std::vector<Step>& st, std::string_view pattern) {
    int n = 0;
    if (st.size() < pattern.size()) return 0;
    for (std::size_t i = 0; i + pattern.size() <= st.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size() && ok; ++j) ok = static_cast<char>(st[i + j]) == pattern[j];
        n += ok;
    }
    return n;
}

int leading_run(const std::vector<Step>& st, std::size_t from, Step s) {
    int n = 0;
    while (from + n < st.size() && st[from + n] == s) ++n;
    return n;
}

// H-runs enclosed by `left` and `right`: returns {count, total H} for width l
// (l == 0 means any width).
std::pair<int, int> enclosed_runs(const PathWord& w, Step left, Step right, int l) {
    int count = 0;
    int total = 0;
    const auto& st = w.steps();
    for (const Run& r : runs(st)) {
        if (r.step != Step::H || r.start == 0 || r.start + r.length >= st.size()) continue;
        if (st[r.start - 1] != left || st[r.start + r.length] != right) continue;
        if (l != 0 && r.length != l) continue;
        ++count;
        total += r.length;
    }
    return {count, total};
}

// Longest prefix of the periodic word a b a b ...
int alternating_prefix(const std::vector<Step>& st, Step a, Step b) {
    int n = 0;
    while (n < static_cast<int>(st.size()) && st[n] == (n % 2 == 0 ? a : b)) ++n;
    return n;
}

}  // namespace

std::string StatId::name() const {
    const Entry& e = entry(stat);
    if (!e.parametrized) return std::string(e.name);
    return std::string(e.name) + "_" + std::to_string(param);
}

StatId StatId::parse(std::string_view text) {
    for (const auto& e : kEntries) {
        if (!e.parametrized) {
            if (text == e.name) return {e.stat, 0};
            continue;
        }
        if (text.size() <= e.name.size() + 1 || text.substr(0, e.name.size()) != e.name ||
            text[e.name.size()] != '_') {
            continue;
        }
        auto digits = text.substr(e.name.size() + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) break;
        return {e.stat, value};
    }
    throw UnknownStatistic(std::string(text));
}

std::vector<std::pair<std::string, std::string>> statistic_registry() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : kEntries) {
        out.emplace_back(std::string(e.name) + (e.parametrized ? (e.stat == Stat::ColumnsOfHeight ? "_h" : "_l") : ""),
                         std::string(e.what));
    }
    return out;
}

int stat(const PathWord& w, std::string_view name) { return stat(w, StatId::parse(name)); }

int stat(const PathWord& w, const StatId& id) {
    const bool bar = w.kind() == Kind::Bargraph;
    const auto& st = w.steps();
    const auto& h = w.heights();
    // Column height of the H step at index i; Motzkin H steps sit one below.
    auto column = [&](std::size_t i) { return h[i] + (bar ? 0 : 1); };
    auto count_columns = [&](auto pred) {
        int n = 0;
        for (std::size_t i = 0; i < st.size(); ++i) n += st[i] == Step::H && pred(column(i));
        return n;
    };

    switch (id.stat) {
        case Stat::NumH: return w.num_h();
        case Stat::NumU: return w.num_u();
        case Stat::Semiperimeter: return w.weight();
        case Stat::Hfc: return leading_run(st, 0, Step::U);
        case Stat::Dr: return count_factor(st, "UU");
        case Stat::Df: return count_factor(st, "DD");
        case Stat::ValleysOfWidth: return enclosed_runs(w, Step::D, Step::U, id.param).first;
        case Stat::PeaksOfWidth: return enclosed_runs(w, Step::U, Step::D, id.param).first;
        case Stat::Valleys: return enclosed_runs(w, Step::D, Step::U, 0).first;
        case Stat::Hsv: return enclosed_runs(w, Step::D, Step::U, 0).second;
        case Stat::Peaks: return enclosed_runs(w, Step::U, Step::D, 0).first;
        case Stat::Hsp: return enclosed_runs(w, Step::U, Step::D, 0).second;
        case Stat::DH: return count_factor(st, "DH");
        case Stat::HU: return count_factor(st, "HU");
        case Stat::UH: return count_factor(st, "UH");
        case Stat::HD: return count_factor(st, "HD");
        case Stat::Corners:
            return count_factor(st, "DH") + count_factor(st, "HU") + count_factor(st, "UH") + count_factor(st, "HD");
        case Stat::Hs: {
            auto rs = runs(st);
            return static_cast<int>(std::count_if(rs.begin(), rs.end(), [](const Run& r) { return r.step == Step::H; }));
        }
        case Stat::Uhs: {
            auto rs = runs(st);
            return static_cast<int>(
                std::count_if(rs.begin(), rs.end(), [](const Run& r) { return r.step == Step::H && r.length == 1; }));
        }
        case Stat::Fd: {
            auto it = std::find(st.begin(), st.end(), Step::D);
            if (it == st.end()) return bar ? 0 : 1;
            const auto start = static_cast<std::size_t>(it - st.begin());
            const int len = leading_run(st, start, Step::D);
            if (!bar && start + len == st.size()) return len + 1;
            return len;
        }
        case Stat::Xfd: {
            auto it = std::find(st.begin(), st.end(), Step::D);
            return static_cast<int>(std::count(st.begin(), it, Step::H));
        }
        case Stat::Uc: return count_columns([](int c) { return c == 1; });
        case Stat::ColumnsOfHeight: return count_columns([&](int c) { return c == id.param; });
        case Stat::Iuc:
            // Leading H-run of the Motzkin word; for a bargraph, of its preimage under Delta.
            return bar ? leading_run(st, 1, Step::H) : leading_run(st, 0, Step::H);
        case Stat::Lch: {
            int least = INT_MAX;
            for (std::size_t i = 0; i < st.size(); ++i) {
                if (st[i] == Step::H) least = std::min(least, h[i]);
            }
            return least == INT_MAX ? 0 : least;
        }
        case Stat::Lhs: {
            auto it = std::find(st.begin(), st.end(), Step::H);
            return it == st.end() ? 0 : leading_run(st, static_cast<std::size_t>(it - st.begin()), Step::H);
        }
        case Stat::Uhu: return count_factor(st, "UHU");
        case Stat::Stair: return bar ? alternating_prefix(st, Step::U, Step::H) : alternating_prefix(st, Step::H, Step::U);
        case Stat::Oh: return count_columns([](int c) { return c % 2 == 1; });
        case Stat::Eh: return count_columns([](int c) { return c % 2 == 0; });
        case Stat::Area: {
            int a = 0;
            for (std::size_t i = 0; i < st.size(); ++i) a += st[i] == Step::H ? h[i] : 0;
            return a;
        }
    }
    throw UnknownStatistic(id.name());
}

std::string_view to_string(Family f) { return f == Family::Bargraph ? "bargraph" : "motzkin"; }

Family parse_family(std::string_view text) {
    if (text == "bargraph" || text == "B") return Family::Bargraph;
    if (text == "motzkin" || text == "M" || text == "cornerless-motzkin") return Family::CornerlessMotzkin;
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

mpz_class StatDistribution::total() const {
    mpz_class t = 0;
    for (const auto& [k, c] : entries) t += c;
    return t;
}

std::string StatDistribution::dump() const {
    std::ostringstream out;
    for (const auto& [k, c] : entries) {
        out << k.num_h << ' ' << k.num_u;
        for (int v : k.values) out << ' ' << v;
        out << ' ' << c.get_str() << '\n';
    }
    return out.str();
}

StatDistribution distribution(Family family, int n, const std::vector<StatId>& stats, int budget) {
    if (n > budget) throw BudgetExceeded(n, budget);
    StatDistribution d;
    d.stats = stats;
    // Small counts accumulate in machine words and are folded into the map at the end.
    std::map<DistKey, std::uint64_t> raw;
    auto visit = [&](const PathWord& w) {
        DistKey k{w.num_h(), w.num_u(), {}};
        k.values.reserve(stats.size());
        for (const auto& s : stats) k.values.push_back(stat(w, s));
        ++raw[std::move(k)];
    };
    if (family == Family::Bargraph) {
        for_each_bargraph(n, visit);
    } else {
        for_each_cornerless_motzkin(n, visit);
    }
    for (auto& [k, c] : raw) d.entries.emplace(k, mpz_class(static_cast<unsigned long>(c)));
    return d;
}

}  // namespace bargraph::paths
