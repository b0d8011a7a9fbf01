#include "bargraph/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bargraph/catalog.hpp"
#include "bargraph/enumerate.hpp"

namespace bargraph::bijections {

using paths::Kind;
using paths::Step;
using paths::StatId;
using Steps = std::vector<Step>;

namespace {

using E = BijectionError::Kind;

int st(const PathWord& w, paths::Stat s) { return paths::stat(w, StatId{s, 0}); }

void require_kind(const PathWord& w, Kind k, const char* what) {
    if (w.kind() != k) throw BijectionError(E::InvalidInput, std::string("expected ") + what + ", got " + w.str());
}

Steps repeat(Step s, int n) { return Steps(static_cast<std::size_t>(std::max(n, 0)), s); }

Steps concat(std::initializer_list<Steps> parts) {
    Steps out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Steps slice(const Steps& s, std::size_t from, std::size_t to) {
    return Steps(s.begin() + static_cast<long>(from), s.begin() + static_cast<long>(to));
}

int leading(const Steps& s, std::size_t from, Step x) {
    int n = 0;
    while (from + n < s.size() && s[from + n] == x) ++n;
    return n;
}

std::size_t first_of(const Steps& s, Step x) {
    return static_cast<std::size_t>(std::find(s.begin(), s.end(), x) - s.begin());
}

// ---------------------------------------------------------------- f

Steps f_rec(const Steps& g) {
    const int num_h = static_cast<int>(std::count(g.begin(), g.end(), Step::H));
    if (num_h == 1) {
        const int a = leading(g, 0, Step::U);
        if (a < 2) throw BijectionError(E::BaseExcluded, "f is not defined on UHD");
        return repeat(Step::H, a - 2);
    }
    // leftmost H at the least H height
    int a = 1 << 30;
    std::size_t q = 0;
    int h = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == Step::H && h < a) {
            a = h;
            q = i;
        }
        h += g[i] == Step::U ? 1 : g[i] == Step::D ? -1 : 0;
    }
    const Steps g1 = slice(g, static_cast<std::size_t>(a), q);
    const Steps g2 = slice(g, q + 1, g.size() - static_cast<std::size_t>(a));
    const Steps u{Step::U}, d{Step::D};
    return concat({repeat(Step::H, a - 1), u, f_rec(concat({u, g1, d})), {Step::H, Step::D},
                   f_rec(concat({u, g2, d}))});
}

Steps f_inv_rec(const Steps& p) {
    const int m = leading(p, 0, Step::H);
    if (static_cast<std::size_t>(m) == p.size()) {
        return concat({repeat(Step::U, m + 2), {Step::H}, repeat(Step::D, m + 2)});
    }
    if (p[m] != Step::U) throw BijectionError(E::InvalidInput, "path dips below the axis");
    std::size_t d = m + 1;
    for (int depth = 1; d < p.size(); ++d) {
        depth += p[d] == Step::U ? 1 : p[d] == Step::D ? -1 : 0;
        if (depth == 0) break;
    }
    if (d >= p.size() || p[d - 1] != Step::H) throw BijectionError(E::InvalidInput, "unmatched U");
    const Steps ug1d = f_inv_rec(slice(p, m + 1, d - 1));
    const Steps ug2d = f_inv_rec(slice(p, d + 1, p.size()));
    const int a = m + 1;
    return concat({repeat(Step::U, a), slice(ug1d, 1, ug1d.size() - 1), {Step::H}, slice(ug2d, 1, ug2d.size() - 1),
                   repeat(Step::D, a)});
}

}  // namespace

// ---------------------------------------------------------------- secondary structures

std::string SecondaryStructure::violation() const {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [i, j] : chords) {
        if (i < 1 || j > n || i >= j) return "chord out of range";
        if (j - i <= 1) return "chord between adjacent vertices";
        if (++seen[i] > 1 || ++seen[j] > 1) return "vertex in two chords";
    }
    for (const auto& [i, k] : chords) {
        for (const auto& [j, l] : chords) {
            if (i < j && j < k && k < l) return "crossing chords";
        }
    }
    return {};
}

std::string SecondaryStructure::str() const {
    std::string out(static_cast<std::size_t>(n), '.');
    for (const auto& [i, j] : chords) {
        out[i - 1] = '(';
        out[j - 1] = ')';
    }
    return out;
}

SecondaryStructure SecondaryStructure::parse(std::string_view text) {
    SecondaryStructure s;
    s.n = static_cast<int>(text.size());
    std::vector<int> open;
    for (int i = 1; i <= s.n; ++i) {
        const char c = text[i - 1];
        if (c == '(') {
            open.push_back(i);
        } else if (c == ')') {
            if (open.empty()) throw BijectionError(E::InvalidInput, "unbalanced dot-bracket string");
            s.chords.emplace_back(open.back(), i);
            open.pop_back();
        } else if (c != '.') {
            throw BijectionError(E::InvalidInput, std::string("bad dot-bracket character '") + c + "'");
        }
    }
    if (!open.empty()) throw BijectionError(E::InvalidInput, "unbalanced dot-bracket string");
    std::sort(s.chords.begin(), s.chords.end());
    if (auto v = s.violation(); !v.empty()) throw BijectionError(E::InvalidInput, v);
    return s;
}

std::vector<SecondaryStructure> brute_force_secondary(int n) {
    std::vector<SecondaryStructure> out;
    std::vector<int> partner(static_cast<std::size_t>(n) + 2, 0);
    std::function<void(int)> rec = [&](int i) {
        while (i <= n && partner[i] != 0) ++i;
        if (i > n) {
            SecondaryStructure s{n, {}};
            for (int a = 1; a <= n; ++a) {
                if (partner[a] > a) s.chords.emplace_back(a, partner[a]);
            }
            if (s.valid()) out.push_back(std::move(s));
            return;
        }
        partner[i] = -1;
        rec(i + 1);
        for (int j = i + 2; j <= n; ++j) {
            if (partner[j] != 0) continue;
            partner[i] = j;
            partner[j] = i;
            rec(i + 1);
            partner[j] = 0;
        }
        partner[i] = 0;
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- delta

PathWord delta(const PathWord& m) {
    require_kind(m, Kind::Motzkin, "a cornerless Motzkin path");
    if (m.empty()) throw BijectionError(E::InvalidInput, "delta needs a nonempty path");
    return PathWord::validate(concat({{Step::U}, m.steps(), {Step::D}}), Kind::Bargraph);
}

PathWord delta_inv(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    return PathWord::validate(slice(g.steps(), 1, g.size() - 1), Kind::Motzkin);
}

// ---------------------------------------------------------------- dr0

SecondaryStructure dr0_to_secondary(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (st(g, paths::Stat::Dr) != 0) throw BijectionError(E::HasDoubleRise, g.str() + " has a double rise");
    const Steps& s = g.steps();
    enum class Block { HU, H, D };
    std::vector<std::pair<Block, int>> blocks;  // with the height of the H, or the start height of the D
    for (std::size_t i = 1; i + 1 < s.size();) {
        if (s[i] == Step::H && i + 2 < s.size() && s[i + 1] == Step::U) {
            blocks.emplace_back(Block::HU, g.height_before(i));
            i += 2;
        } else if (s[i] == Step::H) {
            blocks.emplace_back(Block::H, g.height_before(i));
            ++i;
        } else if (s[i] == Step::D) {
            blocks.emplace_back(Block::D, g.height_before(i));
            ++i;
        } else {
            throw BijectionError(E::HasDoubleRise, "U step outside an HU block");
        }
    }
    SecondaryStructure out{static_cast<int>(blocks.size()), {}};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].first != Block::HU) continue;
        const int h = blocks[i].second;
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[j].first == Block::D && blocks[j].second == h + 1) {
                out.chords.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
                break;
            }
        }
    }
    std::sort(out.chords.begin(), out.chords.end());
    if (auto v = out.violation(); !v.empty()) throw BijectionError(E::InvalidInput, "image violates: " + v);
    return out;
}

PathWord secondary_to_dr0(const SecondaryStructure& s) {
    if (auto v = s.violation(); !v.empty()) throw BijectionError(E::InvalidInput, v);
    std::vector<int> role(static_cast<std::size_t>(s.n) + 1, 0);
    for (const auto& [i, j] : s.chords) {
        role[i] = 1;
        role[j] = -1;
    }
    Steps out{Step::U};
    for (int v = 1; v <= s.n; ++v) {
        if (role[v] == 1) {
            out.push_back(Step::H);
            out.push_back(Step::U);
        } else if (role[v] == -1) {
            out.push_back(Step::D);
        } else {
            out.push_back(Step::H);
        }
    }
    out.push_back(Step::D);
    return PathWord::validate(std::move(out), Kind::Bargraph);
}

// ---------------------------------------------------------------- first descent

FdSplit fd_split_map(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    const int k = st(g, paths::Stat::Fd);
    if (g.weight() < 2 || k < 2) throw BijectionError(E::TooSmall, "needs semiperimeter and first descent at least 2");
    Steps s = g.steps();
    const std::size_t p = first_of(s, Step::D);
    const Step before = s[p - 2];
    s.erase(s.begin() + static_cast<long>(p) - 2);
    if (before == Step::U) s.erase(s.begin() + static_cast<long>(p) - 1);
    return {before == Step::H ? FdCase::H : FdCase::U, PathWord::validate(std::move(s), Kind::Bargraph)};
}

PathWord fd_split_inv(const FdSplit& split) {
    require_kind(split.image, Kind::Bargraph, "a bargraph");
    Steps s = split.image.steps();
    const std::size_t p = first_of(s, Step::D);
    if (split.which == FdCase::H) {
        s.insert(s.begin() + static_cast<long>(p) - 1, Step::H);
    } else {
        s.insert(s.begin() + static_cast<long>(p) + 1, Step::D);
        s.insert(s.begin() + static_cast<long>(p) - 1, Step::U);
    }
    return PathWord::validate(std::move(s), Kind::Bargraph);
}

// ---------------------------------------------------------------- lch / lhs

PathWord lch_strip(const PathWord& g, int h) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (h < 1 || st(g, paths::Stat::Lch) <= h) {
        throw BijectionError(E::PreconditionFailed, "needs least column height above " + std::to_string(h));
    }
    return PathWord::validate(slice(g.steps(), h, g.size() - h), Kind::Bargraph);
}

PathWord lch_unstrip(const PathWord& g, int h) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (h < 1) throw BijectionError(E::PreconditionFailed, "h must be positive");
    return PathWord::validate(concat({repeat(Step::U, h), g.steps(), repeat(Step::D, h)}), Kind::Bargraph);
}

PathWord lhs_strip(const PathWord& g, int h) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (h < 1 || st(g, paths::Stat::Lhs) <= h) {
        throw BijectionError(E::PreconditionFailed, "needs leftmost horizontal segment longer than " + std::to_string(h));
    }
    Steps s = g.steps();
    const auto at = s.begin() + static_cast<long>(first_of(s, Step::H));
    s.erase(at, at + h);
    return PathWord::validate(std::move(s), Kind::Bargraph);
}

PathWord lhs_unstrip(const PathWord& g, int h) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (h < 1) throw BijectionError(E::PreconditionFailed, "h must be positive");
    Steps s = g.steps();
    s.insert(s.begin() + static_cast<long>(first_of(s, Step::H)), static_cast<std::size_t>(h), Step::H);
    return PathWord::validate(std::move(s), Kind::Bargraph);
}

// ---------------------------------------------------------------- phi

bool has_two_rows(const PathWord& g) {
    const auto& h = g.heights();
    return *std::max_element(h.begin(), h.end()) >= 2;
}

PathWord phi(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (!has_two_rows(g)) throw BijectionError(E::SingleRow, g.str() + " has a single row");
    const Steps& s = g.steps();
    const int h = st(g, paths::Stat::Lhs);
    const int first = leading(s, 0, Step::U);
    Steps head;
    std::size_t cut;
    if (first == 1) {
        // U H^h U^i H  ->  U H^(h-1) U^i H H
        const int i = leading(s, 1 + h, Step::U);
        head = concat({{Step::U}, repeat(Step::H, h - 1), repeat(Step::U, i), {Step::H, Step::H}});
        cut = static_cast<std::size_t>(1 + h + i + 1);
    } else {
        // U^(i+1) H^h V  ->  U H^(h-1) U^i H V
        const int i = first - 1;
        head = concat({{Step::U}, repeat(Step::H, h - 1), repeat(Step::U, i), {Step::H}});
        cut = static_cast<std::size_t>(first + h);
    }
    return PathWord::validate(concat({head, slice(s, cut, s.size())}), Kind::Bargraph);
}

PathWord phi_inv(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (!has_two_rows(g)) throw BijectionError(E::SingleRow, g.str() + " has a single row");
    const Steps& s = g.steps();
    const int j = leading(s, 1, Step::H);  // h - 1
    const int i = leading(s, 1 + j, Step::U);
    const std::size_t seg = static_cast<std::size_t>(1 + j + i);
    const int run = leading(s, seg, Step::H);
    Steps head;
    std::size_t cut;
    if (run >= 2) {
        head = concat({{Step::U}, repeat(Step::H, j + 1), repeat(Step::U, i), {Step::H}});
        cut = seg + 2;
    } else {
        head = concat({repeat(Step::U, i + 1), repeat(Step::H, j + 1)});
        cut = seg + 1;
    }
    return PathWord::validate(concat({head, slice(s, cut, s.size())}), Kind::Bargraph);
}

// ---------------------------------------------------------------- f

PathWord f_map(const PathWord& g) {
    require_kind(g, Kind::Bargraph, "a bargraph");
    if (!paths::is_strictly_alternating(g)) {
        throw BijectionError(E::NotStrictlyAlternating, g.str() + " is not strictly alternating");
    }
    if (g.str() == "UHD") throw BijectionError(E::BaseExcluded, "f is not defined on UHD");
    return PathWord::validate(f_rec(g.steps()), Kind::KPath);
}

PathWord f_inv(const PathWord& k) {
    require_kind(k, Kind::KPath, "a K-path");
    return PathWord::validate(f_inv_rec(k.steps()), Kind::Bargraph);
}

// ---------------------------------------------------------------- verification

std::string BijectionReport::str() const {
    std::ostringstream out;
    out << name << " up to " << n_max << ": domain " << domain_size << ", codomain " << codomain_size << ", "
        << roundtrip_failures.size() << " round-trip failures, " << transport_failures.size()
        << " transport failures" << (ok() ? " (ok)" : " (FAILED)") << '\n';
    for (const auto& n : notes) out << "  note: " << n << '\n';
    for (const auto& f : roundtrip_failures) out << "  round trip: " << f << '\n';
    for (const auto& f : transport_failures) out << "  transport: " << f << '\n';
    return out.str();
}

const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names{"delta", "dr0_to_secondary", "fd_split_map", "lch_strip",
                                                "lhs_strip", "phi", "f_map"};
    return names;
}

namespace {

constexpr std::size_t kMaxListed = 20;

void note(std::vector<std::string>& list, std::string msg) {
    if (list.size() < kMaxListed) list.push_back(std::move(msg));
}

// One slice of a bijection: explicit domain and codomain with canonical string keys.
struct Slice {
    std::vector<PathWord> domain;
    std::vector<std::string> codomain;
    std::function<std::string(const PathWord&)> forward;
    std::function<PathWord(const std::string&)> inverse;
    std::function<std::string(const PathWord&, const std::string&)> transport;
};

void check_slice(const Slice& sl, BijectionReport& rep) {
    rep.domain_size += static_cast<long>(sl.domain.size());
    rep.codomain_size += static_cast<long>(sl.codomain.size());
    const std::set<std::string> codomain(sl.codomain.begin(), sl.codomain.end());
    std::map<std::string, std::string> hit;
    for (const auto& x : sl.domain) {
        std::string y;
        try {
            y = sl.forward(x);
        } catch (const std::exception& e) {
            note(rep.roundtrip_failures, x.str() + ": not mapped (" + e.what() + ")");
            continue;
        }
        if (!codomain.count(y)) note(rep.roundtrip_failures, x.str() + " -> " + y + " lies outside the codomain");
        if (auto [it, fresh] = hit.emplace(y, x.str()); !fresh) {
            note(rep.roundtrip_failures, x.str() + " and " + it->second + " share the image " + y);
        }
        try {
            if (!(sl.inverse(y) == x)) note(rep.roundtrip_failures, x.str() + " -> " + y + " does not invert");
        } catch (const std::exception& e) {
            note(rep.roundtrip_failures, y + ": inverse failed (" + e.what() + ")");
        }
        if (sl.transport) {
            if (auto msg = sl.transport(x, y); !msg.empty()) note(rep.transport_failures, x.str() + ": " + msg);
        }
    }
    for (const auto& y : sl.codomain) {
        if (!hit.count(y)) note(rep.roundtrip_failures, y + " is not in the image");
        try {
            if (sl.forward(sl.inverse(y)) != y) note(rep.roundtrip_failures, y + ": forward of inverse differs");
        } catch (const std::exception& e) {
            note(rep.roundtrip_failures, y + ": inverse failed (" + e.what() + ")");
        }
    }
}

std::vector<std::string> words(const std::vector<PathWord>& ws) {
    std::vector<std::string> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

template <typename Pred>
std::vector<PathWord> keep(std::vector<PathWord> ws, Pred p) {
    ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const PathWord& w) { return !p(w); }), ws.end());
    return ws;
}

std::string expect(const char* what, int got, int want) {
    if (got == want) return {};
    return std::string(what) + " is " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string join(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

PathWord bargraph(const std::string& w) { return PathWord::parse(w, Kind::Bargraph); }

}  // namespace

BijectionReport verify_bijection(std::string_view name, int n_max, int budget) {
    BijectionReport rep;
    rep.name = std::string(name);
    rep.n_max = n_max;
    if (n_max > budget) throw paths::BudgetExceeded(n_max, budget);

    if (name == "delta") {
        for (int n = 2; n <= n_max; ++n) {
            check_slice({paths::enumerate_cornerless_motzkin(n - 1), words(paths::enumerate_bargraphs(n)),
                         [](const PathWord& m) { return delta(m).str(); },
                         [](const std::string& y) { return delta_inv(bargraph(y)); },
                         [n](const PathWord& m, const std::string& y) {
                             const PathWord g = bargraph(y);
                             return join({expect("semiperimeter", g.weight(), n),
                                          expect("hfc", st(g, paths::Stat::Hfc), st(m, paths::Stat::Hfc) + 1),
                                          expect("#H", g.num_h(), m.num_h())});
                         }},
                        rep);
        }
    } else if (name == "dr0_to_secondary") {
        for (int n = 1; n <= n_max; ++n) {
            if (n + 1 > budget) throw paths::BudgetExceeded(n + 1, budget);
            auto domain = keep(paths::enumerate_bargraphs(n + 1),
                               [](const PathWord& g) { return st(g, paths::Stat::Dr) == 0; });
            std::vector<std::string> codomain;
            for (const auto& s : brute_force_secondary(n)) codomain.push_back(s.str());
            check_slice({std::move(domain), std::move(codomain),
                         [](const PathWord& g) { return dr0_to_secondary(g).str(); },
                         [](const std::string& y) { return secondary_to_dr0(SecondaryStructure::parse(y)); },
                         [n](const PathWord&, const std::string& y) {
                             auto s = SecondaryStructure::parse(y);
                             return join({expect("vertex count", s.n, n), s.violation()});
                         }},
                        rep);
        }
        rep.notes.push_back("codomain enumerated independently by exhaustive search over partial matchings");
    } else if (name == "fd_split_map") {
        std::vector<std::map<int, std::vector<PathWord>>> by_fd(static_cast<std::size_t>(n_max) + 1);
        for (int n = 2; n <= n_max; ++n) {
            for (auto& g : paths::enumerate_bargraphs(n)) by_fd[n][st(g, paths::Stat::Fd)].push_back(g);
        }
        auto tag = [](FdCase c, const PathWord& w) { return std::string(c == FdCase::H ? "H:" : "U:") + w.str(); };
        for (int n = 3; n <= n_max; ++n) {
            for (int k = 2; k <= n; ++k) {
                std::vector<std::string> codomain;
                for (const auto& w : by_fd[n - 1][k]) codomain.push_back(tag(FdCase::H, w));
                for (const auto& w : by_fd[n - 1][k - 1]) codomain.push_back(tag(FdCase::U, w));
                check_slice({by_fd[n][k], std::move(codomain),
                             [tag](const PathWord& g) {
                                 auto s = fd_split_map(g);
                                 return tag(s.which, s.image);
                             },
                             [](const std::string& y) {
                                 return fd_split_inv({y[0] == 'H' ? FdCase::H : FdCase::U, bargraph(y.substr(2))});
                             },
                             [n, k](const PathWord&, const std::string& y) {
                                 const PathWord img = bargraph(y.substr(2));
                                 const int want = y[0] == 'H' ? k : k - 1;
                                 return join({expect("image semiperimeter", img.weight(), n - 1),
                                              expect("image first descent", st(img, paths::Stat::Fd), want)});
                             }},
                            rep);
            }
        }
    } else if (name == "lch_strip" || name == "lhs_strip") {
        const bool lch = name == "lch_strip";
        const paths::Stat key = lch ? paths::Stat::Lch : paths::Stat::Lhs;
        for (int n = 2; n <= n_max; ++n) {
            for (int h = 1; h <= 3 && n - h >= 2; ++h) {
                auto domain = keep(paths::enumerate_bargraphs(n), [&](const PathWord& g) { return st(g, key) > h; });
                check_slice({std::move(domain), words(paths::enumerate_bargraphs(n - h)),
                             [lch, h](const PathWord& g) { return (lch ? lch_strip(g, h) : lhs_strip(g, h)).str(); },
                             [lch, h](const std::string& y) {
                                 return lch ? lch_unstrip(bargraph(y), h) : lhs_unstrip(bargraph(y), h);
                             },
                             [n, h](const PathWord&, const std::string& y) {
                                 return expect("image semiperimeter", bargraph(y).weight(), n - h);
                             }},
                            rep);
            }
        }
        rep.notes.push_back("h ranges over 1..3");
    } else if (name == "phi") {
        for (int n = 2; n <= n_max; ++n) {
            auto domain = keep(paths::enumerate_bargraphs(n), has_two_rows);
            auto codomain = words(domain);
            check_slice({std::move(domain), std::move(codomain), [](const PathWord& g) { return phi(g).str(); },
                         [](const std::string& y) { return phi_inv(bargraph(y)); },
                         [](const PathWord& g, const std::string& y) {
                             const PathWord img = bargraph(y);
                             return join({expect("#U", img.num_u(), g.num_u()), expect("#H", img.num_h(), g.num_h()),
                                          expect("iuc of the image", st(img, paths::Stat::Iuc),
                                                 st(g, paths::Stat::Lhs) - 1)});
                         }},
                        rep);
        }
    } else if (name == "f_map") {
        std::vector<long> image_counts;
        for (int n = 3; n <= n_max; ++n) {
            auto domain = keep(paths::enumerate_bargraphs(n), paths::is_strictly_alternating);
            image_counts.push_back(static_cast<long>(domain.size()));
            check_slice({std::move(domain), words(paths::enumerate_kpaths(n - 3)),
                         [](const PathWord& g) { return f_map(g).str(); },
                         [](const std::string& y) { return f_inv(PathWord::parse(y, Kind::KPath)); },
                         [](const PathWord& g, const std::string& y) {
                             const PathWord k = PathWord::parse(y, Kind::KPath);
                             return join({expect("#U+#D+1 of the image", k.num_u() + k.num_d() + 1, g.num_h()),
                                          expect("#H+2 of the image", k.num_h() + 2, g.num_u())});
                         }},
                        rep);
        }
        if (n_max >= 3) {
            const auto kz = catalog::to_z(catalog::expand("K", n_max - 3));
            for (int len = 0; len <= n_max - 3; ++len) {
                const auto want = kz.coeff({0, 0, len, 0});
                if (want != image_counts[len]) {
                    note(rep.transport_failures, "length " + std::to_string(len) + ": " +
                                                     std::to_string(image_counts[len]) + " images, K(z,z) has " +
                                                     want.get_str());
                }
            }
            rep.notes.push_back("image counts per length compared with the K(z,z) expansion");
        }
    } else {
        throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
    }
    return rep;
}

std::string apply(std::string_view name, std::string_view word, int param) {
    auto bar = [&] { return PathWord::parse(word, Kind::Bargraph); };
    if (name == "delta") return delta(PathWord::parse(word, Kind::Motzkin)).str();
    if (name == "delta_inv") return delta_inv(bar()).str();
    if (name == "dr0_to_secondary") return dr0_to_secondary(bar()).str();
    if (name == "dr0_to_secondary_inv") return secondary_to_dr0(SecondaryStructure::parse(word)).str();
    if (name == "fd_split_map") {
        auto s = fd_split_map(bar());
        return std::string(s.which == FdCase::H ? "H:" : "U:") + s.image.str();
    }
    if (name == "fd_split_map_inv") {
        if (word.size() < 2 || word[1] != ':' || (word[0] != 'H' && word[0] != 'U')) {
            throw BijectionError(E::InvalidInput, "expected H:<word> or U:<word>");
        }
        return fd_split_inv({word[0] == 'H' ? FdCase::H : FdCase::U, PathWord::parse(word.substr(2), Kind::Bargraph)})
            .str();
    }
    if (name == "lch_strip") return lch_strip(bar(), param).str();
    if (name == "lch_strip_inv") return lch_unstrip(bar(), param).str();
    if (name == "lhs_strip") return lhs_strip(bar(), param).str();
    if (name == "lhs_strip_inv") return lhs_unstrip(bar(), param).str();
    if (name == "phi") return phi(bar()).str();
    if (name == "phi_inv") return phi_inv(bar()).str();
    if (name == "f_map") return f_map(bar()).str();
    if (name == "f_map_inv") return f_inv(PathWord::parse(word, Kind::KPath)).str();
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
}

}  // namespace bargraph::bijections
