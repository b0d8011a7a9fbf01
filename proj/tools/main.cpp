#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bargraph/bijections.hpp"
#include "bargraph/catalog.hpp"
#include "bargraph/enumerate.hpp"
#include "bargraph/oeis.hpp"
#include "bargraph/statistics.hpp"
#include "verify.hpp"

using namespace bargraph;
using nlohmann::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kHardCap = 16;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Tsv, JsonLines };

struct Globals {
    Format format = Format::Text;
    bool unsafe = false;
    std::string oeis_cache;
    bool allow_network = false;
};

int budget(const Globals& g, int n) { return g.unsafe ? std::max(n, kHardCap) : kHardCap; }

void check_cap(const Globals& g, int n, const char* what) {
    if (n < 0) throw UsageError(std::string(what) + " must be nonnegative");
    if (n > kHardCap && !g.unsafe) {
        throw UsageError(std::string(what) + " " + std::to_string(n) + " exceeds the hard cap " +
                         std::to_string(kHardCap) + "; pass --unsafe-cap to override");
    }
}

oeis::Config oeis_config(const Globals& g) {
    auto cfg = oeis::Config::from_environment();
    if (!g.oeis_cache.empty()) cfg.cache_dir = g.oeis_cache;
    if (g.allow_network) cfg.allow_network = true;
    return cfg;
}

std::string coeff_text(const series::Rational& c) {
    return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

// Table output shared by gf and distribution: a header and rows of cells.
void emit(const Globals& g, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    switch (g.format) {
        case Format::Text:
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? " " : "") << r[i];
                std::cout << '\n';
            }
            break;
        case Format::Tsv:
            for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "\t" : "") << header[i];
            std::cout << '\n';
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
                std::cout << '\n';
            }
            break;
        case Format::JsonLines:
            for (const auto& r : rows) {
                json j = json::object();
                for (std::size_t i = 0; i < r.size(); ++i) {
                    const bool integer = r[i].find('/') == std::string::npos && i + 1 < r.size();
                    if (integer) {
                        j[header[i]] = std::stol(r[i]);
                    } else {
                        j[header[i]] = r[i];
                    }
                }
                std::cout << j.dump() << '\n';
            }
            break;
    }
}

paths::Kind family_kind(const std::string& family) {
    if (family == "bargraph") return paths::Kind::Bargraph;
    if (family == "motzkin") return paths::Kind::Motzkin;
    if (family == "kpath") return paths::Kind::KPath;
    throw UsageError("unknown family '" + family + "' (bargraph, motzkin, kpath)");
}

std::function<bool(const paths::PathWord&)> filter_of(const std::string& name) {
    if (name.empty()) return [](const paths::PathWord&) { return true; };
    if (name == "symmetric") return paths::is_symmetric;
    if (name == "weakly-alternating") return paths::is_weakly_alternating;
    if (name == "strictly-alternating") return paths::is_strictly_alternating;
    if (name == "nondecreasing") return paths::is_nondecreasing;
    if (name == "increasing") return paths::is_increasing;
    if (name == "dr0") return [](const paths::PathWord& w) { return paths::stat(w, "dr") == 0; };
    throw UsageError("unknown filter '" + name + "'");
}

int cmd_enumerate(const Globals& g, const std::string& family, int n, const std::string& filter) {
    check_cap(g, n, "--n");
    const auto kind = family_kind(family);
    if (!filter.empty() && kind != paths::Kind::Bargraph) throw UsageError("filters apply to bargraphs only");
    const auto keep = filter_of(filter);
    auto print = [&](const paths::PathWord& w) {
        if (keep(w)) std::cout << w.str() << '\n';
    };
    switch (kind) {
        case paths::Kind::Bargraph: paths::for_each_bargraph(n, print); break;
        case paths::Kind::Motzkin: paths::for_each_cornerless_motzkin(n, print); break;
        default: paths::for_each_kpath(n, print); break;
    }
    return 0;
}

int cmd_stat(const std::string& family, const std::string& word, const std::vector<std::string>& names) {
    const auto kind = family_kind(family);
    const auto w = paths::PathWord::parse(word, kind);
    std::vector<paths::StatId> ids;
    for (const auto& n : names) ids.push_back(paths::StatId::parse(n));
    for (const auto& id : ids) std::cout << id.name() << ' ' << paths::stat(w, id) << '\n';
    return 0;
}

int cmd_distribution(const Globals& g, const std::string& family, int n, const std::vector<std::string>& names) {
    check_cap(g, n, "--n");
    const auto fam = paths::parse_family(family);
    std::vector<paths::StatId> ids;
    for (const auto& s : names) ids.push_back(paths::StatId::parse(s));
    const auto dist = paths::distribution(fam, n, ids, budget(g, n));
    std::vector<std::string> header{"numH", "numU"};
    for (const auto& id : ids) header.push_back(id.name());
    header.push_back("count");
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, c] : dist.entries) {
        std::vector<std::string> r{std::to_string(k.num_h), std::to_string(k.num_u)};
        for (int v : k.values) r.push_back(std::to_string(v));
        r.push_back(c.get_str());
        rows.push_back(std::move(r));
    }
    emit(g, header, rows);
    return 0;
}

int cmd_gf(const Globals& g, const std::string& id, int cap, std::optional<int> param, const std::string& spec) {
    check_cap(g, cap, "--cap");
    const auto& entry = catalog::find(id);
    (void)catalog::resolve_param(entry, param);
    if (!spec.empty() && spec != "z") throw UsageError("unknown specialization '" + spec + "' (z)");
    const bool joint = entry.markers.find("s:") != std::string::npos;
    auto value = catalog::expand(entry.id, cap, param);
    std::vector<std::string> header;
    std::vector<std::tuple<int, int, int, int, std::string>> sorted;
    if (spec == "z") {
        value = catalog::to_z(value);
        header = joint ? std::vector<std::string>{"n", "t", "s", "coeff"} : std::vector<std::string>{"n", "t", "coeff"};
    } else {
        header = joint ? std::vector<std::string>{"x", "y", "t", "s", "coeff"}
                       : std::vector<std::string>{"x", "y", "t", "coeff"};
    }
    for (const auto& [e, c] : value.terms()) sorted.emplace_back(e.x + e.y, e.x, e.t, e.s, coeff_text(c));
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto& [grade, x, t, s, c] : sorted) {
        std::vector<std::string> r;
        if (spec == "z") {
            r = {std::to_string(x), std::to_string(t)};
        } else {
            r = {std::to_string(x), std::to_string(grade - x), std::to_string(t)};
        }
        if (joint) r.push_back(std::to_string(s));
        r.push_back(c);
        rows.push_back(std::move(r));
    }
    emit(g, header, rows);
    return 0;
}

int cmd_verify(const Globals& g, bool all, const std::vector<std::string>& names, int cap) {
    check_cap(g, cap, "--cap");
    if (all == !names.empty()) throw UsageError("verify takes either --all or a list of names");
    const auto checks = all ? cli::all_checks() : cli::resolve_checks(names);
    cli::VerifyOptions opt{cap, budget(g, cap), oeis_config(g)};
    return cli::run_checks(checks, opt, std::cout).ok() ? 0 : kExitFailed;
}

int cmd_bijection_apply(const std::string& name, const std::string& word, int param) {
    std::cout << bijections::apply(name, word, param) << '\n';
    return 0;
}

int cmd_bijection_verify(const Globals& g, const std::string& name, int n) {
    check_cap(g, n, "--n");
    const auto& names = bijections::bijection_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown bijection '" + name + "'");
    const auto rep = bijections::verify_bijection(name, n, budget(g, n));
    std::cout << rep.str();
    return rep.ok() ? 0 : kExitFailed;
}

int cmd_oeis_show(const Globals& g, const std::string& id) {
    const auto seq = oeis::load(id, oeis_config(g));
    std::cout << "# " << seq.id << " (" << oeis::to_string(seq.origin) << ")\n" << oeis::format_bfile(seq);
    return 0;
}

int cmd_oeis_table() {
    for (const auto& r : oeis::table()) {
        std::cout << r.a_number << " | " << r.catalog_id << " | "
                  << (r.shape == oeis::Shape::Triangle ? "triangle" : "sequence") << " | " << r.subject;
        if (!r.note.empty()) std::cout << " | " << r.note;
        std::cout << '\n';
    }
    return 0;
}

const char* kFooter = R"(Output formats (--format):
  text        space-separated columns, no header (default)
  tsv         tab-separated columns with a header row
  json-lines  one JSON object per line, keyed by the tsv header
gf columns: x y t [s] coeff, or n t [s] coeff with --spec z (s only for two-marker entries).
distribution columns: numH numU <stat>... count.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
Environment: BARGRAPH_OEIS_CACHE (b-file cache directory), BARGRAPH_ALLOW_NETWORK=1.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification for bargraphs and cornerless Motzkin paths", "bargraph"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::string format = "text";
    app.add_option("--format", format, "text, tsv or json-lines")
        ->check(CLI::IsMember({"text", "tsv", "json-lines"}));
    app.add_flag("--unsafe-cap", g.unsafe, "allow sizes above the hard cap of 16");
    app.add_option("--oeis-cache", g.oeis_cache, "b-file cache directory");
    app.add_flag("--allow-network", g.allow_network, "fetch missing b-files from oeis.org");

    std::function<int()> run;

    std::string family = "bargraph", filter, word, id, spec, name;
    int n = 0, cap = 10, param_h = 1;
    std::optional<int> param;
    bool all = false;
    std::vector<std::string> names;

    auto* en = app.add_subcommand("enumerate", "list words of one size, one per line");
    en->add_option("family", family, "bargraph, motzkin or kpath")->required();
    en->add_option("--n", n, "semiperimeter (bargraph), #U + #H (motzkin) or length (kpath)")->required();
    en->add_option("--filter", filter,
                   "symmetric, weakly-alternating, strictly-alternating, nondecreasing, increasing or dr0");
    en->callback([&] { run = [&] { return cmd_enumerate(g, family, n, filter); }; });

    auto* st = app.add_subcommand("stat", "statistic values of one word");
    st->add_option("word", word, "ASCII word over U, H, D")->required();
    st->add_option("stats", names, "statistic names, e.g. hfc v_2 ch_3")->required();
    st->add_option("--family", family, "bargraph, motzkin or kpath");
    st->callback([&] { run = [&] { return cmd_stat(family, word, names); }; });

    auto* di = app.add_subcommand("distribution", "joint distribution of statistics at one size");
    di->add_option("family", family, "bargraph or motzkin")->required();
    di->add_option("--n", n, "size")->required();
    di->add_option("--stat", names, "statistic name (repeatable)")->required();
    di->callback([&] { run = [&] { return cmd_distribution(g, family, n, names); }; });

    auto* gf = app.add_subcommand("gf", "expand a catalog generating function");
    gf->add_option("id", id, "catalog id")->required();
    gf->add_option("--cap", cap, "grading cap on deg x + deg y");
    gf->add_option("--param", param, "l or h for parametrized entries");
    gf->add_option("--spec", spec, "z: set x = y = z");
    gf->callback([&] { run = [&] { return cmd_gf(g, id, cap, param, spec); }; });

    auto* ca = app.add_subcommand("catalog", "catalog listings");
    ca->require_subcommand(1);
    ca->add_subcommand("list", "one line per entry: id | markers | forms | description")->callback([&] {
        run = [] {
            std::cout << catalog::list_text();
            return 0;
        };
    });
    ca->add_subcommand("identities", "identities checked by verify")->callback([&] {
        run = [] {
            for (const auto& i : catalog::identities()) std::cout << i.id << " | " << i.statement << '\n';
            return 0;
        };
    });

    auto* ve = app.add_subcommand("verify", "cross-route, oracle, identity, bijection and OEIS checks");
    ve->add_flag("--all", all, "run every check");
    ve->add_option("names", names, "catalog ids, identity ids, fd_recurrence, bijection names, oeis or A-numbers");
    ve->add_option("--cap", cap, "grading cap (two-marker entries use at most 8)");
    ve->callback([&] { run = [&] { return cmd_verify(g, all, names, cap); }; });

    auto* bi = app.add_subcommand("bijection", "apply or verify a bijection");
    bi->require_subcommand(1);
    auto* ba = bi->add_subcommand("apply", "map one word; append _inv to the name for the inverse");
    ba->add_option("name", name)->required();
    ba->add_option("word", word, "ASCII word; fd_split_map_inv takes H:<word> or U:<word>")->required();
    ba->add_option("--param", param_h, "h for the strip maps");
    ba->callback([&] { run = [&] { return cmd_bijection_apply(name, word, param_h); }; });
    auto* bv = bi->add_subcommand("verify", "exhaustive check up to --n");
    bv->add_option("name", name)->required();
    bv->add_option("--n", n, "largest size")->required();
    bv->callback([&] { run = [&] { return cmd_bijection_verify(g, name, n); }; });
    bi->add_subcommand("list", "bijection names")->callback([&] {
        run = [] {
            for (const auto& b : bijections::bijection_names()) std::cout << b << '\n';
            return 0;
        };
    });

    auto* oe = app.add_subcommand("oeis", "OEIS b-files and the sequence table");
    oe->require_subcommand(1);
    auto* os = oe->add_subcommand("show", "print a b-file from fixture, cache or network");
    os->add_option("id", id, "A-number")->required();
    os->callback([&] { run = [&] { return cmd_oeis_show(g, id); }; });
    auto* oc = oe->add_subcommand("compare", "compare computed terms with b-files");
    oc->add_option("ids", names, "A-numbers")->required();
    oc->add_option("--cap", cap, "grading cap");
    oc->callback([&] { run = [&] { return cmd_verify(g, false, names, cap); }; });
    oe->add_subcommand("table", "A-numbers with catalog ids and notes")->callback([&] { run = cmd_oeis_table; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    g.format = format == "tsv" ? Format::Tsv : format == "json-lines" ? Format::JsonLines : Format::Text;

    try {
        return run();
    } catch (const paths::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const catalog::CrossRouteMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const oeis::OeisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == oeis::OeisError::Kind::BadId ? kExitUsage : kExitFailed;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
