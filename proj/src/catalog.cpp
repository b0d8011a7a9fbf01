#include "bargraph/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bargraph/enumerate.hpp"

namespace bargraph::catalog {

using paths::PathWord;
using paths::StatId;
using series::Ring;
using series::SeriesEquation;
using series::SeriesError;
using TS = TruncatedSeries;

namespace {

// ---------------------------------------------------------------- helpers

TS solve_m(const Ring& r) {
    auto x = r.x(), y = r.y();
    // (1 + y(M-1))(1 + xM) = M rearranged as a quadratic in M
    return series::solve_quadratic({x * y, x + y - x * y - 1, 1 - y, 1});
}

TS fixed(const TS& init, const std::function<TS(const TS&)>& step) {
    return series::solve_fixed_point([&](const std::vector<TS>& v) { return std::vector<TS>{step(v[0])}; }, {init})[0];
}

std::vector<TS> fixed_system(std::vector<TS> init, const std::function<std::vector<TS>(const std::vector<TS>&)>& step) {
    return series::solve_fixed_point(step, std::move(init));
}

TS quadratic(const TS& a, const TS& b, const TS& c) { return series::solve_quadratic({a, b, c, 0}); }

Route fe(std::string name, std::function<TS(const Ring&, int)> f, Form form = Form::FunctionalEquation) {
    return {std::move(name), form, [f](const Context& c) { return f(Ring(c.caps), c.param); }, {}, {}};
}

Route quad(std::string name, std::function<TS(const Ring&, int)> f) { return fe(std::move(name), std::move(f), Form::QuadraticEq); }

struct Fraction {
    TS num;
    TS den;
};

// num / (mono * den). Numerator and denominator are built at caps enlarged by
// the monomial, so dividing by it lands exactly on the requested caps.
Route closed(std::string name, Exponents mono, std::function<Fraction(const Ring&, int)> build, bool z_form = false) {
    Route r{std::move(name), Form::ClosedRadical, {}, {}, {}};
    r.check = [mono, build, z_form](const Context& c, const TS& reference) -> Comparison {
        const Caps big{c.caps.total + mono.grade(), c.caps.t + mono.t, c.caps.s + mono.s};
        Fraction f = build(Ring(big), c.param);
        TS q = series::divide_monomial(f.num, mono);
        TS d = f.den.truncate(c.caps);
        TS target = z_form ? to_z(reference) : reference;
        if (d.constant_term() != 0) return {std::move(target), q / d};
        return {std::move(q), d * target};
    };
    return r;
}

Route printed(Route r, std::string note) {
    r.name = "printed-" + r.name;
    r.erratum = std::move(note);
    return r;
}

Caps plain(int n, int) { return {n, 0, 0}; }
Caps one_marker(int n, int) { return {n, n, 0}; }
Caps two_markers(int n, int) { return {n, n, n}; }

OracleSpec oracle_of(Source src, std::vector<OracleMarker> markers = {},
                     std::function<bool(const PathWord&)> filter = {}) {
    return {src, std::move(markers), std::move(filter)};
}

std::function<OracleSpec(int)> bargraphs_by(std::string stat) {
    return [stat](int) { return oracle_of(Source::Bargraphs, {{Var::t, StatId::parse(stat)}}); };
}

TS sigma_tx(const TS& s) {
    return s.map_exponents([](const Exponents& e) { return Exponents{e.t + e.x, e.s, e.x, e.y}; }, s.caps());
}

// x -> x^2, y -> y^2 into caps `out`.
TS squared(const TS& s, Caps out) {
    return s.map_exponents([](const Exponents& e) { return Exponents{e.t, e.s, 2 * e.x, 2 * e.y}; }, out);
}

bool starts_ends(const PathWord& w, char first, char last) {
    return !w.empty() && static_cast<char>(w[0]) == first && static_cast<char>(w[w.size() - 1]) == last;
}

// t marks DH, s marks UH.
TS corners_quadratic(const Ring& r) {
    auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
    return quadratic(t * x, -(1 - x - y + x * y - t * x * y - s * x * y), s * x * y);
}

TS radical_core(const Ring& r) {
    auto x = r.x(), y = r.y();
    return 1 - x - y - x * y - series::sqrt_series((1 - y) * ((1 - x) * (1 - x) - y * (1 + x) * (1 + x)));
}

// ---------------------------------------------------------------- entries

std::vector<GfSpec> build_registry() {
    std::vector<GfSpec> g;

    g.push_back({"M", "cornerless Motzkin paths", Source::Motzkin, "-", "-", "", 0, 0, {}, plain,
                 [](int) { return oracle_of(Source::Motzkin); },
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto x = r.x(), y = r.y();
                         return fixed(r.one(), [&](const TS& m) { return (1 + y * (m - 1)) * (1 + x * m); });
                     }),
                  quad("quadratic", [](const Ring& r, int) { return solve_m(r); })}});

    g.push_back({"B", "bargraphs", Source::Bargraphs, "-", "B = y(M-1)", "", 0, 0, {}, plain,
                 [](int) { return oracle_of(Source::Bargraphs); },
                 {quad("quadratic",
                       [](const Ring& r, int) {
                           auto x = r.x(), y = r.y();
                           return quadratic(x, -(1 - x - y - x * y), x * y);
                       }),
                  fe("delta", [](const Ring& r, int) { return r.y() * (solve_m(r) - 1); }),
                  closed("radical", {0, 0, 1, 0},
                         [](const Ring& r, int) {
                             auto x = r.x(), y = r.y();
                             auto q = 1 - x - y - x * y;
                             return Fraction{q - series::sqrt_series(q * q - 4 * x * x * y), 2 * r.one()};
                         }),
                  closed("semiperimeter", {0, 0, 1, 0},
                         [](const Ring& r, int) {
                             auto z = r.x();
                             auto q = 1 - 2 * z - z * z;
                             return Fraction{q - series::sqrt_series(q * q - 4 * z.pow(3)), 2 * r.one()};
                         },
                         true)}});

    struct StartEnd {
        const char* id;
        char first, last;
        std::function<TS(const TS& x, const TS& m)> formula;
    };
    const StartEnd table[] = {
        {"startend_HH", 'H', 'H', [](const TS& x, const TS& m) { return x + x * x * m; }},
        {"startend_HD", 'H', 'D', [](const TS& x, const TS& m) { return (x - x * x) * m - x; }},
        {"startend_UH", 'U', 'H', [](const TS& x, const TS& m) { return (x - x * x) * m - x; }},
        {"startend_UD", 'U', 'D', [](const TS& x, const TS& m) { return (1 - x) * (1 - x) * m + x - 1; }},
    };
    for (const auto& row : table) {
        const char first = row.first, last = row.last;
        auto formula = row.formula;
        g.push_back({row.id, std::string("cornerless Motzkin paths starting with ") + first + " and ending with " + last,
                     Source::Motzkin, "-", "-", "", 0, 0, {}, plain,
                     [first, last](int) {
                         return oracle_of(Source::Motzkin, {},
                                          [first, last](const PathWord& w) { return starts_ends(w, first, last); });
                     },
                     {fe("table", [formula](const Ring& r, int) { return formula(r.x(), solve_m(r)); },
                         Form::RationalForm)}});
    }

    g.push_back({"hfc", "height of the first column", Source::Bargraphs, "t:hfc", "B = ty(M_hfc - 1)", "", 0, 0, {},
                 one_marker, bargraphs_by("hfc"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto mh = fixed(r.one(), [&](const TS& v) { return (1 + t * y * (v - 1)) * (1 + x * m); });
                         return t * y * (mh - 1);
                     }),
                  quad("quadratic",
                       [](const Ring& r, int) {
                           // the printed equation divided by t^2, solved for B/t
                           auto t = r.t(), x = r.x(), y = r.y();
                           auto a = 1 - t * (1 - x + y + x * y) + t * t * y;
                           auto c = quadratic(a, -(1 - y) * (1 - x - t * y - t * x * y), x * y * (1 - y));
                           return t * c;
                       }),
                  closed("semiperimeter", {},
                         [](const Ring& r, int) {
                             auto t = r.t(), z = r.x();
                             auto root = series::sqrt_series((1 - z) * (1 - 3 * z - z * z - z.pow(3)));
                             auto num = t * (1 - 2 * z - t * z + z * z + t * z.pow(3) - (1 - t * z) * root);
                             return Fraction{num, 2 * (1 - t + t * t * z - t * z * z)};
                         },
                         true)}});

    g.push_back({"dr", "double rises", Source::Bargraphs, "t:dr", "B = y(t(M_dr - 1 - xM_dr) + xM_dr)", "", 0, 0, {},
                 one_marker, bargraphs_by("dr"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) { return y * (t * (m - 1 - x * m) + x * m); };
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                         return piece(m);
                     }),
                  quad("quadratic", [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      return quadratic(x, -(1 - x - t * y - x * y), x * y);
                  })}});

    g.push_back({"dr0", "bargraphs without double rises", Source::Bargraphs, "-", "B_dr at t = 0", "", 0, 0, {}, plain,
                 [](int) {
                     return oracle_of(Source::Bargraphs, {},
                                      [](const PathWord& w) { return paths::stat(w, StatId{paths::Stat::Dr}) == 0; });
                 },
                 {quad("quadratic",
                       [](const Ring& r, int) {
                           auto x = r.x(), y = r.y();
                           return quadratic(x, -(1 - x - x * y), x * y);
                       }),
                  fe("specialization",
                     [](const Ring& r, int) {
                         auto x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) { return y * x * m; };
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                         return piece(m);
                     }),
                  closed("semiperimeter", {0, 0, 1, 0},
                         [](const Ring& r, int) {
                             auto z = r.x();
                             auto root = series::sqrt_series(1 - 2 * z - z * z - 2 * z.pow(3) + z.pow(4));
                             return Fraction{1 - z - z * z - root, 2 * r.one()};
                         },
                         true)}});

    g.push_back({"dr_df_joint", "double rises and double falls", Source::Bargraphs, "t:dr s:df",
                 "B = y[x + x^2M + (t+s)((x-x^2)M - x) + ts((1-x)^2M + x - 1)]", "", 0, 0, {}, two_markers,
                 [](int) {
                     return oracle_of(Source::Bargraphs,
                                      {{Var::t, StatId::parse("dr")}, {Var::s, StatId::parse("df")}});
                 },
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) {
                             return y * (x + x * x * m + (t + s) * ((x - x * x) * m - x) +
                                         t * s * ((1 - x) * (1 - x) * m + x - 1));
                         };
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                         return piece(m);
                     }),
                  quad("quadratic", [](const Ring& r, int) {
                      auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                      return quadratic(x, -(1 - x - (t + s) * x * y - t * s * y + t * s * x * y), x * y);
                  })}});

    auto vp_numerator = [](const Ring& r, int l) {
        auto t = r.t(), z = r.x();
        auto disc = 1 - 4 * z + 2 * z * z + z.pow(4) + 2 * (1 - t) * z.pow(l + 2) * (1 + z * z) +
                    (1 - t) * (1 - t) * z.pow(2 * l + 4);
        return 1 - 2 * z - z * z + (t - 1) * z.pow(l + 2) - series::sqrt_series(disc);
    };

    g.push_back({"v_l", "valleys of width l", Source::Bargraphs, "t:v_l", "B = y(M - 1)", "l", 1, 1, {1, 2, 3, 4},
                 one_marker,
                 [](int l) { return oracle_of(Source::Bargraphs, {{Var::t, StatId{paths::Stat::ValleysOfWidth, l}}}); },
                 {fe("fixed-point",
                     [](const Ring& r, int l) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = fixed(r.one(), [&](const TS& v) {
                             return 1 + x * v + y * (v - 1) +
                                    x * y * (v - 1) * (v + (t - 1) * x.pow(l - 1) * (v - 1 - x * v));
                         });
                         return y * (m - 1);
                     }),
                  quad("quadratic",
                       [](const Ring& r, int l) {
                           auto t = r.t(), x = r.x(), y = r.y();
                           return quadratic(x * (1 - (1 - t) * (1 - x) * x.pow(l - 1)),
                                            -(1 - x - y - x * y - (1 - t) * x.pow(l + 1) * y), x * y);
                       }),
                  printed(quad("quadratic",
                               [](const Ring& r, int l) {
                                   auto t = r.t(), x = r.x(), y = r.y();
                                   return quadratic(1 - (1 - t) * (1 - x) * x.pow(l - 1),
                                                    -(1 - x - y - x * y - (1 - t) * x.pow(l + 1) * y), x * y);
                               }),
                          "leading coefficient printed without its factor x"),
                  closed("semiperimeter", {0, 0, 1, 0},
                         [vp_numerator](const Ring& r, int l) {
                             auto t = r.t(), z = r.x();
                             return Fraction{vp_numerator(r, l), 2 * (1 - (1 - t) * (1 - z) * z.pow(l - 1))};
                         },
                         true)}});

    g.push_back({"p_l", "peaks of width l", Source::Bargraphs, "t:p_l", "B = y(M_p - 1 + (t-1)x^l)", "l", 1, 1,
                 {1, 2, 3, 4}, one_marker,
                 [](int l) { return oracle_of(Source::Bargraphs, {{Var::t, StatId{paths::Stat::PeaksOfWidth, l}}}); },
                 {fe("fixed-point",
                     [](const Ring& r, int l) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) { return y * (m - 1 + (t - 1) * x.pow(l)); };
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                         return piece(m);
                     }),
                  quad("quadratic",
                       [](const Ring& r, int l) {
                           auto t = r.t(), x = r.x(), y = r.y();
                           return quadratic(x, -(1 - x - y - x * y - (1 - t) * x.pow(l + 1) * y),
                                            y * (x - (1 - t) * (1 - x) * x.pow(l)));
                       }),
                  closed("semiperimeter", {0, 0, 1, 0},
                         [vp_numerator](const Ring& r, int l) { return Fraction{vp_numerator(r, l), 2 * r.one()}; },
                         true)}});

    g.push_back({"p_hsp", "peaks and H steps in peaks", Source::Bargraphs, "t:peaks s:hsp",
                 "B = y(M - 1 + tsx/(1-sx) - x/(1-x))", "", 0, 0, {}, two_markers,
                 [](int) {
                     return oracle_of(Source::Bargraphs,
                                      {{Var::t, StatId::parse("peaks")}, {Var::s, StatId::parse("hsp")}});
                 },
                 {fe("fixed-point", [](const Ring& r, int) {
                     auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                     auto extra = t * s * x / (1 - s * x) - x / (1 - x);
                     auto piece = [&](const TS& m) { return y * (m - 1 + extra); };
                     auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                     return piece(m);
                 })}});

    g.push_back({"v_hsv", "valleys and H steps in valleys", Source::Bargraphs, "t:valleys s:hsv", "B = y(M - 1)", "",
                 0, 0, {}, two_markers,
                 [](int) {
                     return oracle_of(Source::Bargraphs,
                                      {{Var::t, StatId::parse("valleys")}, {Var::s, StatId::parse("hsv")}});
                 },
                 {fe("fixed-point", [](const Ring& r, int) {
                     auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                     auto extra = t * s / (1 - s * x) - inverse(1 - x);
                     auto m = fixed(r.one(), [&](const TS& v) {
                         return 1 + x * v + y * (v - 1) + x * y * (v - 1) * (v + extra * (v - 1 - x * v));
                     });
                     return y * (m - 1);
                 })}});

    g.push_back({"corners_joint", "DH and UH corners", Source::Bargraphs, "t:dh s:uh", "B = y(M - 1 + (s-1)xM)", "", 0,
                 0, {}, two_markers,
                 [](int) {
                     return oracle_of(Source::Bargraphs, {{Var::t, StatId::parse("dh")}, {Var::s, StatId::parse("uh")}});
                 },
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) { return m - 1 + (s - 1) * x * m; };
                         auto m = fixed(r.one(),
                                        [&](const TS& v) { return 1 + x * v + y * piece(v) * (1 + t * x * v); });
                         return y * piece(m);
                     }),
                  quad("quadratic", [](const Ring& r, int) { return corners_quadratic(r); })}});

    g.push_back({"total_corners", "total number of corners (u stored in t); param 1 adds the two bottom corners",
                 Source::Bargraphs, "t:corners", "B_corners(u^2, u^2, x, y)", "variant", 0, 0, {0, 1},
                 [](int n, int) { return Caps{n, 2 * n + 2, 0}; },
                 [](int variant) {
                     return oracle_of(Source::Bargraphs, {{Var::t, StatId::parse("corners"), variant == 1 ? 2 : 0}});
                 },
                 {quad("quadratic",
                       [](const Ring& r, int variant) {
                           auto u2 = r.t() * r.t(), x = r.x(), y = r.y();
                           auto b = quadratic(u2 * x, -(1 - x - y + x * y - 2 * u2 * x * y), u2 * x * y);
                           return variant == 1 ? u2 * b : b;
                       }),
                  fe("from-joint",
                     [](const Ring& r, int variant) {
                         const Caps c = r.caps();
                         const int n = c.total;
                         auto joint = corners_quadratic(Ring({n, n, n}));
                         auto b = joint.map_exponents(
                             [variant](const Exponents& e) {
                                 return Exponents{2 * (e.t + e.s) + (variant == 1 ? 2 : 0), 0, e.x, e.y};
                             },
                             c);
                         return b;
                     },
                     Form::Substitution),
                  closed("radical", {2, 0, 1, 0}, [](const Ring& r, int variant) {
                      auto u2 = r.t() * r.t(), x = r.x(), y = r.y();
                      auto k = 1 - 2 * u2;
                      auto root = series::sqrt_series((1 - y) *
                                                      (1 - 2 * x - y + (2 - 4 * u2) * x * y + x * x - k * k * x * x * y));
                      auto num = 1 - x - y + k * x * y - root;
                      return Fraction{variant == 1 ? u2 * num : num, 2 * r.one()};
                  })}});

    g.push_back({"nondecreasing", "bargraphs with weakly increasing column heights", Source::Bargraphs, "-",
                 "no DH factor", "", 0, 0, {}, plain,
                 [](int) { return oracle_of(Source::Bargraphs, {}, paths::is_nondecreasing); },
                 {fe("rational",
                     [](const Ring& r, int) {
                         auto x = r.x(), y = r.y();
                         return x * y / (1 - x - y);
                     },
                     Form::RationalForm),
                  quad("corners", [](const Ring& r, int) {
                      // corners_joint at t = 0, s = 1
                      auto x = r.x(), y = r.y();
                      return quadratic(r.zero(), -(1 - x - y + x * y - x * y), x * y);
                  })}});

    g.push_back({"increasing", "bargraphs with strictly increasing column heights", Source::Bargraphs, "-",
                 "no DH or HH factor", "", 0, 0, {}, plain,
                 [](int) { return oracle_of(Source::Bargraphs, {}, paths::is_increasing); },
                 {fe("rational", [](const Ring& r, int) {
                      auto x = r.x(), y = r.y();
                      return x * y / (1 - y - x * y);
                  }, Form::RationalForm)}});

    g.push_back({"hs", "horizontal segments", Source::Bargraphs, "t:hs", "B = y(M - 1)", "", 0, 0, {}, one_marker,
                 bargraphs_by("hs"),
                 {fe("system",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         // v[0] = M, v[1] = paths ending in H
                         auto v = fixed_system({r.one(), r.zero()}, [&](const std::vector<TS>& u) {
                             const TS& m = u[0];
                             const TS& mh = u[1];
                             return std::vector<TS>{1 + mh + y * (m - 1) * (1 + mh), x * (t * (m - mh) + mh)};
                         });
                         return y * (v[0] - 1);
                     }),
                  closed("radical", {1, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto k = 1 - 2 * t;
                      auto root = series::sqrt_series(
                          (1 - y) * (1 - 2 * x - y + x * x + (2 - 4 * t) * x * y - k * k * x * x * y));
                      return Fraction{1 - x - y + x * y - 2 * t * x * y - root, 2 * r.one()};
                  })}});

    g.push_back({"uhs", "horizontal segments of length one", Source::Bargraphs, "t:uhs", "B = y(M - 1)", "", 0, 0, {},
                 one_marker, bargraphs_by("uhs"),
                 {fe("system",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         // v[0] = M, v[1] = ending in a single H (unmarked), v[2] = ending in HH
                         auto v = fixed_system({r.one(), r.zero(), r.zero()}, [&](const std::vector<TS>& u) {
                             const TS& m = u[0];
                             const TS& n1 = u[1];
                             const TS& m2 = u[2];
                             auto tail = 1 + t * n1 + m2;
                             return std::vector<TS>{tail + y * (m - 1) * tail, x * (m - t * n1 - m2), x * (n1 + m2)};
                         });
                         return y * (v[0] - 1);
                     }),
                  quad("quadratic", [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto w = t + x - t * x;
                      return quadratic(x * w, -(1 - x - y + x * y - 2 * x * y * w), x * y * w);
                  })}});

    g.push_back({"fd", "length of the first descent", Source::Bargraphs, "t:fd", "B = y(M_fd - t)", "", 0, 0, {},
                 one_marker, bargraphs_by("fd"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto mi = t * x / (1 - x - t * y);
                         auto mf = fixed(t, [&](const TS& v) {
                             return t + x * v + y * (v - t + (t - 1) * mi) + y * (v - t) * x * m;
                         });
                         return y * (mf - t);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      return Fraction{t * (1 - x - y) * radical_core(r), 2 * (1 - x - t * y)};
                  })}});

    g.push_back({"xfd", "H steps before the first descent", Source::Bargraphs, "t:xfd", "B = y(M_xfd - 1)", "", 0, 0,
                 {}, one_marker, bargraphs_by("xfd"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto mb = solve_m(r);
                         auto m = fixed(r.one(), [&](const TS& v) {
                             return 1 + t * x * v + y * (v - 1) + x * y * (v - 1) * mb;
                         });
                         return y * (m - 1);
                     }),
                  closed("radical", {}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto root = series::sqrt_series((1 - y) * (1 - 2 * x - y - 2 * x * y + x * x - x * x * y));
                      auto num = t * y * (1 + x - y - 2 * t * x - x * y - root);
                      return Fraction{num, 2 * (1 - t - (1 - t) * y + (t * t - t) * x + t * x * y)};
                  })}});

    g.push_back({"uc", "columns of height one", Source::Bargraphs, "t:uc", "B = y(M_uc - 1)", "", 0, 0, {}, one_marker,
                 bargraphs_by("uc"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto mu = fixed(r.one(), [&](const TS& v) { return (1 + y * (m - 1)) * (1 + t * x * v); });
                         return y * (mu - 1);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto root = series::sqrt_series((1 - y) * (1 - 2 * x - y - 2 * x * y + x * x - x * x * y));
                      auto num = y * (1 - x - y - x * y + 2 * t * (1 - t) * x * x * (1 - y) - root);
                      return Fraction{num, 2 * (1 - t + t * y + (t * t - t) * x * (1 - y))};
                  })}});

    g.push_back({"ch_h", "columns of height h", Source::Bargraphs, "t:ch_h", "B = y(M_h - 1)", "h", 1, 1, {1, 2, 3, 4},
                 one_marker,
                 [](int h) { return oracle_of(Source::Bargraphs, {{Var::t, StatId{paths::Stat::ColumnsOfHeight, h}}}); },
                 {fe("motzkin-recurrence",
                     [](const Ring& r, int h) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto mh = fixed(r.one(), [&](const TS& v) { return (1 + y * (m - 1)) * (1 + t * x * v); });
                         for (int k = 2; k <= h; ++k) mh = inverse(inverse(1 + y * (mh - 1)) - x);
                         return y * (mh - 1);
                     },
                     Form::Recurrence),
                  fe("bargraph-recurrence",
                     [](const Ring& r, int h) {
                         const Caps c = r.caps();
                         Ring top({c.total + h - 1, c.t, c.s});
                         auto t = top.t(), x = top.x(), y = top.y();
                         auto m = solve_m(top);
                         auto mu = fixed(top.one(), [&](const TS& v) { return (1 + y * (m - 1)) * (1 + t * x * v); });
                         TS b = y * (mu - 1);
                         for (int k = 2; k <= h; ++k) {
                             Ring lv(b.caps());
                             auto lx = lv.x();
                             b = series::divide_monomial(lv.y() * (inverse(1 - lx - lx * b) - 1 - lx), {0, 0, 1, 0});
                         }
                         return b;
                     },
                     Form::Recurrence)}});

    g.push_back({"iuc", "initial columns of height one", Source::Bargraphs, "t:iuc", "B = y(M_iuc - 1)", "", 0, 0, {},
                 one_marker, bargraphs_by("iuc"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto mb = solve_m(r);
                         auto m = fixed(r.one(), [&](const TS& v) {
                             return 1 + t * x * v + y * (mb - 1) + x * y * (mb - 1) * mb;
                         });
                         return y * (m - 1);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto root = series::sqrt_series((1 - y) * ((1 - x) * (1 - x) - y * (1 + x) * (1 + x)));
                      auto num = 1 - 2 * x - y + x * x + (2 * t - 1) * x * x * y - (1 - x) * root;
                      return Fraction{num, 2 * (1 - t * x)};
                  })}});

    g.push_back({"lch", "least column height", Source::Bargraphs, "t:lch", "B = ty(M_lch - 1)", "", 0, 0, {},
                 one_marker, bargraphs_by("lch"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto ml = fixed(r.one(), [&](const TS& v) {
                             return 1 + x * m + t * y * (v - 1) + x * y * (m - 1) * m;
                         });
                         return t * y * (ml - 1);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), y = r.y();
                      return Fraction{t * (1 - y) * radical_core(r), 2 * (1 - t * y)};
                  })}});

    g.push_back({"lhs", "width of the leftmost horizontal segment", Source::Bargraphs, "t:lhs", "B = y(M_lhs - 1)", "",
                 0, 0, {}, one_marker, bargraphs_by("lhs"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto lead = t * x * (1 - x) / (1 - t * x) * m;
                         auto ml = fixed(r.one(), [&](const TS& v) {
                             return 1 + lead + y * (v - 1) + x * y * (v - 1) * m;
                         });
                         return y * (ml - 1);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x();
                      return Fraction{t * (1 - x) * radical_core(r), 2 * (1 - t * x)};
                  })}});

    g.push_back({"uhu", "occurrences of UHU", Source::Bargraphs, "t:uhu", "B = y(M - 1 + (t-1)x(M - 1 - xM))", "", 0, 0,
                 {}, one_marker, bargraphs_by("uhu"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto piece = [&](const TS& m) { return y * (m - 1 + (t - 1) * x * (m - 1 - x * m)); };
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + piece(v)) * (1 + x * v); });
                         return piece(m);
                     }),
                  quad("quadratic", [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      return quadratic(x, -(1 - x - y - t * x * y), x * y);
                  })}});

    g.push_back({"stair", "length of the initial staircase", Source::Bargraphs, "t:stair", "B = ty(M_s - 1)", "", 0, 0,
                 {}, one_marker, bargraphs_by("stair"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto ms = fixed(r.one(), [&](const TS& v) {
                             return 1 + t * x + t * x * x * m + t * t * x * y * (v - 1) * (1 + x * m) +
                                    y * (m - 1) * (1 + x * m);
                         });
                         return t * y * (ms - 1);
                     }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto t = r.t(), x = r.x(), y = r.y();
                      auto t2 = t * t;
                      auto rr = 1 - 2 * x - y + (1 + t) * x * x - t2 * x * y + (t2 + t - 1) * x * x * y +
                                t2 * x * y * y - t * x.pow(3) + (t - 2 * t2 * t) * x.pow(3) * y + t2 * x * x * y * y;
                      auto root = series::sqrt_series((1 - y) * (1 - 2 * x - y + x * x - 2 * x * y - x * x * y));
                      auto num = t * (rr - (1 - x + t * x * x - t2 * x * y) * root);
                      auto den = 2 * (1 - t2 * x + t2 * x * x - t2 * x * y + (t2 * t2 - t2) * x * x * y);
                      return Fraction{num, den};
                  })}});

    g.push_back({"oh_eh", "columns of odd and of even height", Source::Bargraphs, "t:oh s:eh", "B = y(A - 1)", "", 0,
                 0, {}, two_markers,
                 [](int) {
                     return oracle_of(Source::Bargraphs, {{Var::t, StatId::parse("oh")}, {Var::s, StatId::parse("eh")}});
                 },
                 {fe("system",
                     [](const Ring& r, int) {
                         auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                         auto v = fixed_system({r.one(), r.one()}, [&](const std::vector<TS>& u) {
                             return std::vector<TS>{(1 + y * (u[1] - 1)) * (1 + t * x * u[0]),
                                                    (1 + y * (u[0] - 1)) * (1 + s * x * u[1])};
                         });
                         return y * (v[0] - 1);
                     }),
                  closed("radical", {0, 0, 1, 0},
                         [](const Ring& r, int) {
                             auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                             auto y2 = y * y, st = s * t;
                             auto root = series::sqrt_series((1 - y) * (1 + y - s * x * (1 - y)) *
                                                             (1 + y - t * x * (1 - y)) *
                                                             (1 - y - (s + t) * x * (1 + y) + st * x * x * (1 - y)));
                             auto num = 1 - y2 - (s + t) * x * (1 + y2) + st * x * x * (1 - y2) - root;
                             return Fraction{num, 2 * (s + t * y - st * x * (1 - y))};
                         }),
                  printed(closed("radical", {0, 0, 0, 1}, [](const Ring& r, int) {
                      auto t = r.t(), s = r.s(), x = r.x(), y = r.y();
                      auto y2 = y * y;
                      auto inner = 1 - t * x - 2 * s * y + 2 * t * (s - 1) * x * y + (s * s - 1) * y2 -
                                   t * (s * s + 1) * x * y2 - 2 * s * y.pow(3) + 2 * t * s * (s - 1) * x * y.pow(3) -
                                   s * s * y.pow(4) - s * s * t * x * y.pow(4);
                      auto root = series::sqrt_series((1 - y) * (1 - t * x + y + t * x * y) * inner);
                      auto num = (1 - t * x) * (1 - s * y) - (1 + t * x) * (1 + s * y) * y2 - root;
                      return Fraction{num, 2 * (s + t * (1 - s) * x + t * s * x * y)};
                  }), "printed closed form solves the system with sy in place of sx")}});

    g.push_back({"area", "area", Source::Bargraphs, "t:area", "B = y(M(x -> tx) - 1)", "", 0, 0, {},
                 [](int n, int) { return Caps{n, n * n / 4, 0}; }, bargraphs_by("area"),
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto x = r.x(), y = r.y();
                         auto m = fixed(r.one(), [&](const TS& v) { return (1 + y * (sigma_tx(v) - 1)) * (1 + x * v); });
                         return y * (sigma_tx(m) - 1);
                     }),
                  fe("continued-fraction",
                     [](const Ring& r, int) {
                         auto t = r.t(), x = r.x(), y = r.y();
                         const int n = std::max(1, r.caps().total);
                         std::vector<series::CfLevel> levels;
                         for (int k = 1; k <= n; ++k) {
                             if (k < n) {
                                 levels.push_back({y, -(t.pow(k) * x)});
                                 levels.push_back({r.one(), 1 - y});
                             } else {
                                 levels.push_back({y, 1 - t.pow(k) * x});
                             }
                         }
                         return series::continued_fraction(levels, 2 * n - 1) - y;
                     },
                     Form::ContinuedFraction)}});

    g.push_back({"P_h", "cornerless Motzkin prefixes ending at height h", Source::Prefixes, "-",
                 "P_h = y P_{h-1} / (1 - x - xy(M - 1))", "h", 0, 0, {0, 1, 2, 3}, plain,
                 [](int) { return oracle_of(Source::Prefixes); },
                 {fe("recurrence",
                     [](const Ring& r, int h) {
                         auto x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto w = 1 - x - x * y * (m - 1);
                         TS p = m;
                         for (int k = 1; k <= h; ++k) p = y * p / w;
                         return p;
                     },
                     Form::Recurrence),
                  fe("rational",
                     [](const Ring& r, int h) {
                         auto x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto w = 1 - x - x * y * (m - 1);
                         return y.pow(h) * m / w.pow(h);
                     },
                     Form::RationalForm)}});

    g.push_back({"B_sym", "symmetric bargraphs", Source::Bargraphs, "-", "B = y(x + x^2) sum_h P_h(x^2, y^2) / y^h", "",
                 0, 0, {}, plain, [](int) { return oracle_of(Source::Bargraphs, {}, paths::is_symmetric); },
                 {fe("geometric",
                     [](const Ring& r, int) {
                         const Caps c = r.caps();
                         auto x = r.x(), y = r.y();
                         auto m2 = squared(solve_m(Ring({c.total / 2, 0, 0})), c);
                         auto w = 1 - x * x - x * x * y * y * (m2 - 1);
                         return y * (x + x * x) * m2 / (1 - y / w);
                     }, Form::RationalForm),
                  fe("prefix-sum",
                     [](const Ring& r, int) {
                         const Caps c = r.caps();
                         auto x = r.x(), y = r.y();
                         auto m = solve_m(r);
                         auto w = 1 - x - x * y * (m - 1);
                         TS sum = r.zero();
                         TS p = m;
                         for (int h = 0; h <= c.total; ++h) {
                             if (h > 0) p = y * p / w;
                             auto lifted = squared(p, {c.total + h, 0, 0});
                             sum += series::divide_monomial(lifted, {0, 0, 0, h});
                         }
                         return y * (x + x * x) * sum;
                     },
                     Form::Recurrence),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto x = r.x(), y = r.y();
                      auto x2 = x * x, y2 = y * y;
                      auto root = series::sqrt_series((1 - y2) * ((1 - x2) * (1 - x2) - y2 * (1 + x2) * (1 + x2)));
                      auto num = (1 + x) * (root - 1 + x2 + y2 + 2 * x2 * y + x2 * y2);
                      return Fraction{num, 2 * (1 - y - x2 - x2 * y)};
                  })}});

    auto b_wa = [](const Ring& r) {
        auto x = r.x(), y = r.y();
        auto lambda = [&](const TS& w) { return (1 - x) * (1 - x) * w + x - 1 + x / (1 - x); };
        auto mw = fixed(r.one(), [&](const TS& w) { return (1 + y * lambda(w)) * (1 + x * w); });
        return y * lambda(mw);
    };

    g.push_back({"B_WA", "weakly alternating bargraphs", Source::Bargraphs, "-", "B = y M_Lambda", "", 0, 0, {}, plain,
                 [](int) { return oracle_of(Source::Bargraphs, {}, paths::is_weakly_alternating); },
                 {fe("fixed-point", [b_wa](const Ring& r, int) { return b_wa(r); }),
                  closed("radical", {0, 0, 1, 0}, [](const Ring& r, int) {
                      auto x = r.x(), y = r.y();
                      auto a = (1 - x) * (1 - x);
                      auto root = series::sqrt_series((a - y) * (a - y * (1 - 2 * x) * (1 - 2 * x)));
                      return Fraction{1 - 2 * x - y + 2 * x * y + x * x - root, 2 * (1 - x)};
                  })}});

    auto sa_root = [](const Ring& r) {
        auto x = r.x(), y = r.y();
        auto x2 = x * x, y2 = y * y;
        return series::sqrt_series(1 - 2 * y + y2 - 2 * x2 * y - 2 * x2 * y2 + x2 * x2 * y2);
    };

    g.push_back({"B_SA", "strictly alternating bargraphs", Source::Bargraphs, "-", "B_WA(x/(1+x), y)", "", 0, 0, {},
                 plain, [](int) { return oracle_of(Source::Bargraphs, {}, paths::is_strictly_alternating); },
                 {fe("substitution",
                     [b_wa](const Ring& r, int) {
                         auto x = r.x();
                         return series::substitute(b_wa(r), Var::x, x / (1 + x));
                     },
                     Form::Substitution),
                  closed("radical", {0, 0, 1, 0}, [sa_root](const Ring& r, int) {
                      auto x = r.x(), y = r.y();
                      return Fraction{1 - y + x * x * y - sa_root(r), 2 * r.one()};
                  })}});

    g.push_back({"K", "Motzkin paths avoiding UD, UU and DD (x marks U and D, y marks H)", Source::KPaths, "-",
                 "K = (B_SA - xy) / xy^2", "", 0, 0, {}, plain, [](int) { return oracle_of(Source::KPaths); },
                 {fe("fixed-point",
                     [](const Ring& r, int) {
                         auto x = r.x(), y = r.y();
                         return fixed(r.one(), [&](const TS& k) { return 1 + y * k + x * x * (y + y * y * k) * k; });
                     }),
                  closed("radical", {0, 0, 2, 2}, [sa_root](const Ring& r, int) {
                      auto x = r.x(), y = r.y();
                      return Fraction{1 - y - x * x * y - sa_root(r), 2 * r.one()};
                  })}});

    return g;
}

}  // namespace

}  // namespace bargraph::catalog

namespace bargraph::catalog {

namespace {

std::string short_diff(const TS& a, const TS& b) {
    if (!(a.caps() == b.caps())) return "caps differ: " + a.caps().str() + " vs " + b.caps().str();
    auto d = series::first_difference(a, b);
    if (!d) return {};
    return "first difference at " + series::to_string(*d) + ": " + a.coeff(*d).get_str() + " vs " +
           b.coeff(*d).get_str();
}

const GfSpec* lookup(std::string_view id) {
    if (id == "area_cf") id = "area";
    for (const auto& g : registry()) {
        if (g.id == id) return &g;
    }
    return nullptr;
}

void visit_source(Source src, int cap, int param, const paths::PathVisitor& visit) {
    switch (src) {
        case Source::Bargraphs:
            for (int n = 2; n <= cap; ++n) paths::for_each_bargraph(n, visit);
            break;
        case Source::Motzkin:
            for (int n = 0; n <= cap; ++n) paths::for_each_cornerless_motzkin(n, visit);
            break;
        case Source::KPaths:
            for (int n = 0; n <= cap; ++n) paths::for_each_kpath(n, visit);
            break;
        case Source::Prefixes:
            for (int n = 0; n <= cap; ++n) paths::for_each_prefix(n, param, visit);
            break;
    }
}

}  // namespace

std::string_view to_string(Form f) {
    switch (f) {
        case Form::FunctionalEquation: return "functional-equation";
        case Form::QuadraticEq: return "quadratic";
        case Form::ClosedRadical: return "closed-radical";
        case Form::RationalForm: return "rational";
        case Form::Recurrence: return "recurrence";
        case Form::ContinuedFraction: return "continued-fraction";
        case Form::Substitution: return "substitution";
    }
    return "?";
}

std::vector<Form> GfSpec::forms() const {
    std::vector<Form> out;
    for (const auto& r : routes) {
        if (std::find(out.begin(), out.end(), r.form) == out.end()) out.push_back(r.form);
    }
    return out;
}

const std::vector<GfSpec>& registry() {
    static const std::vector<GfSpec> g = build_registry();
    return g;
}

const GfSpec& find(std::string_view id) {
    if (const GfSpec* g = lookup(id)) return *g;
    throw UnknownId(std::string(id));
}

int resolve_param(const GfSpec& g, std::optional<int> param) {
    if (!param) return g.default_param;
    if (!g.parametrized()) throw std::invalid_argument(g.id + " takes no parameter");
    if (*param < g.min_param) {
        throw std::invalid_argument(g.id + ": " + g.param_name + " must be at least " + std::to_string(g.min_param));
    }
    if (g.id == "total_corners" && *param > 1) throw std::invalid_argument("total_corners: variant is 0 or 1");
    return *param;
}

Caps caps_for(const GfSpec& g, int cap, int param) {
    if (cap < 0 || cap > series::kMaxExponent / 2) throw std::invalid_argument("cap out of range");
    return g.caps(cap, param);
}

bool CrossRouteReport::ok() const {
    return std::all_of(routes.begin(), routes.end(), [](const RouteOutcome& r) { return r.ok || !r.erratum.empty(); });
}

std::vector<const RouteOutcome*> CrossRouteReport::errata() const {
    std::vector<const RouteOutcome*> out;
    for (const auto& r : routes) {
        if (!r.ok && !r.erratum.empty()) out.push_back(&r);
    }
    return out;
}

std::string CrossRouteReport::str() const {
    std::ostringstream out;
    out << id;
    if (find(id).parametrized()) out << " (" << find(id).param_name << " = " << param << ")";
    out << " cap " << cap << ": " << (ok() ? "agree" : "MISMATCH") << '\n';
    for (const auto& r : routes) {
        const char* tag = r.ok ? "ok     " : (r.erratum.empty() ? "FAIL   " : "ERRATUM");
        out << "  " << tag << ' ' << r.route << " [" << to_string(r.form) << "]";
        if (!r.detail.empty()) out << ' ' << r.detail;
        if (!r.ok && !r.erratum.empty()) out << "\n          " << r.erratum;
        out << '\n';
    }
    return out.str();
}

CrossRouteReport cross_route(std::string_view id, int cap, std::optional<int> param) {
    const GfSpec& g = find(id);
    CrossRouteReport rep;
    rep.id = g.id;
    rep.cap = cap;
    rep.param = resolve_param(g, param);
    const Context ctx{caps_for(g, cap, rep.param), rep.param};

    std::optional<TS> reference;
    for (const auto& route : g.routes) {
        if (!route.series) continue;
        try {
            reference = route.series(ctx);
        } catch (const std::exception& e) {
            rep.routes.push_back({route.name, route.form, false, e.what(), {}});
        }
        break;
    }
    if (!reference) {
        if (rep.routes.empty()) rep.routes.push_back({"-", Form::FunctionalEquation, false, "no expansion route", {}});
        return rep;
    }
    bool first = true;
    for (const auto& route : g.routes) {
        RouteOutcome o{route.name, route.form, false, {}, route.erratum};
        try {
            if (route.series) {
                if (first) {
                    first = false;
                    o.ok = true;
                    o.detail = "reference";
                    rep.routes.push_back(o);
                    continue;
                }
                o.detail = short_diff(*reference, route.series(ctx));
            } else {
                Comparison c = route.check(ctx, *reference);
                o.detail = short_diff(c.expected, c.actual);
            }
            o.ok = o.detail.empty();
        } catch (const std::exception& e) {
            o.detail = e.what();
        }
        rep.routes.push_back(std::move(o));
    }
    rep.value = std::move(reference);
    return rep;
}

TruncatedSeries expand(std::string_view id, int cap, std::optional<int> param) {
    auto rep = cross_route(id, cap, param);
    for (const auto& r : rep.routes) {
        if (!r.ok && r.erratum.empty()) throw CrossRouteMismatch(rep.id, r.route, r.detail);
    }
    return *rep.value;
}

TruncatedSeries oracle_series(std::string_view id, int cap, std::optional<int> param, int budget) {
    const GfSpec& g = find(id);
    if (cap > budget) throw paths::BudgetExceeded(cap, budget);
    const int p = resolve_param(g, param);
    const Caps caps = caps_for(g, cap, p);
    const OracleSpec spec = g.oracle(p);
    const int end_height = g.source == Source::Prefixes ? p : 0;

    std::map<Exponents, std::uint64_t> counts;
    visit_source(spec.source, cap, end_height, [&](const PathWord& w) {
        if (spec.filter && !spec.filter(w)) return;
        Exponents e;
        if (spec.source == Source::KPaths) {
            e.x = w.num_u() + w.num_d();
            e.y = w.num_h();
        } else {
            e.x = w.num_h();
            e.y = w.num_u();
        }
        for (const auto& m : spec.markers) {
            const int v = paths::stat(w, m.stat) + m.offset;
            if (m.var == Var::t) e.t += v;
            if (m.var == Var::s) e.s += v;
        }
        if (caps.admits(e)) ++counts[e];
    });
    series::SeriesBuilder b(caps);
    for (const auto& [e, c] : counts) b.add(e, Rational(mpz_class(static_cast<unsigned long>(c))));
    return std::move(b).build();
}

std::string OracleReport::str() const {
    std::ostringstream out;
    out << id << " cap " << cap << ": " << terms << " oracle terms, " << mismatches.size() << " mismatches";
    for (std::size_t i = 0; i < mismatches.size() && i < 5; ++i) {
        const auto& m = mismatches[i];
        out << "\n  at " << series::to_string(m.at) << " series " << m.series.get_str() << " oracle "
            << m.oracle.get_str();
    }
    return out.str();
}

OracleReport oracle_compare(std::string_view id, int cap, std::optional<int> param, int budget) {
    const GfSpec& g = find(id);
    OracleReport rep;
    rep.id = g.id;
    rep.cap = cap;
    rep.param = resolve_param(g, param);
    const TS brute = oracle_series(id, cap, param, budget);
    const TS value = expand(id, cap, param);
    rep.terms = brute.size();
    std::map<Exponents, std::pair<Rational, Rational>> both;
    for (const auto& [e, c] : value.terms()) both[e].first = c;
    for (const auto& [e, c] : brute.terms()) both[e].second = c;
    for (const auto& [e, p] : both) {
        if (p.first != p.second) rep.mismatches.push_back({e, p.first, p.second});
    }
    return rep;
}

std::string IdentityReport::str() const {
    std::ostringstream out;
    out << id << " cap " << cap << ": " << (ok ? "holds" : "FAILS") << "  " << statement;
    if (!detail.empty()) out << "\n  " << detail;
    return out.str();
}

namespace {

std::vector<IdentitySpec> build_identities() {
    std::vector<IdentitySpec> v;
    v.push_back({"delta_relation", "B = y(M - 1)", [](int n) {
                     Ring r({n, 0, 0});
                     return Comparison{expand("B", n), r.y() * (expand("M", n) - 1)};
                 }});
    v.push_back({"startend_sum", "HH + HD + UH + UD = M - 1", [](int n) {
                     TS sum = expand("startend_HH", n) + expand("startend_HD", n) + expand("startend_UH", n) +
                              expand("startend_UD", n);
                     return Comparison{expand("M", n) - 1, sum};
                 }});
    v.push_back({"hs_from_corners", "B_hs(t) = B_corners(t, t)", [](int n) {
                     auto joint = expand("corners_joint", n);
                     auto merged = joint.map_exponents(
                         [](const Exponents& e) { return Exponents{e.t + e.s, 0, e.x, e.y}; }, Caps{n, n, 0});
                     return Comparison{expand("hs", n), merged};
                 }});
    v.push_back({"lch_lhs", "(1-x)(1-ty) B_lch = (1-y)(1-tx) B_lhs", [](int n) {
                     Ring r({n, n, 0});
                     auto t = r.t(), x = r.x(), y = r.y();
                     return Comparison{(1 - x) * (1 - t * y) * expand("lch", n), (1 - y) * (1 - t * x) * expand("lhs", n)};
                 }});
    v.push_back({"lch_lhs_equidistribution", "B_lch(t, z, z) = B_lhs(t, z, z)", [](int n) {
                     return Comparison{to_z(expand("lch", n)), to_z(expand("lhs", n))};
                 }});
    v.push_back({"lhs_iuc", "B_lhs - txy/(1-tx) = t(B_iuc - txy/(1-tx))", [](int n) {
                     Ring r({n, n, 0});
                     auto t = r.t(), x = r.x(), y = r.y();
                     auto flat = t * x * y / (1 - t * x);
                     return Comparison{expand("lhs", n) - flat, t * (expand("iuc", n) - flat)};
                 }});
    v.push_back({"K_BSA", "B_SA = xy + xy^2 K", [](int n) {
                     Ring big({n + 3, 0, 0});
                     auto sa = expand("B_SA", n + 3);
                     return Comparison{expand("K", n), series::divide_monomial(sa - big.x() * big.y(), {0, 0, 1, 2})};
                 }});
    v.push_back({"BWA_BSA", "B_WA(x, y) = B_SA(x/(1-x), y)", [](int n) {
                     Ring r({n, 0, 0});
                     auto x = r.x();
                     return Comparison{expand("B_WA", n), series::substitute(expand("B_SA", n), Var::x, x / (1 - x))};
                 }});
    return v;
}

}  // namespace

const std::vector<IdentitySpec>& identities() {
    static const std::vector<IdentitySpec> v = build_identities();
    return v;
}

IdentityReport check_identity(std::string_view id, int cap) {
    for (const auto& spec : identities()) {
        if (spec.id != id) continue;
        IdentityReport rep{spec.id, spec.statement, cap, false, {}, {}};
        try {
            Comparison c = spec.sides(cap);
            if (!(c.expected.caps() == c.actual.caps())) {
                rep.detail = "caps differ";
                return rep;
            }
            rep.first_difference = series::first_difference(c.expected, c.actual);
            rep.ok = !rep.first_difference;
            if (!rep.ok) rep.detail = short_diff(c.expected, c.actual);
        } catch (const std::exception& e) {
            rep.detail = e.what();
        }
        return rep;
    }
    throw UnknownId(std::string(id));
}

RecurrenceReport check_fd_recurrence(int n_max, int budget) {
    RecurrenceReport rep;
    rep.n_max = n_max;
    // a[n][k]: bargraphs of semiperimeter n whose first descent has length k
    std::vector<std::vector<mpz_class>> a(n_max + 1, std::vector<mpz_class>(n_max + 2, 0));
    for (int n = 2; n <= n_max; ++n) {
        auto d = paths::distribution(paths::Family::Bargraph, n, {StatId{paths::Stat::Fd}}, budget);
        for (const auto& [k, c] : d.entries) a[n][k.values[0]] += c;
    }
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 2; k <= n; ++k) {
            ++rep.checked;
            const mpz_class rhs = a[n - 1][k] + a[n - 1][k - 1];
            if (a[n][k] != rhs) {
                rep.failures.push_back("a(" + std::to_string(n) + "," + std::to_string(k) + ") = " + a[n][k].get_str() +
                                       " but a(n-1,k) + a(n-1,k-1) = " + rhs.get_str());
            }
        }
    }
    return rep;
}

TruncatedSeries to_z(const TruncatedSeries& s) {
    return s.map_exponents([](const Exponents& e) { return Exponents{e.t, e.s, e.x + e.y, 0}; }, s.caps());
}

std::string list_text() {
    std::ostringstream out;
    for (const auto& g : registry()) {
        out << g.id << " | " << g.markers << " | ";
        bool first = true;
        for (Form f : g.forms()) {
            out << (first ? "" : ",") << to_string(f);
            first = false;
        }
        out << " | " << g.description;
        if (g.parametrized()) out << " (" << g.param_name << ", default " << g.default_param << ")";
        out << '\n';
    }
    return out.str();
}

}  // namespace bargraph::catalog
