#include "bargraph/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bargraph::series {

namespace {

std::uint32_t pack(const Exponents& e) {
    return (static_cast<std::uint32_t>(e.t) << 24) | (static_cast<std::uint32_t>(e.s) << 16) |
           (static_cast<std::uint32_t>(e.x) << 8) | static_cast<std::uint32_t>(e.y);
}

Exponents unpack(std::uint32_t k) {
    return {static_cast<int>(k >> 24), static_cast<int>((k >> 16) & 0xff), static_cast<int>((k >> 8) & 0xff),
            static_cast<int>(k & 0xff)};
}

void check_caps(const Caps& c) {
    if (c.total < 0 || c.t < 0 || c.s < 0 || c.total > kMaxExponent || c.t > kMaxExponent || c.s > kMaxExponent) {
        throw SeriesError(SeriesError::Kind::CapMismatch, "caps out of range: " + c.str());
    }
}

void require_same_caps(const Caps& a, const Caps& b, const char* op) {
    if (!(a == b)) {
        throw SeriesError(SeriesError::Kind::CapMismatch,
                          std::string(op) + ": caps " + a.str() + " vs " + b.str());
    }
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

int Exponents::of(Var v) const {
    switch (v) {
        case Var::t: return t;
        case Var::s: return s;
        case Var::x: return x;
        case Var::y: return y;
    }
    return 0;
}

Exponents& Exponents::set(Var v, int value) {
    switch (v) {
        case Var::t: t = value; break;
        case Var::s: s = value; break;
        case Var::x: x = value; break;
        case Var::y: y = value; break;
    }
    return *this;
}

Exponents operator+(const Exponents& a, const Exponents& b) {
    return {a.t + b.t, a.s + b.s, a.x + b.x, a.y + b.y};
}

std::string Caps::str() const {
    std::ostringstream os;
    os << "(total=" << total << ", t=" << t << ", s=" << s << ")";
    return os.str();
}

std::string to_string(const Exponents& e) {
    std::ostringstream os;
    os << "t^" << e.t << " s^" << e.s << " x^" << e.x << " y^" << e.y;
    return os.str();
}

TruncatedSeries::TruncatedSeries(Caps caps) : caps_(caps) { check_caps(caps); }

TruncatedSeries TruncatedSeries::constant(Caps caps, const Rational& value) {
    return monomial(caps, {}, value);
}

TruncatedSeries TruncatedSeries::variable(Caps caps, Var v) {
    Exponents e;
    e.set(v, 1);
    return monomial(caps, e, 1);
}

TruncatedSeries TruncatedSeries::monomial(Caps caps, Exponents e, const Rational& value) {
    TruncatedSeries r(caps);
    if (value == 0 || !caps.admits(e)) return r;
    Rational v = value;
    v.canonicalize();
    r.terms_.emplace_back(pack(e), v.get_num());
    r.den_ = v.get_den();
    return r;
}

Rational TruncatedSeries::coeff(const Exponents& e) const {
    if (!caps_.admits(e)) return 0;
    auto key = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& term, std::uint32_t k) { return term.first < k; });
    if (it == terms_.end() || it->first != key) return 0;
    Rational r(it->second, den_);
    r.canonicalize();
    return r;
}

std::vector<std::pair<Exponents, Rational>> TruncatedSeries::terms() const {
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, n] : terms_) {
        Rational r(n, den_);
        r.canonicalize();
        out.emplace_back(unpack(k), r);
    }
    return out;
}

void TruncatedSeries::for_each(const std::function<void(const Exponents&, const Integer&)>& f) const {
    for (const auto& [k, n] : terms_) f(unpack(k), n);
}

void TruncatedSeries::normalize() {
    std::erase_if(terms_, [](const auto& term) { return term.second == 0; });
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& term : terms_) term.second = -term.second;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& term : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.second.get_mpz_t());
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& term : terms_) mpz_divexact(term.second.get_mpz_t(), term.second.get_mpz_t(), g.get_mpz_t());
}

TruncatedSeries TruncatedSeries::truncate(Caps smaller) const {
    if (!smaller.within(caps_)) {
        throw SeriesError(SeriesError::Kind::CapMismatch,
                          "truncate: " + smaller.str() + " exceeds " + caps_.str());
    }
    TruncatedSeries r(smaller);
    for (const auto& term : terms_) {
        if (smaller.admits(unpack(term.first))) r.terms_.push_back(term);
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_caps(caps_, o.caps_, "add");
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        den_ = o.den_;
        return *this;
    }
    Integer l = lcm(den_, o.den_);
    Integer fa = l / den_;
    Integer fb = l / o.den_;
    std::vector<std::pair<std::uint32_t, Integer>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.emplace_back(terms_[i].first, terms_[i].second * fa);
            ++i;
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.emplace_back(o.terms_[j].first, o.terms_[j].second * fb);
            ++j;
        } else {
            merged.emplace_back(terms_[i].first, terms_[i].second * fa + o.terms_[j].second * fb);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    den_ = l;
    normalize();
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& term : r.terms_) term.second = -term.second;
    return r;
}

TruncatedSeries operator+(TruncatedSeries a, long r) {
    return a += TruncatedSeries::constant(a.caps(), r);
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        den_ = 1;
        return *this;
    }
    Rational c = r;
    c.canonicalize();
    for (auto& term : terms_) term.second *= c.get_num();
    den_ *= c.get_den();
    normalize();
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_caps(a.caps_, b.caps_, "mul");
    const Caps& c = a.caps_;
    TruncatedSeries r(c);
    if (a.terms_.empty() || b.terms_.empty()) return r;

    const std::size_t side = static_cast<std::size_t>(c.total) + 1;
    const std::size_t size = static_cast<std::size_t>(c.t + 1) * static_cast<std::size_t>(c.s + 1) * side * side;
    thread_local std::vector<Integer> scratch;
    thread_local std::vector<char> used;
    if (scratch.size() < size) {
        scratch.resize(size);
        used.resize(size, 0);
    }
    std::vector<std::size_t> touched;

    struct Unpacked {
        Exponents e;
        const Integer* n;
    };
    std::vector<Unpacked> bu;
    bu.reserve(b.terms_.size());
    for (const auto& [k, n] : b.terms_) bu.push_back({unpack(k), &n});

    for (const auto& [ka, na] : a.terms_) {
        const Exponents ea = unpack(ka);
        for (const auto& tb : bu) {
            const int tt = ea.t + tb.e.t;
            if (tt > c.t) break;  // b is sorted by t first
            const int ss = ea.s + tb.e.s;
            const int xx = ea.x + tb.e.x;
            const int yy = ea.y + tb.e.y;
            if (ss > c.s || xx + yy > c.total) continue;
            const std::size_t idx =
                ((static_cast<std::size_t>(tt) * (c.s + 1) + ss) * side + xx) * side + yy;
            if (!used[idx]) {
                used[idx] = 1;
                touched.push_back(idx);
            }
            mpz_addmul(scratch[idx].get_mpz_t(), na.get_mpz_t(), tb.n->get_mpz_t());
        }
    }
    std::sort(touched.begin(), touched.end());
    r.terms_.reserve(touched.size());
    for (std::size_t idx : touched) {
        std::size_t rest = idx;
        const int yy = static_cast<int>(rest % side);
        rest /= side;
        const int xx = static_cast<int>(rest % side);
        rest /= side;
        const int ss = static_cast<int>(rest % (c.s + 1));
        const int tt = static_cast<int>(rest / (c.s + 1));
        if (scratch[idx] != 0) {
            r.terms_.emplace_back(pack({tt, ss, xx, yy}), std::move(scratch[idx]));
            scratch[idx] = 0;
        }
        used[idx] = 0;
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.caps_ == b.caps_ && a.den_ == b.den_ && a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    TruncatedSeries result = constant(caps_, 1);
    TruncatedSeries base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::map_exponents(const std::function<Exponents(const Exponents&)>& f,
                                               Caps out) const {
    check_caps(out);
    std::map<std::uint32_t, Integer> acc;
    for (const auto& [k, n] : terms_) {
        Exponents e = f(unpack(k));
        if (e.t < 0 || e.s < 0 || e.x < 0 || e.y < 0) {
            throw SeriesError(SeriesError::Kind::CapMismatch, "map_exponents produced a negative exponent");
        }
        if (!out.admits(e)) continue;
        acc[pack(e)] += n;
    }
    TruncatedSeries r(out);
    for (auto& [k, n] : acc) r.terms_.emplace_back(k, std::move(n));
    r.den_ = den_;
    r.normalize();
    return r;
}

SeriesBuilder::SeriesBuilder(Caps caps) : caps_(caps) { check_caps(caps); }

void SeriesBuilder::add(const Exponents& e, const Rational& value) {
    if (value == 0 || !caps_.admits(e)) return;
    pending_.emplace_back(pack(e), value);
}

TruncatedSeries SeriesBuilder::build() && {
    std::map<std::uint32_t, Rational> acc;
    for (auto& [k, v] : pending_) acc[k] += v;
    Integer den = 1;
    for (auto& [k, v] : acc) {
        v.canonicalize();
        den = lcm(den, v.get_den());
    }
    TruncatedSeries r(caps_);
    for (auto& [k, v] : acc) {
        if (v == 0) continue;
        r.terms_.emplace_back(k, v.get_num() * (den / v.get_den()));
    }
    r.den_ = den;
    r.normalize();
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
    const Rational c0 = s.constant_term();
    if (c0 == 0) {
        throw SeriesError(SeriesError::Kind::DivisionByNonUnit, "inverse: zero constant term");
    }
    const Rational inv0 = 1 / c0;
    TruncatedSeries g = TruncatedSeries::constant(s.caps(), inv0);
    for (int i = 0; i < 64; ++i) {
        TruncatedSeries next = g * (2 - s * g);
        if (next == g) return g;
        g = std::move(next);
    }
    throw SeriesError(SeriesError::Kind::NotConvergent, "inverse: Newton iteration did not stabilise");
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * inverse(b); }

TruncatedSeries sqrt_series(const TruncatedSeries& s) {
    if (s.constant_term() != 1) {
        throw SeriesError(SeriesError::Kind::BadConstantTerm, "sqrt_series: constant term must be 1");
    }
    // Newton on the inverse square root, then multiply back.
    const Rational half(1, 2);
    TruncatedSeries z = TruncatedSeries::constant(s.caps(), 1);
    for (int i = 0; i < 64; ++i) {
        TruncatedSeries next = z + half * (z * (1 - s * z * z));
        if (next == z) return s * z;
        z = std::move(next);
    }
    throw SeriesError(SeriesError::Kind::NotConvergent, "sqrt_series: Newton iteration did not stabilise");
}

TruncatedSeries divide_monomial(const TruncatedSeries& s, const Exponents& m) {
    const Caps& c = s.caps();
    Caps out{c.total - m.grade(), c.t - m.t, c.s - m.s};
    if (out.total < 0 || out.t < 0 || out.s < 0) {
        throw SeriesError(SeriesError::Kind::CapMismatch, "divide_monomial: monomial exceeds caps");
    }
    bool ok = true;
    s.for_each([&](const Exponents& e, const Integer&) {
        if (e.t < m.t || e.s < m.s || e.x < m.x || e.y < m.y) ok = false;
    });
    if (!ok) {
        throw SeriesError(SeriesError::Kind::NotDivisible, "divide_monomial: not divisible by " + to_string(m));
    }
    return s.map_exponents([&](const Exponents& e) { return Exponents{e.t - m.t, e.s - m.s, e.x - m.x, e.y - m.y}; },
                           out);
}

TruncatedSeries substitute(const TruncatedSeries& s, Var v, const TruncatedSeries& value) {
    require_same_caps(s.caps(), value.caps(), "substitute");
    bool admissible = true;
    value.for_each([&](const Exponents& e, const Integer&) {
        const bool positive = (v == Var::x || v == Var::y) ? e.grade() >= 1 : e.of(v) >= 1;
        if (!positive) admissible = false;
    });
    if (!admissible) {
        throw SeriesError(SeriesError::Kind::CapMismatch,
                          "substitute: value must have positive degree in the substituted direction");
    }
    int top = 0;
    s.for_each([&](const Exponents& e, const Integer&) { top = std::max(top, e.of(v)); });
    std::vector<SeriesBuilder> parts(top + 1, SeriesBuilder(s.caps()));
    const Integer& den = s.denominator();
    s.for_each([&](const Exponents& e, const Integer& n) {
        Exponents rest = e;
        rest.set(v, 0);
        parts[e.of(v)].add(rest, Rational(n, den));
    });
    TruncatedSeries result = std::move(parts[top]).build();
    for (int k = top - 1; k >= 0; --k) {
        result = result * value + std::move(parts[k]).build();
    }
    return result;
}

TruncatedSeries specialize(const TruncatedSeries& s, Var v, const Rational& value) {
    SeriesBuilder b(s.caps());
    const Integer& den = s.denominator();
    s.for_each([&](const Exponents& e, const Integer& n) {
        Rational c(n, den);
        Rational p = 1;
        for (int i = 0; i < e.of(v); ++i) p *= value;
        Exponents rest = e;
        rest.set(v, 0);
        b.add(rest, c * p);
    });
    return std::move(b).build();
}

TruncatedSeries solve_quadratic(const SeriesEquation& eq) {
    require_same_caps(eq.a.caps(), eq.b.caps(), "solve_quadratic");
    require_same_caps(eq.a.caps(), eq.c.caps(), "solve_quadratic");
    const Rational& f0 = eq.branch;
    const Rational a0 = eq.a.constant_term();
    const Rational b0 = eq.b.constant_term();
    const Rational c0 = eq.c.constant_term();
    if (a0 * f0 * f0 + b0 * f0 + c0 != 0) {
        throw SeriesError(SeriesError::Kind::NoBranch, "solve_quadratic: branch does not satisfy the order-0 equation");
    }
    if (2 * a0 * f0 + b0 == 0) {
        throw SeriesError(SeriesError::Kind::NotConvergent, "solve_quadratic: linearization is not a unit");
    }
    TruncatedSeries f = TruncatedSeries::constant(eq.a.caps(), f0);
    for (int i = 0; i < 64; ++i) {
        TruncatedSeries residual = eq.a * f * f + eq.b * f + eq.c;
        if (residual.is_zero()) return f;
        TruncatedSeries lin = 2 * (eq.a * f) + eq.b;
        f -= residual * inverse(lin);
    }
    throw SeriesError(SeriesError::Kind::NotConvergent, "solve_quadratic: Newton iteration did not converge");
}

std::vector<TruncatedSeries> solve_fixed_point(
    const std::function<std::vector<TruncatedSeries>(const std::vector<TruncatedSeries>&)>& step,
    std::vector<TruncatedSeries> init, int max_iterations) {
    if (init.empty()) return init;
    if (max_iterations <= 0) {
        const Caps& c = init.front().caps();
        max_iterations = c.total + c.t + c.s + 4;
    }
    for (int i = 0; i < max_iterations; ++i) {
        auto next = step(init);
        if (next == init) return init;
        init = std::move(next);
    }
    throw SeriesError(SeriesError::Kind::NotConvergent, "solve_fixed_point: no fixed point within the iteration bound");
}

TruncatedSeries continued_fraction(const std::vector<CfLevel>& levels, int depth) {
    if (depth < 1 || static_cast<std::size_t>(depth) > levels.size()) {
        throw std::invalid_argument("continued_fraction: depth out of range");
    }
    TruncatedSeries v = levels[depth - 1].denominator;
    for (int k = depth - 1; k >= 1; --k) {
        v = levels[k - 1].denominator + levels[k].numerator / v;
    }
    return levels[0].numerator / v;
}

std::string dump(const TruncatedSeries& s) {
    std::ostringstream os;
    for (const auto& [e, c] : s.terms()) {
        os << e.t << ' ' << e.s << ' ' << e.x << ' ' << e.y << ' ' << c.get_num() << '/' << c.get_den() << '\n';
    }
    return os.str();
}

std::optional<Exponents> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_caps(a.caps(), b.caps(), "compare");
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) return ta[i].first;
        if (i == ta.size() || tb[j].first < ta[i].first) return tb[j].first;
        if (ta[i].second != tb[j].second) return ta[i].first;
        ++i;
        ++j;
    }
    return std::nullopt;
}

}  // namespace bargraph::series
