#pragma once

// Exact truncated power series in the variables t, s, x, y.
//
// Coefficients are rationals stored as integer numerators over one common
// positive denominator. Truncation is by the grading deg_x + deg_y (the
// semiperimeter of the objects being counted) together with independent caps
// on the marker variables t and s. All three caps define an ideal, so every
// ring operation below is exact for the monomials that survive truncation.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bargraph::series {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : int { t = 0, s = 1, x = 2, y = 3 };

struct Exponents {
    int t = 0;
    int s = 0;
    int x = 0;
    int y = 0;

    int grade() const { return x + y; }
    int of(Var v) const;
    Exponents& set(Var v, int value);

    auto operator<=>(const Exponents&) const = default;
};

Exponents operator+(const Exponents& a, const Exponents& b);

/// Truncation bounds: terms with deg_x + deg_y > total, deg_t > t or
/// deg_s > s are dropped.
struct Caps {
    int total = 0;
    int t = 0;
    int s = 0;

    bool admits(const Exponents& e) const { return e.grade() <= total && e.t <= t && e.s <= s; }
    bool operator==(const Caps&) const = default;
    bool within(const Caps& other) const { return total <= other.total && t <= other.t && s <= other.s; }
    std::string str() const;
};

inline constexpr int kMaxExponent = 255;

class SeriesError : public std::runtime_error {
public:
    enum class Kind { CapMismatch, BadConstantTerm, NoBranch, NotConvergent, DivisionByNonUnit, NotDivisible };

    SeriesError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class TruncatedSeries {
public:
    explicit TruncatedSeries(Caps caps = {});

    static TruncatedSeries constant(Caps caps, const Rational& value);
    static TruncatedSeries variable(Caps caps, Var v);
    static TruncatedSeries monomial(Caps caps, Exponents e, const Rational& value = 1);

    const Caps& caps() const { return caps_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Exponents& e) const;
    Rational constant_term() const { return coeff({}); }
    /// Nonzero terms in lexicographic order of (t, s, x, y).
    std::vector<std::pair<Exponents, Rational>> terms() const;
    /// True iff every coefficient is an integer.
    bool is_integral() const { return den_ == 1; }

    TruncatedSeries truncate(Caps smaller) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& r);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& r) { return a *= r; }
    friend TruncatedSeries operator*(const Rational& r, TruncatedSeries a) { return a *= r; }
    friend TruncatedSeries operator*(TruncatedSeries a, long r) { return a *= Rational(r); }
    friend TruncatedSeries operator*(long r, TruncatedSeries a) { return a *= Rational(r); }
    friend TruncatedSeries operator+(TruncatedSeries a, long r);
    friend TruncatedSeries operator+(long r, TruncatedSeries a) { return std::move(a) + r; }
    friend TruncatedSeries operator-(TruncatedSeries a, long r) { return std::move(a) + (-r); }
    friend TruncatedSeries operator-(long r, const TruncatedSeries& a) { return (-a) + r; }
    friend TruncatedSeries operator-(const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries pow(int k) const;

    /// Apply a monomial map to every exponent vector; images outside `out`
    /// are dropped and colliding images are summed. The caller guarantees the
    /// map is compatible with truncation (e.g. x -> t x, y -> x, x -> x^2).
    TruncatedSeries map_exponents(const std::function<Exponents(const Exponents&)>& f, Caps out) const;

    /// Calls f(exponents, numerator) for each term; the common denominator is
    /// `denominator()`.
    void for_each(const std::function<void(const Exponents&, const Integer&)>& f) const;
    const Integer& denominator() const { return den_; }

private:
    friend class SeriesBuilder;
    void normalize();

    Caps caps_;
    std::vector<std::pair<std::uint32_t, Integer>> terms_;  // sorted by packed key
    Integer den_ = 1;
};

/// Accumulates rational terms into a series; the result is normalized.
class SeriesBuilder {
public:
    explicit SeriesBuilder(Caps caps);
    void add(const Exponents& e, const Rational& value);
    TruncatedSeries build() &&;

private:
    Caps caps_;
    std::vector<std::pair<std::uint32_t, Rational>> pending_;
};

TruncatedSeries inverse(const TruncatedSeries& s);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

/// F with F^2 = s and F(0) = 1. Requires s(0) = 1.
TruncatedSeries sqrt_series(const TruncatedSeries& s);

/// Exact division by a monomial; the caps shrink by the monomial's degrees.
TruncatedSeries divide_monomial(const TruncatedSeries& s, const Exponents& m);

/// Substitute `v` by `value`. Caps of both operands must agree and `value`
/// must lie in the ideal generated by v's own truncation direction.
TruncatedSeries substitute(const TruncatedSeries& s, Var v, const TruncatedSeries& value);

/// Set a marker variable to a rational constant. Only exact when the true
/// series has marker degree within the cap at every grade.
TruncatedSeries specialize(const TruncatedSeries& s, Var v, const Rational& value);

/// a F^2 + b F + c = 0 with F(0) = branch.
struct SeriesEquation {
    TruncatedSeries a;
    TruncatedSeries b;
    TruncatedSeries c;
    Rational branch = 0;
};

/// Newton iteration in the truncated ring. Throws NoBranch if the order-0
/// residual does not vanish and NotConvergent if 2 a F0 + b is not a unit.
TruncatedSeries solve_quadratic(const SeriesEquation& eq);

/// Iterate `step` from `init` until the vector of series stops changing.
/// Intended for systems in which every unknown on the right-hand side is
/// multiplied by something of positive degree.
std::vector<TruncatedSeries> solve_fixed_point(
    const std::function<std::vector<TruncatedSeries>(const std::vector<TruncatedSeries>&)>& step,
    std::vector<TruncatedSeries> init, int max_iterations = 0);

/// One level a_k / (b_k + ...) of a continued fraction.
struct CfLevel {
    TruncatedSeries numerator;
    TruncatedSeries denominator;
};

/// Evaluates a_1 / (b_1 + a_2 / (b_2 + ... + a_depth / b_depth)) bottom-up.
TruncatedSeries continued_fraction(const std::vector<CfLevel>& levels, int depth);

/// "deg_t deg_s deg_x deg_y numerator/denominator" per nonzero term, sorted.
std::string dump(const TruncatedSeries& s);

/// First exponent vector (in dump order) where the two series differ, if any.
std::optional<Exponents> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

std::string to_string(const Exponents& e);

/// Convenience handle for writing formulas: variables and constants at fixed caps.
class Ring {
public:
    explicit Ring(Caps caps) : caps_(caps) {}
    const Caps& caps() const { return caps_; }
    TruncatedSeries t() const { return TruncatedSeries::variable(caps_, Var::t); }
    TruncatedSeries s() const { return TruncatedSeries::variable(caps_, Var::s); }
    TruncatedSeries x() const { return TruncatedSeries::variable(caps_, Var::x); }
    TruncatedSeries y() const { return TruncatedSeries::variable(caps_, Var::y); }
    TruncatedSeries c(const Rational& r) const { return TruncatedSeries::constant(caps_, r); }
    TruncatedSeries zero() const { return TruncatedSeries(caps_); }
    TruncatedSeries one() const { return c(1); }

private:
    Caps caps_;
};

}  // namespace bargraph::series
