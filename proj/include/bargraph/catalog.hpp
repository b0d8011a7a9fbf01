#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bargraph/path.hpp"
#include "bargraph/series.hpp"
#include "bargraph/statistics.hpp"

namespace bargraph::catalog {

using series::Caps;
using series::Exponents;
using series::Rational;
using series::TruncatedSeries;
using series::Var;

enum class Form {
    FunctionalEquation,
    QuadraticEq,
    ClosedRadical,
    RationalForm,
    Recurrence,
    ContinuedFraction,
    Substitution,
};

std::string_view to_string(Form f);

struct Context {
    Caps caps;
    int param = 0;
};

/// Two series that must agree for a route to pass.
struct Comparison {
    TruncatedSeries expected;
    TruncatedSeries actual;
};

/// One way of obtaining an entry. Exactly one of `series` and `check` is set:
/// `series` produces the full expansion; `check` tests a partial view (a
/// z-specialization, or a cross-multiplied closed form whose denominator is
/// not a unit) against the reference expansion. A nonempty `erratum` marks a
/// printed form known to disagree; its mismatch is reported but not fatal.
struct Route {
    std::string name;
    Form form;
    std::function<TruncatedSeries(const Context&)> series;
    std::function<Comparison(const Context&, const TruncatedSeries&)> check;
    std::string erratum;
};

enum class Source { Bargraphs, Motzkin, KPaths, Prefixes };

struct OracleMarker {
    Var var;
    paths::StatId stat;
    int offset = 0;
};

/// Brute-force counterpart of an entry. x and y mark #H and #U, except for
/// K-paths where x marks #U + #D and y marks #H.
struct OracleSpec {
    Source source = Source::Bargraphs;
    std::vector<OracleMarker> markers;
    std::function<bool(const paths::PathWord&)> filter;
};

struct GfSpec {
    std::string id;
    std::string description;
    Source source;
    std::string markers;
    std::string relation;
    std::string param_name;  // empty when the entry takes no parameter
    int default_param = 0;
    int min_param = 0;
    std::vector<int> test_params;
    std::function<Caps(int cap, int param)> caps;
    std::function<OracleSpec(int param)> oracle;
    std::vector<Route> routes;

    bool parametrized() const { return !param_name.empty(); }
    std::vector<Form> forms() const;
};

class UnknownId : public std::invalid_argument {
public:
    explicit UnknownId(const std::string& id) : std::invalid_argument("unknown catalog id '" + id + "'") {}
};

class CrossRouteMismatch : public std::runtime_error {
public:
    CrossRouteMismatch(std::string id, std::string route, std::string detail)
        : std::runtime_error("cross-route mismatch in " + id + " (" + route + "): " + detail), id_(std::move(id)),
          route_(std::move(route)) {}
    const std::string& id() const { return id_; }
    const std::string& route() const { return route_; }

private:
    std::string id_;
    std::string route_;
};

const std::vector<GfSpec>& registry();
const GfSpec& find(std::string_view id);

/// Parameter actually used: `param` if given, else the entry default. Throws
/// std::invalid_argument for a parameter on a plain entry or one out of range.
int resolve_param(const GfSpec& g, std::optional<int> param);
Caps caps_for(const GfSpec& g, int cap, int param);

struct RouteOutcome {
    std::string route;
    Form form;
    bool ok = false;
    std::string detail;
    std::string erratum;
};

struct CrossRouteReport {
    std::string id;
    int cap = 0;
    int param = 0;
    std::vector<RouteOutcome> routes;
    std::optional<TruncatedSeries> value;

    bool ok() const;
    /// Routes on the erratum channel that disagreed.
    std::vector<const RouteOutcome*> errata() const;
    std::string str() const;
};

/// Expands every route and compares each with the first full expansion.
CrossRouteReport cross_route(std::string_view id, int cap, std::optional<int> param = {});

/// The series to cap; throws CrossRouteMismatch unless every route agrees.
TruncatedSeries expand(std::string_view id, int cap, std::optional<int> param = {});

struct Mismatch {
    Exponents at;
    Rational series;
    Rational oracle;
};

struct OracleReport {
    std::string id;
    int cap = 0;
    int param = 0;
    std::size_t terms = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    std::string str() const;
};

TruncatedSeries oracle_series(std::string_view id, int cap, std::optional<int> param = {},
                              int budget = paths::kDefaultBudget);
OracleReport oracle_compare(std::string_view id, int cap, std::optional<int> param = {},
                            int budget = paths::kDefaultBudget);

struct IdentityReport {
    std::string id;
    std::string statement;
    int cap = 0;
    bool ok = false;
    std::optional<Exponents> first_difference;
    std::string detail;

    std::string str() const;
};

struct IdentitySpec {
    std::string id;
    std::string statement;
    std::function<Comparison(int cap)> sides;
};

const std::vector<IdentitySpec>& identities();
IdentityReport check_identity(std::string_view id, int cap);

/// a(n,k) = a(n-1,k) + a(n-1,k-1) on brute-force first-descent counts, 2 <= k <= n <= n_max.
struct RecurrenceReport {
    int n_max = 0;
    long checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};
RecurrenceReport check_fd_recurrence(int n_max, int budget = paths::kDefaultBudget);

/// x and y both sent to z, which is stored in the x slot.
TruncatedSeries to_z(const TruncatedSeries& s);

/// One line per entry: "id | markers | forms | description".
std::string list_text();

}  // namespace bargraph::catalog
