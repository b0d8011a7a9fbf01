#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bargraph/path.hpp"
#include "bargraph/statistics.hpp"

namespace bargraph::bijections {

using paths::PathWord;

class BijectionError : public std::invalid_argument {
public:
    enum class Kind {
        InvalidInput,
        HasDoubleRise,
        TooSmall,
        PreconditionFailed,
        SingleRow,
        NotStrictlyAlternating,
        BaseExcluded,
    };

    BijectionError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Vertices 1..n with all path edges implied; `chords` holds the long-range
/// edges {i, j}, i < j, sorted.
struct SecondaryStructure {
    int n = 0;
    std::vector<std::pair<int, int>> chords;

    /// Empty when every invariant holds, else the first violation.
    std::string violation() const;
    bool valid() const { return violation().empty(); }
    /// Dot-bracket notation, one character per vertex.
    std::string str() const;
    static SecondaryStructure parse(std::string_view dot_bracket);

    auto operator<=>(const SecondaryStructure&) const = default;
};

/// Every secondary structure on n vertices, by exhaustive search over partial matchings.
std::vector<SecondaryStructure> brute_force_secondary(int n);

PathWord delta(const PathWord& m);
PathWord delta_inv(const PathWord& g);

SecondaryStructure dr0_to_secondary(const PathWord& g);
PathWord secondary_to_dr0(const SecondaryStructure& s);

enum class FdCase { H, U };
struct FdSplit {
    FdCase which;
    PathWord image;
};
FdSplit fd_split_map(const PathWord& g);
PathWord fd_split_inv(const FdSplit& s);

PathWord lch_strip(const PathWord& g, int h);
PathWord lch_unstrip(const PathWord& g, int h);
PathWord lhs_strip(const PathWord& g, int h);
PathWord lhs_unstrip(const PathWord& g, int h);

/// Maximum column height at least 2.
bool has_two_rows(const PathWord& g);
PathWord phi(const PathWord& g);
PathWord phi_inv(const PathWord& g);

PathWord f_map(const PathWord& g);
PathWord f_inv(const PathWord& k);

struct BijectionReport {
    std::string name;
    int n_max = 0;
    long domain_size = 0;
    long codomain_size = 0;
    std::vector<std::string> roundtrip_failures;
    std::vector<std::string> transport_failures;
    std::vector<std::string> notes;

    bool ok() const { return roundtrip_failures.empty() && transport_failures.empty(); }
    std::string str() const;
};

const std::vector<std::string>& bijection_names();

/// Exhaustive check for all sizes up to n_max: totality, injectivity,
/// surjectivity onto the declared codomain, round trips both ways and the
/// declared statistic transport.
BijectionReport verify_bijection(std::string_view name, int n_max, int budget = paths::kDefaultBudget);

/// Applies a bijection to one ASCII word; `param` is h for the strip maps.
std::string apply(std::string_view name, std::string_view word, int param = 1);

}  // namespace bargraph::bijections
