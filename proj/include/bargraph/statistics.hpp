#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bargraph/path.hpp"

namespace bargraph::paths {

enum class Stat {
    NumH,
    NumU,
    Semiperimeter,
    Hfc,
    Dr,
    Df,
    ValleysOfWidth,  // v_l
    PeaksOfWidth,    // p_l
    Valleys,
    Hsv,
    Peaks,
    Hsp,
    DH,
    HU,
    UH,
    HD,
    Corners,
    Hs,
    Uhs,
    Fd,
    Xfd,
    Uc,
    ColumnsOfHeight,  // ch_h
    Iuc,
    Lch,
    Lhs,
    Uhu,
    Stair,
    Oh,
    Eh,
    Area,
};

/// A statistic name plus its integer parameter (l for v_l/p_l, h for ch_h).
struct StatId {
    Stat stat;
    int param = 0;

    std::string name() const;
    bool operator==(const StatId&) const = default;
    auto operator<=>(const StatId&) const = default;

    /// Accepts e.g. "hfc", "v_2", "ch_3". Throws UnknownStatistic.
    static StatId parse(std::string_view text);
};

class UnknownStatistic : public std::invalid_argument {
public:
    explicit UnknownStatistic(const std::string& name) : std::invalid_argument("unknown statistic '" + name + "'") {}
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int n, int budget)
        : std::runtime_error("weight " + std::to_string(n) + " exceeds budget " + std::to_string(budget)), n_(n),
          budget_(budget) {}
    int n() const { return n_; }
    int budget() const { return budget_; }

private:
    int n_;
    int budget_;
};

/// Every registered name with a short description, in registry order.
std::vector<std::pair<std::string, std::string>> statistic_registry();

/// Value of a statistic. Bargraph words use the bargraph definitions; all
/// other kinds use the cornerless-Motzkin definitions.
int stat(const PathWord& w, const StatId& id);
int stat(const PathWord& w, std::string_view name);

enum class Family { Bargraph, CornerlessMotzkin };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

inline constexpr int kDefaultBudget = 16;

struct DistKey {
    int num_h;
    int num_u;
    std::vector<int> values;
    auto operator<=>(const DistKey&) const = default;
};

struct StatDistribution {
    std::vector<StatId> stats;
    std::map<DistKey, mpz_class> entries;

    mpz_class total() const;
    /// "numH numU stat1 ... statk count" per entry, in key order.
    std::string dump() const;
};

/// Joint distribution of `stats` over the family at weight n.
StatDistribution distribution(Family family, int n, const std::vector<StatId>& stats, int budget = kDefaultBudget);

}  // namespace bargraph::paths
