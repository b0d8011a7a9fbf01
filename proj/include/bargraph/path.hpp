#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bargraph::paths {

enum class Step : char { U = 'U', H = 'H', D = 'D' };

/// Which family a word claims to belong to; validation enforces the
/// corresponding shape constraints.
enum class Kind {
    Bargraph,  ///< starts U, ends D, strictly positive inside, no UD or DU
    Motzkin,   ///< cornerless Motzkin path: never negative, ends at 0, no UD or DU
    KPath,     ///< Motzkin path avoiding UD, UU and DD
    Prefix,    ///< cornerless Motzkin prefix: never negative, no UD or DU, any end height
};

std::string_view to_string(Kind k);

class NotAPath : public std::invalid_argument {
public:
    explicit NotAPath(const std::string& reason) : std::invalid_argument("not a path: " + reason), reason_(reason) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

/// An immutable, validated step word with its height profile.
class PathWord {
public:
    /// Throws NotAPath naming the violated constraint.
    static PathWord validate(std::vector<Step> steps, Kind kind);
    static PathWord parse(std::string_view word, Kind kind);

    /// For enumerators that construct valid words by design.
    static PathWord trusted(std::vector<Step> steps, Kind kind);

    Kind kind() const { return kind_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }

    /// heights()[i] is the height after the first i steps; heights()[0] == 0.
    const std::vector<int>& heights() const { return heights_; }
    /// Height at which step i starts.
    int height_before(std::size_t i) const { return heights_[i]; }

    int count(Step s) const;
    int num_h() const { return count(Step::H); }
    int num_u() const { return count(Step::U); }
    int num_d() const { return count(Step::D); }
    /// #U + #H; the semiperimeter of a bargraph and the weight of a Motzkin word.
    int weight() const { return num_u() + num_h(); }
    int end_height() const { return heights_.back(); }

    std::string str() const;

    bool operator==(const PathWord& o) const { return kind_ == o.kind_ && steps_ == o.steps_; }
    auto operator<=>(const PathWord& o) const { return str() <=> o.str(); }

private:
    PathWord(std::vector<Step> steps, Kind kind);

    std::vector<Step> steps_;
    Kind kind_;
    std::vector<int> heights_;
    int counts_[3] = {0, 0, 0};
};

std::vector<Step> parse_steps(std::string_view word);
std::string to_string(std::span<const Step> steps);

/// Reversal with U and D exchanged (reflection in a vertical line).
std::vector<Step> reflect(std::span<const Step> steps);

bool is_symmetric(const PathWord& w);
/// U^i1 H^j1 D^k1 H^l1 U^i2 ... U^im H^jm D^km with all exponents positive.
bool is_weakly_alternating(const PathWord& w);
/// Weakly alternating with every horizontal segment of length exactly 1.
bool is_strictly_alternating(const PathWord& w);
/// No DH factor: column heights weakly increase.
bool is_nondecreasing(const PathWord& w);
/// No DH and no HH factor.
bool is_increasing(const PathWord& w);

/// Maximal runs of equal steps, in order.
struct Run {
    Step step;
    int length;
    std::size_t start;
};
std::vector<Run> runs(std::span<const Step> steps);

}  // namespace bargraph::paths
