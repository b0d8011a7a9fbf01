#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bargraph::oeis {

class OeisError : public std::runtime_error {
public:
    enum class Kind { NotFound, NetworkDisabled, ParseError, NetworkError, BadId };

    OeisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

enum class Origin { Fixture, Cache, Network };
std::string_view to_string(Origin o);

struct OeisSequence {
    std::string id;
    int offset = 0;
    std::vector<mpz_class> terms;
    Origin origin = Origin::Fixture;
};

/// "index value" lines; '#' comments and blank lines are skipped. Indices must be consecutive.
OeisSequence parse_bfile(std::string_view id, std::string_view text);
std::string format_bfile(const OeisSequence& s);

/// Throws OeisError(BadId) unless id looks like A followed by six digits.
void check_id(std::string_view id);

struct Config {
    std::string fixture_dir;
    std::string cache_dir;
    bool allow_network = false;

    /// Built-in fixture directory, BARGRAPH_OEIS_CACHE and BARGRAPH_ALLOW_NETWORK.
    static Config from_environment();
};

/// Fixture, then cache, then (if allowed) the b-file from oeis.org, which is
/// written back to the cache when one is configured.
OeisSequence load(std::string_view id, const Config& cfg);

struct CompareReport {
    std::string id;
    bool ok = false;
    int shift = 0;             // oeis index = computed index + shift
    std::size_t matched = 0;   // aligned terms that agree
    std::size_t overlap = 0;   // aligned terms available
    std::optional<long> mismatch_index;
    std::string expected;
    std::string got;

    std::string str() const;
};

/// `computed[i]` is the term of index first_index + i. Shift 0 is tried
/// first, then 1, -1, 2, -2, 3, -3; the first full agreement over at least
/// `min_overlap` terms wins.
CompareReport compare(const OeisSequence& seq, const std::vector<mpz_class>& computed, int first_index,
                      std::size_t min_overlap = 8);

enum class Shape { Sequence, Triangle };

struct TableRow {
    std::string a_number;
    std::string subject;
    std::string catalog_id;  // empty when unmapped
    Shape shape = Shape::Sequence;
    std::string note;
    /// Terms from index `first_index` on, for sequences with a fixed reading.
    std::function<std::vector<mpz_class>(int cap)> computed;
    int first_index = 0;
};

/// OEIS entries tied to catalog statistics, plus the plain bargraph count.
const std::vector<TableRow>& table();
const TableRow* find_row(std::string_view a_number);

}  // namespace bargraph::oeis
