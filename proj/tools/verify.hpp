#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bargraph/oeis.hpp"

namespace bargraph::cli {

enum class CheckKind { Entry, Identity, Recurrence, Bijection, Oeis };

struct Check {
    CheckKind kind;
    std::string name;
};

/// Resolves names to checks; throws std::invalid_argument on an unknown name.
std::vector<Check> resolve_checks(const std::vector<std::string>& names);
std::vector<Check> all_checks();

struct VerifyOptions {
    int cap = 10;
    int budget = 16;
    oeis::Config oeis;
};

struct VerifyTally {
    int passed = 0;
    int failed = 0;
    int errata = 0;
    int skipped = 0;

    bool ok() const { return failed == 0; }
};

/// Runs the checks in order, writing one status line per check (plus detail
/// lines for anything that is not a clean pass) and a closing summary.
VerifyTally run_checks(const std::vector<Check>& checks, const VerifyOptions& opt, std::ostream& out);

}  // namespace bargraph::cli
