#pragma once

#include <functional>
#include <vector>

#include "bargraph/path.hpp"

namespace bargraph::paths {

using PathVisitor = std::function<void(const PathWord&)>;

// Depth-first generation over prefixes. Children are tried in the order
// U < H < D, so every stream is in lexicographic order of the words.

/// Bargraphs of semiperimeter n (#U + #H == n). Empty for n < 2.
void for_each_bargraph(int n, const PathVisitor& visit);
/// Cornerless Motzkin paths with #U + #H == n; n == 0 yields the empty path.
void for_each_cornerless_motzkin(int n, const PathVisitor& visit);
/// Motzkin paths of length n avoiding UD, UU and DD.
void for_each_kpath(int length, const PathVisitor& visit);
/// Cornerless Motzkin prefixes with #U + #H == n ending at height `end_height`.
void for_each_prefix(int n, int end_height, const PathVisitor& visit);

std::vector<PathWord> enumerate_bargraphs(int n);
std::vector<PathWord> enumerate_cornerless_motzkin(int n);
std::vector<PathWord> enumerate_kpaths(int length);
std::vector<PathWord> enumerate_prefixes(int n, int end_height);

}  // namespace bargraph::paths
