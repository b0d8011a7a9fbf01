#include "bargraph/enumerate.hpp"

namespace bargraph::paths {

namespace {

// Shared DFS state. `weight` counts U and H steps.
struct Walker {
    std::vector<Step> buf;
    int height = 0;
    int weight = 0;

    Step last() const { return buf.back(); }
    bool has_last() const { return !buf.empty(); }

    template <class F>
    void with(Step s, F&& f) {
        buf.push_back(s);
        const int dh = s == Step::U ? 1 : (s == Step::D ? -1 : 0);
        const int dw = s == Step::D ? 0 : 1;
        height += dh;
        weight += dw;
        f();
        height -= dh;
        weight -= dw;
        buf.pop_back();
    }
};

void bargraph_dfs(Walker& w, int n, const PathVisitor& visit) {
    if (w.has_last() && w.height == 0) {
        if (w.weight == n) visit(PathWord::trusted(w.buf, Kind::Bargraph));
        return;
    }
    const int remaining = n - w.weight;
    // An up step must be followed by at least one H before any descent.
    if (remaining >= 2 && (!w.has_last() || w.last() != Step::D)) {
        w.with(Step::U, [&] { bargraph_dfs(w, n, visit); });
    }
    if (!w.has_last()) return;
    if (remaining >= 1) w.with(Step::H, [&] { bargraph_dfs(w, n, visit); });
    if (w.last() != Step::U && (w.height > 1 || remaining == 0)) {
        w.with(Step::D, [&] { bargraph_dfs(w, n, visit); });
    }
}

void motzkin_dfs(Walker& w, int n, const PathVisitor& visit) {
    if (w.height == 0 && w.weight == n) {
        visit(PathWord::trusted(w.buf, Kind::Motzkin));
        return;
    }
    const int remaining = n - w.weight;
    const bool after_d = w.has_last() && w.last() == Step::D;
    const bool after_u = w.has_last() && w.last() == Step::U;
    if (remaining >= 2 && !after_d) w.with(Step::U, [&] { motzkin_dfs(w, n, visit); });
    if (remaining >= 1) w.with(Step::H, [&] { motzkin_dfs(w, n, visit); });
    if (w.height >= 1 && !after_u) w.with(Step::D, [&] { motzkin_dfs(w, n, visit); });
}

void kpath_dfs(Walker& w, int length, const PathVisitor& visit) {
    const int remaining = length - static_cast<int>(w.buf.size());
    if (remaining == 0) {
        if (w.height == 0) visit(PathWord::trusted(w.buf, Kind::KPath));
        return;
    }
    const bool after_h = w.has_last() && w.last() == Step::H;
    const bool after_u = w.has_last() && w.last() == Step::U;
    const bool after_d = w.has_last() && w.last() == Step::D;
    // Each D needs an H right before it, so closing height h costs >= 2h - [last == H] steps.
    auto closable = [&](int h, bool last_is_h) { return remaining - 1 >= 2 * h - (last_is_h ? 1 : 0); };
    if (!after_u && closable(w.height + 1, false)) w.with(Step::U, [&] { kpath_dfs(w, length, visit); });
    if (closable(w.height, true)) w.with(Step::H, [&] { kpath_dfs(w, length, visit); });
    if (w.height >= 1 && after_h && closable(w.height - 1, false)) {
        w.with(Step::D, [&] { kpath_dfs(w, length, visit); });
    }
    (void)after_d;
}

void prefix_dfs(Walker& w, int n, int end_height, const PathVisitor& visit) {
    if (w.weight == n && w.height == end_height) visit(PathWord::trusted(w.buf, Kind::Prefix));
    const int remaining = n - w.weight;
    const bool after_d = w.has_last() && w.last() == Step::D;
    const bool after_u = w.has_last() && w.last() == Step::U;
    if (remaining >= 1 && !after_d && remaining - 1 >= end_height - (w.height + 1)) {
        w.with(Step::U, [&] { prefix_dfs(w, n, end_height, visit); });
    }
    if (remaining >= 1 && remaining - 1 >= end_height - w.height) {
        w.with(Step::H, [&] { prefix_dfs(w, n, end_height, visit); });
    }
    if (w.height >= 1 && !after_u && remaining >= end_height - (w.height - 1)) {
        w.with(Step::D, [&] { prefix_dfs(w, n, end_height, visit); });
    }
}

template <class F>
std::vector<PathWord> collect(F&& each) {
    std::vector<PathWord> out;
    each([&](const PathWord& p) { out.push_back(p); });
    return out;
}

}  // namespace

void for_each_bargraph(int n, const PathVisitor& visit) {
    if (n < 2) return;
    Walker w;
    bargraph_dfs(w, n, visit);
}

void for_each_cornerless_motzkin(int n, const PathVisitor& visit) {
    if (n < 0) return;
    Walker w;
    motzkin_dfs(w, n, visit);
}

void for_each_kpath(int length, const PathVisitor& visit) {
    if (length < 0) return;
    Walker w;
    kpath_dfs(w, length, visit);
}

void for_each_prefix(int n, int end_height, const PathVisitor& visit) {
    if (n < 0 || end_height < 0) return;
    Walker w;
    prefix_dfs(w, n, end_height, visit);
}

std::vector<PathWord> enumerate_bargraphs(int n) {
    return collect([&](const PathVisitor& v) { for_each_bargraph(n, v); });
}

std::vector<PathWord> enumerate_cornerless_motzkin(int n) {
    return collect([&](const PathVisitor& v) { for_each_cornerless_motzkin(n, v); });
}

std::vector<PathWord> enumerate_kpaths(int length) {
    return collect([&](const PathVisitor& v) { for_each_kpath(length, v); });
}

std::vector<PathWord> enumerate_prefixes(int n, int end_height) {
    return collect([&](const PathVisitor& v) { for_each_prefix(n, end_height, v); });
}

}  // namespace bargraph::paths
