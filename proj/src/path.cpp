#include "bargraph/path.hpp"

#include <algorithm>

namespace bargraph::paths {

namespace {

int index_of(Step s) {
    switch (s) {
        case Step::U: return 0;
        case Step::H: return 1;
        case Step::D: return 2;
    }
    return 0;
}

int delta(Step s) { return s == Step::U ? 1 : (s == Step::D ? -1 : 0); }

}  // namespace

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::Bargraph: return "bargraph";
        case Kind::Motzkin: return "motzkin";
        case Kind::KPath: return "kpath";
        case Kind::Prefix: return "prefix";
    }
    return "?";
}

std::vector<Step> parse_steps(std::string_view word) {
    std::vector<Step> out;
    out.reserve(word.size());
    for (char c : word) {
        switch (c) {
            case 'U': out.push_back(Step::U); break;
            case 'H': out.push_back(Step::H); break;
            case 'D': out.push_back(Step::D); break;
            default: throw NotAPath(std::string("unknown step '") + c + "'");
        }
    }
    return out;
}

std::string to_string(std::span<const Step> steps) {
    std::string s;
    s.reserve(steps.size());
    for (Step st : steps) s.push_back(static_cast<char>(st));
    return s;
}

PathWord::PathWord(std::vector<Step> steps, Kind kind) : steps_(std::move(steps)), kind_(kind) {
    heights_.reserve(steps_.size() + 1);
    heights_.push_back(0);
    for (Step s : steps_) {
        heights_.push_back(heights_.back() + delta(s));
        ++counts_[index_of(s)];
    }
}

PathWord PathWord::trusted(std::vector<Step> steps, Kind kind) { return PathWord(std::move(steps), kind); }

PathWord PathWord::parse(std::string_view word, Kind kind) { return validate(parse_steps(word), kind); }

PathWord PathWord::validate(std::vector<Step> steps, Kind kind) {
    PathWord w(std::move(steps), kind);
    const auto& st = w.steps_;
    const auto& h = w.heights_;
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
        if (st[i] == Step::U && st[i + 1] == Step::D) throw NotAPath("peak UD at step " + std::to_string(i));
        if (kind != Kind::KPath && st[i] == Step::D && st[i + 1] == Step::U) {
            throw NotAPath("valley DU at step " + std::to_string(i));
        }
        if (kind == Kind::KPath && st[i] == Step::U && st[i + 1] == Step::U) {
            throw NotAPath("factor UU at step " + std::to_string(i));
        }
        if (kind == Kind::KPath && st[i] == Step::D && st[i + 1] == Step::D) {
            throw NotAPath("factor DD at step " + std::to_string(i));
        }
    }
    if (std::any_of(h.begin(), h.end(), [](int v) { return v < 0; })) throw NotAPath("negative height");
    switch (kind) {
        case Kind::Bargraph:
            if (st.empty()) throw NotAPath("empty bargraph");
            if (st.front() != Step::U) throw NotAPath("bad endpoint: first step must be U");
            if (st.back() != Step::D) throw NotAPath("bad endpoint: last step must be D");
            for (std::size_t i = 1; i < st.size(); ++i) {
                if (h[i] == 0) throw NotAPath("touches axis internally after step " + std::to_string(i - 1));
            }
            if (h.back() != 0) throw NotAPath("bad endpoint: does not return to the axis");
            break;
        case Kind::Motzkin:
        case Kind::KPath:
            if (h.back() != 0) throw NotAPath("bad endpoint: does not return to the axis");
            break;
        case Kind::Prefix:
            break;
    }
    return w;
}

int PathWord::count(Step s) const { return counts_[index_of(s)]; }

std::string PathWord::str() const { return to_string(steps_); }

std::vector<Step> reflect(std::span<const Step> steps) {
    std::vector<Step> out(steps.rbegin(), steps.rend());
    for (Step& s : out) {
        if (s == Step::U) s = Step::D;
        else if (s == Step::D) s = Step::U;
    }
    return out;
}

std::vector<Run> runs(std::span<const Step> steps) {
    std::vector<Run> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!out.empty() && out.back().step == steps[i]) {
            ++out.back().length;
        } else {
            out.push_back({steps[i], 1, i});
        }
    }
    return out;
}

bool is_symmetric(const PathWord& w) { return reflect(w.steps()) == w.steps(); }

bool is_weakly_alternating(const PathWord& w) {
    // Run pattern must be U H D (H U H D)*.
    const auto rs = runs(w.steps());
    if (rs.size() < 3 || (rs.size() - 3) % 4 != 0) return false;
    static constexpr Step cycle[4] = {Step::H, Step::U, Step::H, Step::D};
    if (rs[0].step != Step::U || rs[1].step != Step::H || rs[2].step != Step::D) return false;
    for (std::size_t i = 3; i < rs.size(); ++i) {
        if (rs[i].step != cycle[(i - 3) % 4]) return false;
    }
    return true;
}

bool is_strictly_alternating(const PathWord& w) {
    if (!is_weakly_alternating(w)) return false;
    const auto rs = runs(w.steps());
    return std::all_of(rs.begin(), rs.end(), [](const Run& r) { return r.step != Step::H || r.length == 1; });
}

bool is_nondecreasing(const PathWord& w) {
    const auto& st = w.steps();
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
        if (st[i] == Step::D && st[i + 1] == Step::H) return false;
    }
    return true;
}

bool is_increasing(const PathWord& w) {
    if (!is_nondecreasing(w)) return false;
    const auto& st = w.steps();
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
        if (st[i] == Step::H && st[i + 1] == Step::H) return false;
    }
    return true;
}

}  // namespace bargraph::paths
