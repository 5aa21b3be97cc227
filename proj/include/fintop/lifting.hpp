#pragma once

// The lifting property f ⋌ g by exhaustive commuting-square search, plus
// universe-relative iterated orthogonal classes.

#include <atomic>
#include <cstdint>
#include <functional>
#include <tuple>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "maps.hpp"

namespace fintop {

struct LiftReport {
    bool holds = true;
    // A commuting square (i: dom f -> dom g, j: cod f -> cod g) admitting
    // no diagonal; present iff holds is false.
    std::optional<std::pair<ContinuousMap, ContinuousMap>> counterexample;
    long squares_checked = 0;
};

namespace detail {

struct LiftCache {
    std::mutex mu;
    std::map<std::string, bool> entries;
};

inline LiftCache& lift_cache() {
    static LiftCache c;
    return c;
}

inline std::string lift_key(const ContinuousMap& f, const ContinuousMap& g) {
    return map_key(f) + "#" + map_key(g);
}

}  // namespace detail

// Full search with counterexample; not memoized.
inline LiftReport has_lifting(const ContinuousMap& f, const ContinuousMap& g) {
    LiftReport rep;
    const auto is = hom_set(f.dom, g.dom);
    const auto js = hom_set(f.cod, g.cod);
    const auto diags = hom_set(f.cod, g.dom);
    // If no square commutes the lifting holds vacuously; this includes the
    // empty-hom cases produced by the ∅-domain seeds.
    for (const auto& i : is) {
        for (const auto& j : js) {
            // commute: f;j = i;g
            bool commutes = true;
            for (int a = 0; a < f.dom.n && commutes; ++a)
                if (j.assignment[f.assignment[a]] != g.assignment[i.assignment[a]])
                    commutes = false;
            if (!commutes) continue;
            ++rep.squares_checked;
            bool found = false;
            for (const auto& d : diags) {
                bool ok = true;
                for (int a = 0; a < f.dom.n && ok; ++a)
                    if (d.assignment[f.assignment[a]] != i.assignment[a]) ok = false;
                for (int b = 0; b < f.cod.n && ok; ++b)
                    if (g.assignment[d.assignment[b]] != j.assignment[b]) ok = false;
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.holds = false;
                rep.counterexample = std::make_pair(i, j);
                return rep;
            }
        }
    }
    return rep;
}

// Memoized boolean verdict, keyed by the canonical pair of canonical map
// forms (the lifting property is isomorphism-invariant).
inline bool lifts(const ContinuousMap& f, const ContinuousMap& g) {
    auto& cache = detail::lift_cache();
    std::string key = detail::lift_key(f, g);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    bool v = has_lifting(f, g).holds;
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.entries.emplace(key, v);
    return v;
}

enum class Side { L, R };

enum class Exactness { exact, relative_approx };

inline std::string to_string(Exactness e) {
    return e == Exactness::exact ? "exact" : "relative-approximation";
}

// Equality of canonical pair forms, ignoring labels.
inline bool same_canonical(const ContinuousMap& a, const ContinuousMap& b) {
    return a.dom.n == b.dom.n && a.cod.n == b.cod.n && a.dom.rel == b.dom.rel &&
           a.cod.rel == b.cod.rel && a.assignment == b.assignment;
}

struct MapClass {
    std::vector<ContinuousMap> members;  // canonical pair forms, sorted
    std::string provenance;              // word applied so far
    int universe_bound = -1;
    Exactness exactness = Exactness::exact;

    bool contains(const ContinuousMap& f) const {
        ContinuousMap c = canonical_map(f);
        for (const auto& m : members)
            if (same_canonical(m, c)) return true;
        return false;
    }
};

inline void sort_class(std::vector<ContinuousMap>& ms) {
    std::sort(ms.begin(), ms.end(), [](const ContinuousMap& a, const ContinuousMap& b) {
        auto ka = std::make_tuple(a.dom.n, a.cod.n, a.dom.matrix_key(), a.cod.matrix_key(),
                                  a.assignment);
        auto kb = std::make_tuple(b.dom.n, b.cod.n, b.dom.matrix_key(), b.cod.matrix_key(),
                                  b.assignment);
        return ka < kb;
    });
}

inline MapClass make_seed_class(const std::vector<ContinuousMap>& seeds) {
    MapClass c;
    for (const auto& s : seeds) {
        ContinuousMap cm = canonical_map(s);
        if (!c.contains(cm)) c.members.push_back(cm);
    }
    sort_class(c.members);
    return c;
}

struct OrthStep {
    enum class Kind { L, R, Trunc } kind;
    int k = 0;  // truncation bound, k >= 1
};

struct OrthWord {
    std::vector<OrthStep> steps;
};

// Word syntax: tokens l, r, <INT, separated by commas or whitespace; bare
// runs like "rl" are also accepted.
inline OrthWord parse_word(const std::string& text) {
    OrthWord w;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ',' || c == ' ' || c == '\t') {
            ++i;
        } else if (c == 'l') {
            w.steps.push_back({OrthStep::Kind::L});
            ++i;
        } else if (c == 'r') {
            w.steps.push_back({OrthStep::Kind::R});
            ++i;
        } else if (c == '<') {
            size_t j = i + 1;
            int k = 0;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
                k = k * 10 + (text[j] - '0');
                ++j;
            }
            if (j == i + 1) throw error("word: '<' must be followed by an integer");
            if (k < 1) throw error("word: truncation bound must be >= 1");
            w.steps.push_back({OrthStep::Kind::Trunc, k});
            i = j;
        } else {
            throw error(std::string("word: unexpected character '") + c + "'");
        }
    }
    if (w.steps.empty()) throw error("word: empty");
    return w;
}

inline std::string to_string(const OrthWord& w) {
    std::string out;
    for (size_t i = 0; i < w.steps.size(); ++i) {
        if (i) out += ",";
        switch (w.steps[i].kind) {
            case OrthStep::Kind::L: out += "l"; break;
            case OrthStep::Kind::R: out += "r"; break;
            case OrthStep::Kind::Trunc: out += "<" + std::to_string(w.steps[i].k); break;
        }
    }
    return out;
}

struct Universe {
    int bound = 0;
    std::vector<FiniteSpace> spaces;    // canonical, all sizes <= bound
    std::vector<ContinuousMap> maps;    // one per isomorphism class
};

// Every homeomorphism class of spaces of size <= n and every isomorphism
// class of maps between them.
inline Universe build_universe(int n, int max_bound = 5) {
    if (n < 0) throw error("negative universe bound");
    if (n > max_bound)
        throw error("universe bound " + std::to_string(n) + " exceeds maximum " +
                    std::to_string(max_bound));
    Universe u;
    u.bound = n;
    for (int k = 0; k <= n; ++k)
        for (auto& s : enumerate_spaces(k)) u.spaces.push_back(s);
    for (const auto& x : u.spaces)
        for (const auto& y : u.spaces) {
            std::vector<std::vector<int>> seen;
            for (const auto& f : hom_set(x, y)) {
                ContinuousMap c = canonical_map(f);
                if (std::find(seen.begin(), seen.end(), c.assignment) == seen.end()) {
                    seen.push_back(c.assignment);
                    u.maps.push_back(std::move(c));
                }
            }
        }
    sort_class(u.maps);
    return u;
}

namespace detail {

template <typename Pred>
inline std::vector<ContinuousMap> parallel_filter(const std::vector<ContinuousMap>& in,
                                                  Pred pred, int jobs) {
    if (jobs <= 1 || in.size() < 32) {
        std::vector<ContinuousMap> out;
        for (const auto& m : in)
            if (pred(m)) out.push_back(m);
        return out;
    }
    std::vector<char> keep(in.size(), 0);
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= in.size()) break;
                keep[i] = pred(in[i]) ? 1 : 0;
            }
        });
    for (auto& w : workers) w.join();
    std::vector<ContinuousMap> out;
    for (size_t i = 0; i < in.size(); ++i)
        if (keep[i]) out.push_back(in[i]);
    return out;
}

// Cheap members first so failing candidates bail out early.
inline std::vector<ContinuousMap> by_size(std::vector<ContinuousMap> ms) {
    std::stable_sort(ms.begin(), ms.end(), [](const ContinuousMap& a, const ContinuousMap& b) {
        return a.dom.n + a.cod.n < b.dom.n + b.cod.n;
    });
    return ms;
}

}  // namespace detail

// side=L: { f in u : for all g in c, f ⋌ g }.
// side=R: { g in u : for all f in c, f ⋌ g }.
inline MapClass orthogonal_relative(const MapClass& c, Side side, const Universe& u,
                                    int jobs = 1) {
    const auto members = detail::by_size(c.members);
    auto pred = [&](const ContinuousMap& cand) {
        for (const auto& m : members) {
            bool ok = side == Side::L ? lifts(cand, m) : lifts(m, cand);
            if (!ok) return false;
        }
        return true;
    };
    MapClass out;
    out.members = detail::parallel_filter(u.maps, pred, jobs);
    out.universe_bound = u.bound;
    out.provenance = c.provenance + (side == Side::L ? "l" : "r");
    // A single orthogonal of a literal seed class is exact for membership
    // queries; anything deeper only bounds the true class from above.
    out.exactness = c.provenance.empty() ? c.exactness : Exactness::relative_approx;
    return out;
}

inline MapClass truncate_class(const MapClass& c, int k) {
    MapClass out = c;
    out.members.clear();
    for (const auto& m : c.members)
        if (m.dom.n < k && m.cod.n < k) out.members.push_back(m);
    out.provenance = c.provenance + "<" + std::to_string(k) + ",";
    return out;
}

inline MapClass eval_word(const MapClass& seeds, const OrthWord& w, const Universe& u,
                          int jobs = 1) {
    MapClass cur = seeds;
    for (const auto& step : w.steps) {
        switch (step.kind) {
            case OrthStep::Kind::L: cur = orthogonal_relative(cur, Side::L, u, jobs); break;
            case OrthStep::Kind::R: cur = orthogonal_relative(cur, Side::R, u, jobs); break;
            case OrthStep::Kind::Trunc: cur = truncate_class(cur, step.k); break;
        }
    }
    return cur;
}

struct MembershipVerdict {
    bool member = false;
    Exactness exactness = Exactness::relative_approx;
};

// Evaluate the word through its next-to-last step, then test f by lifting
// against every member per the final step's side. Exact when the
// penultimate class is the literal seed class itself.
inline MembershipVerdict member_of_word_class(const ContinuousMap& f, const MapClass& seeds,
                                              const OrthWord& w, const Universe& u,
                                              int jobs = 1) {
    if (w.steps.empty()) throw error("empty word");
    OrthStep last = w.steps.back();
    if (last.kind == OrthStep::Kind::Trunc) {
        MapClass cls = eval_word(seeds, w, u, jobs);
        return {cls.contains(f), cls.exactness};
    }
    OrthWord prefix;
    prefix.steps.assign(w.steps.begin(), w.steps.end() - 1);
    MapClass pen = prefix.steps.empty() ? seeds : eval_word(seeds, prefix, u, jobs);
    bool member = true;
    for (const auto& m : detail::by_size(pen.members)) {
        bool ok = last.kind == OrthStep::Kind::L ? lifts(f, m) : lifts(m, f);
        if (!ok) {
            member = false;
            break;
        }
    }
    Exactness ex = prefix.steps.empty() ? Exactness::exact : Exactness::relative_approx;
    return {member, ex};
}

}  // namespace fintop
