#pragma once

// Finite topological spaces represented by their specialisation preorder.
// A space is a reflexive-transitive relation on labelled points; point j is
// in the closure of point i iff rel[i] has bit j set.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subsets of a space's points as bit vectors; bit i = point i is a member.
using PointSet = std::uint32_t;

constexpr int kMaxPoints = 16;

struct FiniteSpace {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> rel;  // rel[i] bit j: j in cl(i)

    bool operator==(const FiniteSpace&) const = default;

    bool related(int i, int j) const { return (rel[i] >> j) & 1u; }
    PointSet all() const { return n == 32 ? ~0u : (1u << n) - 1u; }

    // Row-major relation matrix packed into one integer; n <= 8.
    std::uint64_t matrix_key() const {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                k = (k << 1) | (related(i, j) ? 1u : 0u);
        return k;
    }
};

namespace detail {

inline void transitive_close(std::vector<std::uint32_t>& rows) {
    const int n = static_cast<int>(rows.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint32_t acc = rows[i];
            std::uint32_t m = rows[i];
            while (m) {
                int j = std::countr_zero(m);
                m &= m - 1;
                acc |= rows[j];
            }
            if (acc != rows[i]) {
                rows[i] = acc;
                changed = true;
            }
        }
    }
}

inline bool is_transitive(const std::vector<std::uint32_t>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i) {
        std::uint32_t m = rows[i];
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if ((rows[i] | rows[j]) != rows[i]) return false;
        }
    }
    return true;
}

}  // namespace detail

inline FiniteSpace make_space(const std::vector<std::string>& point_labels,
                              const std::vector<std::pair<std::string, std::string>>& arrows) {
    FiniteSpace s;
    s.n = static_cast<int>(point_labels.size());
    if (s.n > kMaxPoints) throw error("too many points: " + std::to_string(s.n));
    s.labels = point_labels;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.labels[i] == s.labels[j]) throw error("duplicate label: " + s.labels[i]);
    auto index_of = [&](const std::string& l) {
        for (int i = 0; i < s.n; ++i)
            if (s.labels[i] == l) return i;
        throw error("unknown label in arrow: " + l);
    };
    s.rel.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i) s.rel[i] = 1u << i;
    for (const auto& [from, to] : arrows) s.rel[index_of(from)] |= 1u << index_of(to);
    detail::transitive_close(s.rel);
    return s;
}

// cl(a) = union of closures of the members of a.
inline PointSet closure(const FiniteSpace& s, PointSet a) {
    PointSet out = 0;
    std::uint32_t m = a;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        out |= s.rel[i];
    }
    return out;
}

// Closed = stable under following arrows out of the set.
inline bool is_closed(const FiniteSpace& s, PointSet c) {
    return closure(s, c) == c;
}

inline bool is_open(const FiniteSpace& s, PointSet u) {
    return is_closed(s, static_cast<PointSet>(~u) & s.all());
}

inline std::vector<PointSet> open_sets(const FiniteSpace& s) {
    std::vector<PointSet> out;
    for (PointSet u = 0; u <= s.all(); ++u) {
        if (is_open(s, u)) out.push_back(u);
        if (u == s.all()) break;
    }
    return out;
}

inline std::vector<PointSet> closed_sets(const FiniteSpace& s) {
    std::vector<PointSet> out;
    for (PointSet c = 0; c <= s.all(); ++c) {
        if (is_closed(s, c)) out.push_back(c);
        if (c == s.all()) break;
    }
    return out;
}

using Permutation = std::vector<int>;  // p[i] = new position of old point i

inline FiniteSpace apply_permutation(const FiniteSpace& s, const Permutation& p) {
    FiniteSpace t;
    t.n = s.n;
    t.labels.resize(s.n);
    t.rel.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i) {
        t.labels[p[i]] = s.labels[i];
        for (int j = 0; j < s.n; ++j)
            if (s.related(i, j)) t.rel[p[i]] |= 1u << p[j];
    }
    return t;
}

struct CanonicalForm {
    FiniteSpace space;
    Permutation perm;  // witnessing permutation applied to the input
};

// Lexicographically minimal relation matrix over all point permutations.
// Two spaces are homeomorphic iff their canonical matrices are identical.
inline CanonicalForm canonical_form(const FiniteSpace& s) {
    if (s.n == 0) return {s, {}};
    Permutation order(s.n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t best = ~0ull;
    Permutation best_perm;
    Permutation inv(s.n);
    do {
        // order[a] = old index placed at position a; invert to p[i] = position
        for (int a = 0; a < s.n; ++a) inv[order[a]] = a;
        std::uint64_t k = 0;
        for (int a = 0; a < s.n; ++a)
            for (int b = 0; b < s.n; ++b)
                k = (k << 1) | (s.related(order[a], order[b]) ? 1u : 0u);
        if (k < best) {
            best = k;
            best_perm = inv;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return {apply_permutation(s, best_perm), best_perm};
}

// All self-permutations preserving the relation matrix.
inline std::vector<Permutation> automorphisms(const FiniteSpace& s) {
    std::vector<Permutation> out;
    if (s.n == 0) return {{}};
    Permutation order(s.n);
    std::iota(order.begin(), order.end(), 0);
    Permutation inv(s.n);
    do {
        bool ok = true;
        for (int i = 0; i < s.n && ok; ++i)
            for (int j = 0; j < s.n && ok; ++j)
                if (s.related(i, j) != s.related(order[i], order[j])) ok = false;
        if (ok) {
            for (int a = 0; a < s.n; ++a) inv[order[a]] = a;
            out.push_back(inv);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

// All homeomorphism classes of spaces with exactly n points, each in
// canonical form, generic labels p0, p1, ...
inline std::vector<FiniteSpace> enumerate_spaces(int n) {
    if (n < 0) throw error("negative size");
    if (n == 0) return {FiniteSpace{}};
    if (n > 6) throw error("enumeration beyond 6 points not supported");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);

    const int offdiag = n * (n - 1);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) slots.emplace_back(i, j);

    std::vector<std::uint64_t> seen;
    std::vector<FiniteSpace> out;
    std::vector<std::uint32_t> rows(n);
    for (std::uint64_t mask = 0; mask < (1ull << offdiag); ++mask) {
        for (int i = 0; i < n; ++i) rows[i] = 1u << i;
        for (int b = 0; b < offdiag; ++b)
            if ((mask >> b) & 1u) rows[slots[b].first] |= 1u << slots[b].second;
        if (!detail::is_transitive(rows)) continue;
        FiniteSpace s;
        s.n = n;
        s.labels = labels;
        s.rel = rows;
        FiniteSpace canon = canonical_form(s).space;
        std::uint64_t key = canon.matrix_key();
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            canon.labels = labels;
            out.push_back(std::move(canon));
        }
    }
    std::sort(out.begin(), out.end(), [](const FiniteSpace& a, const FiniteSpace& b) {
        return a.matrix_key() < b.matrix_key();
    });
    return out;
}

struct SpaceOracles {
    bool is_t0 = false;
    bool is_t1 = false;
    bool is_discrete = false;
    bool is_antidiscrete = false;
    bool is_connected = false;  // connected or empty
    bool is_totally_disconnected = false;
    bool is_normal_t4 = false;
    bool is_regular_t3 = false;
    bool is_hausdorff = false;
    bool is_nonempty = false;
};

// Classical open-set definitions computed directly; subset sweeps are fine
// at these sizes.
inline SpaceOracles space_oracles(const FiniteSpace& s) {
    SpaceOracles o;
    o.is_nonempty = s.n > 0;

    o.is_t0 = true;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && s.related(i, j) && s.related(j, i)) o.is_t0 = false;

    o.is_t1 = true;
    for (int i = 0; i < s.n; ++i)
        if (s.rel[i] != (1u << i)) o.is_t1 = false;
    o.is_discrete = o.is_t1;

    o.is_antidiscrete = true;
    for (int i = 0; i < s.n; ++i)
        if (s.rel[i] != s.all()) o.is_antidiscrete = false;

    // Components of the comparability graph.
    std::vector<int> comp(s.n, -1);
    int ncomp = 0;
    for (int i = 0; i < s.n; ++i) {
        if (comp[i] != -1) continue;
        comp[i] = ncomp;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < s.n; ++w)
                if (comp[w] == -1 && (s.related(v, w) || s.related(w, v))) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    o.is_connected = ncomp <= 1;
    o.is_totally_disconnected = ncomp == s.n;

    const auto opens = open_sets(s);
    const auto closeds = closed_sets(s);
    auto separated = [&](PointSet a, PointSet b) {
        for (PointSet u : opens) {
            if ((a & ~u) != 0) continue;
            for (PointSet v : opens)
                if ((b & ~v) == 0 && (u & v) == 0) return true;
        }
        return false;
    };

    o.is_normal_t4 = true;
    for (PointSet c1 : closeds)
        for (PointSet c2 : closeds)
            if ((c1 & c2) == 0 && !separated(c1, c2)) o.is_normal_t4 = false;

    o.is_regular_t3 = true;
    for (int x = 0; x < s.n; ++x)
        for (PointSet f : closeds)
            if (!((f >> x) & 1u) && !separated(1u << x, f)) o.is_regular_t3 = false;

    o.is_hausdorff = true;
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            if (!separated(1u << x, 1u << y)) o.is_hausdorff = false;

    return o;
}

}  // namespace fintop
