#pragma once

// Continuous maps between finite spaces are exactly the monotone point
// assignments. Hom-sets are enumerated by backtracking with monotonicity
// pruning and memoized per relation-matrix pair.

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "preorder.hpp"

namespace fintop {

struct ContinuousMap {
    FiniteSpace dom;
    FiniteSpace cod;
    std::vector<int> assignment;  // length dom.n, codomain point indices

    bool operator==(const ContinuousMap&) const = default;

    int operator()(int i) const { return assignment[i]; }
    bool is_identity_shaped() const {
        if (!(dom == cod)) return false;
        for (int i = 0; i < dom.n; ++i)
            if (assignment[i] != i) return false;
        return true;
    }
};

inline bool is_monotone(const FiniteSpace& dom, const FiniteSpace& cod,
                        const std::vector<int>& a) {
    for (int i = 0; i < dom.n; ++i)
        for (int j = 0; j < dom.n; ++j)
            if (dom.related(i, j) && !cod.related(a[i], a[j])) return false;
    return true;
}

inline ContinuousMap make_map(FiniteSpace dom, FiniteSpace cod, std::vector<int> assignment) {
    if (static_cast<int>(assignment.size()) != dom.n)
        throw error("assignment length mismatch");
    for (int v : assignment)
        if (v < 0 || v >= cod.n) throw error("assignment index out of range");
    for (int i = 0; i < dom.n; ++i)
        for (int j = 0; j < dom.n; ++j)
            if (dom.related(i, j) && !cod.related(assignment[i], assignment[j]))
                throw error("not monotone: " + dom.labels[i] + "->" + dom.labels[j] +
                            " is not preserved");
    return {std::move(dom), std::move(cod), std::move(assignment)};
}

inline ContinuousMap identity_map(const FiniteSpace& s) {
    std::vector<int> a(s.n);
    std::iota(a.begin(), a.end(), 0);
    return {s, s, std::move(a)};
}

inline ContinuousMap compose(const ContinuousMap& f, const ContinuousMap& g) {
    if (!(f.cod == g.dom)) throw error("compose: middle spaces differ");
    std::vector<int> a(f.dom.n);
    for (int i = 0; i < f.dom.n; ++i) a[i] = g.assignment[f.assignment[i]];
    return {f.dom, g.cod, std::move(a)};
}

namespace detail {

inline std::vector<std::vector<int>> enumerate_monotone(const FiniteSpace& x,
                                                        const FiniteSpace& y) {
    std::vector<std::vector<int>> out;
    if (x.n == 0) {
        out.push_back({});
        return out;
    }
    if (y.n == 0) return out;

    // Assign points in an order compatible with the preorder (closure size
    // non-increasing), checking monotonicity against points placed so far.
    std::vector<int> order(x.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = std::popcount(x.rel[a]), cb = std::popcount(x.rel[b]);
        return ca != cb ? ca > cb : a < b;
    });

    std::vector<int> a(x.n, -1);
    std::vector<int> stack;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == x.n) {
            out.push_back(a);
            return;
        }
        int i = order[depth];
        for (int c = 0; c < y.n; ++c) {
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int j = order[d];
                if (x.related(i, j) && !y.related(c, a[j])) ok = false;
                if (x.related(j, i) && !y.related(a[j], c)) ok = false;
            }
            if (ok) {
                a[i] = c;
                self(self, depth + 1);
                a[i] = -1;
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct HomCache {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::vector<int>>> entries;
};

inline HomCache& hom_cache() {
    static HomCache c;
    return c;
}

}  // namespace detail

// All monotone assignments x -> y, complete and duplicate-free, in
// lexicographic order. Memoized by the pair of relation matrices.
inline std::vector<ContinuousMap> hom_set(const FiniteSpace& x, const FiniteSpace& y) {
    auto key = std::make_pair(x.matrix_key() | (std::uint64_t(x.n) << 56),
                              y.matrix_key() | (std::uint64_t(y.n) << 56));
    auto& cache = detail::hom_cache();
    std::vector<std::vector<int>> assigns;
    bool hit = false;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) {
            assigns = it->second;
            hit = true;
        }
    }
    if (!hit) {
        assigns = detail::enumerate_monotone(x, y);
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.entries.emplace(key, assigns);
    }
    std::vector<ContinuousMap> out;
    out.reserve(assigns.size());
    for (auto& a : assigns) out.push_back({x, y, a});
    return out;
}

struct MapIsoWitness {
    Permutation dom_perm;  // homeomorphism dom(f) -> dom(f')
    Permutation cod_perm;  // homeomorphism cod(f) -> cod(f')
};

namespace detail {

inline std::vector<Permutation> homeomorphisms(const FiniteSpace& a, const FiniteSpace& b) {
    std::vector<Permutation> out;
    if (a.n != b.n) return out;
    if (a.n == 0) return {{}};
    Permutation order(a.n);
    std::iota(order.begin(), order.end(), 0);
    Permutation p(a.n);
    do {
        bool ok = true;
        for (int i = 0; i < a.n && ok; ++i)
            for (int j = 0; j < a.n && ok; ++j)
                if (a.related(i, j) != b.related(order[i], order[j])) ok = false;
        if (ok) {
            for (int i = 0; i < a.n; ++i) p[i] = order[i];
            out.push_back(p);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace detail

// Witness iff alpha; f' = f; beta for homeomorphisms alpha, beta.
inline std::optional<MapIsoWitness> maps_isomorphic(const ContinuousMap& f,
                                                    const ContinuousMap& g) {
    for (const auto& alpha : detail::homeomorphisms(f.dom, g.dom))
        for (const auto& beta : detail::homeomorphisms(f.cod, g.cod)) {
            bool ok = true;
            for (int i = 0; i < f.dom.n && ok; ++i)
                if (g.assignment[alpha[i]] != beta[f.assignment[i]]) ok = false;
            if (ok) return MapIsoWitness{alpha, beta};
        }
    return std::nullopt;
}

// Canonical pair form: both spaces in canonical form, assignment minimized
// over automorphism pairs. Two maps are isomorphic iff their canonical pair
// forms are equal.
inline ContinuousMap canonical_map(const ContinuousMap& f) {
    auto cd = canonical_form(f.dom);
    auto cc = canonical_form(f.cod);
    std::vector<int> base(f.dom.n);
    for (int i = 0; i < f.dom.n; ++i) base[cd.perm[i]] = cc.perm[f.assignment[i]];
    std::vector<int> best = base;
    std::vector<int> cand(f.dom.n);
    for (const auto& alpha : automorphisms(cd.space))
        for (const auto& beta : automorphisms(cc.space)) {
            for (int i = 0; i < f.dom.n; ++i) cand[alpha[i]] = beta[base[i]];
            if (cand < best) best = cand;
        }
    return {cd.space, cc.space, best};
}

inline std::string map_key(const ContinuousMap& f) {
    ContinuousMap c = canonical_map(f);
    std::string k = std::to_string(c.dom.n) + ":" + std::to_string(c.dom.matrix_key()) + "|" +
                    std::to_string(c.cod.n) + ":" + std::to_string(c.cod.matrix_key()) + "|";
    for (int v : c.assignment) k += std::to_string(v) + ",";
    return k;
}

inline PointSet image_of(const ContinuousMap& f, PointSet a) {
    PointSet out = 0;
    for (int i = 0; i < f.dom.n; ++i)
        if ((a >> i) & 1u) out |= 1u << f.assignment[i];
    return out;
}

inline PointSet preimage_of(const ContinuousMap& f, PointSet b) {
    PointSet out = 0;
    for (int i = 0; i < f.dom.n; ++i)
        if ((b >> f.assignment[i]) & 1u) out |= 1u << i;
    return out;
}

struct MapOracles {
    bool is_surjective = false;
    bool is_injective = false;
    bool is_dense_image = false;
    bool is_induced_topology = false;
    bool is_subspace_embedding = false;
    bool is_closed_map = false;
    bool is_isomorphism = false;
};

inline MapOracles map_oracles(const ContinuousMap& f) {
    MapOracles o;
    PointSet image = image_of(f, f.dom.all());
    o.is_surjective = image == f.cod.all();

    o.is_injective = true;
    for (int i = 0; i < f.dom.n; ++i)
        for (int j = i + 1; j < f.dom.n; ++j)
            if (f.assignment[i] == f.assignment[j]) o.is_injective = false;

    o.is_dense_image = closure(f.cod, image) == f.cod.all();

    // Opens of dom are exactly the preimages of opens of cod.
    o.is_induced_topology = true;
    for (PointSet u : open_sets(f.dom)) {
        bool found = false;
        for (PointSet v : open_sets(f.cod))
            if (preimage_of(f, v) == u) {
                found = true;
                break;
            }
        if (!found) o.is_induced_topology = false;
    }

    o.is_subspace_embedding = o.is_injective && o.is_induced_topology;

    o.is_closed_map = true;
    for (PointSet c : closed_sets(f.dom))
        if (!is_closed(f.cod, image_of(f, c))) o.is_closed_map = false;

    o.is_isomorphism = o.is_surjective && o.is_injective && o.is_induced_topology;
    return o;
}

}  // namespace fintop
