#pragma once

// The catalogue of lifting-defined properties, their semantic oracles, the
// special constructions (principal-ultrafilter point adjunction, Urysohn
// zigzags), and the sweep that cross-checks lifting verdicts against the
// oracles over a bounded universe.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lifting.hpp"
#include "notation.hpp"

namespace fintop {

// Inclusion A -> A ⊔ {w} where the new point's neighbourhoods are the
// neighbourhoods of p: it lands in the closure of exactly the points whose
// closure contains p. The new point is closed and not open.
inline ContinuousMap adjoin_point(const FiniteSpace& a, int p) {
    if (a.n == 0) throw error("adjoin_point: empty space has no ultrafilter");
    if (p < 0 || p >= a.n) throw error("adjoin_point: no such point");
    FiniteSpace b;
    b.n = a.n + 1;
    b.labels = a.labels;
    std::string fresh = "w";
    while (std::find(b.labels.begin(), b.labels.end(), fresh) != b.labels.end()) fresh += "'";
    b.labels.push_back(fresh);
    b.rel = a.rel;
    for (int y = 0; y < a.n; ++y)
        if (a.related(y, p)) b.rel[y] |= 1u << a.n;
    b.rel.push_back(1u << a.n);
    std::vector<int> assignment(a.n);
    std::iota(assignment.begin(), assignment.end(), 0);
    return make_map(a, std::move(b), std::move(assignment));
}

// Domain x <- x1 -> x2 <- x3 -> ... -> y (n interior points, n odd);
// codomain glues the interior to a single open point. n=3 is the T4 seed.
inline ContinuousMap zigzag_map(int n) {
    if (n < 1 || n % 2 == 0) throw error("zigzag_map: n must be odd and >= 1");
    std::vector<std::string> labels{"x"};
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    labels.push_back("y");
    std::vector<std::pair<std::string, std::string>> arrows;
    for (int i = 1; i <= n; i += 2) {  // odd interior points are open sources
        arrows.emplace_back(labels[i], labels[i - 1]);
        arrows.emplace_back(labels[i], labels[i + 1]);
    }
    FiniteSpace dom = make_space(labels, arrows);
    FiniteSpace cod = make_space({"x", "m", "y"}, {{"m", "x"}, {"m", "y"}});
    std::vector<int> assignment(n + 2, 1);
    assignment[0] = 0;
    assignment[n + 1] = 2;
    return make_map(std::move(dom), std::move(cod), std::move(assignment));
}

enum class Subject { map, space };

// How a space subject is turned into the map fed to the lifting test.
enum class SpaceAsMap { to_point, from_empty };

struct DirectLifting {
    Side side;  // L: subject ⋌ seed, R: seed ⋌ subject
    std::string seed_literal;
    SpaceAsMap how = SpaceAsMap::to_point;
};

struct MembershipInWord {
    std::vector<std::string> seed_literals;
    std::string word;
    SpaceAsMap how = SpaceAsMap::to_point;
};

struct QuantifiedLifting {
    std::string probe_literal;
    bool injective_only = false;
    std::string rhs_literal;
};

using PropertyForm = std::variant<DirectLifting, MembershipInWord, QuantifiedLifting>;

enum class CatalogueExactness { exact, relative_approx, finite_trivial };

// How the verification sweep treats an entry:
//   equivalence — lifting verdict must equal the oracle on every subject;
//   necessary   — oracle-true subjects must pass the lifting test;
//   diagnostic  — agreement is reported but never gates.
enum class VerifyMode { equivalence, necessary, diagnostic };

struct PropertyDef {
    std::string name;
    Subject subject;
    PropertyForm form;
    std::function<bool(const ContinuousMap&)> map_oracle;  // for map subjects
    std::function<bool(const SpaceOracles&)> space_oracle;  // for space subjects
    CatalogueExactness exactness = CatalogueExactness::exact;
    VerifyMode verify_mode = VerifyMode::equivalence;
    int subject_max_points = -1;  // sweep cap on endpoint sizes, -1 = no cap
    int word_universe_cap = -1;   // cap on the universe used to fold a word
};

inline std::string to_string(CatalogueExactness e) {
    switch (e) {
        case CatalogueExactness::exact: return "exact";
        case CatalogueExactness::relative_approx: return "relative-approximation";
        case CatalogueExactness::finite_trivial: return "finite-trivial";
    }
    return "?";
}

// The second member is the closed-point inclusion; the open-point variant
// that appears in one display of the source material is not a closed map
// and would not even lift against the point-adjunction inclusions.
inline const std::vector<std::string>& proper_seed_class_literals() {
    static const std::vector<std::string> lits{
        "{B1<-O->B2} => {*}",
        "{U'} => {U->U'}",
        "{x<->y} => {x=y}",
        "{o->c} => {o=c}",
    };
    return lits;
}

inline std::vector<PropertyDef> catalogue() {
    std::vector<PropertyDef> out;
    auto add = [&](PropertyDef p) { out.push_back(std::move(p)); };

    // -- map properties --
    add({"surjective", Subject::map, DirectLifting{Side::R, "{} => {*}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_surjective; }, nullptr,
         CatalogueExactness::exact, VerifyMode::equivalence});
    add({"injective", Subject::map, DirectLifting{Side::L, "{x<->y} => {x=y}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_injective; }, nullptr,
         CatalogueExactness::exact, VerifyMode::equivalence});
    add({"induced_topology", Subject::map, DirectLifting{Side::L, "{o->c} => {o=c}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_induced_topology; }, nullptr,
         CatalogueExactness::exact, VerifyMode::equivalence});
    add({"dense_image", Subject::map, DirectLifting{Side::L, "{c} => {o->c}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_dense_image; }, nullptr,
         CatalogueExactness::exact, VerifyMode::equivalence});
    // The open-point inclusion appears as the dense seed in one place in the
    // source material; swept diagnostically, it disagrees with the oracle.
    add({"dense_image_open_seed_variant", Subject::map, DirectLifting{Side::L, "{o} => {o->c}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_dense_image; }, nullptr,
         CatalogueExactness::relative_approx, VerifyMode::diagnostic});
    add({"closed_map", Subject::map, DirectLifting{Side::R, "{o} => {o->c}"},
         [](const ContinuousMap& f) { return map_oracles(f).is_closed_map; }, nullptr,
         CatalogueExactness::exact, VerifyMode::equivalence});

    // -- space properties --
    add({"t0", Subject::space, DirectLifting{Side::R, "{x<->y} => {x=y}", SpaceAsMap::to_point},
         nullptr, [](const SpaceOracles& o) { return o.is_t0; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    add({"t1", Subject::space, DirectLifting{Side::R, "{o->c} => {o=c}", SpaceAsMap::to_point},
         nullptr, [](const SpaceOracles& o) { return o.is_t1; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    add({"connected_or_empty", Subject::space,
         DirectLifting{Side::L, "{a,b} => {a=b}", SpaceAsMap::to_point}, nullptr,
         [](const SpaceOracles& o) { return o.is_connected; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    add({"nonempty", Subject::space, DirectLifting{Side::L, "{} => {*}", SpaceAsMap::to_point},
         nullptr, [](const SpaceOracles& o) { return o.is_nonempty; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    add({"discrete", Subject::space,
         MembershipInWord{{"{} => {*}"}, "rl", SpaceAsMap::from_empty}, nullptr,
         [](const SpaceOracles& o) { return o.is_discrete; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    // The empty collapse ∅→{*} never lifts on the right against ∅→{*}
    // itself, so the class picks out the nonempty antidiscrete spaces.
    add({"antidiscrete", Subject::space,
         MembershipInWord{{"{x<->y} => {x=y}"}, "lr", SpaceAsMap::to_point}, nullptr,
         [](const SpaceOracles& o) { return o.is_antidiscrete && o.is_nonempty; },
         CatalogueExactness::exact, VerifyMode::equivalence});
    add({"totally_disconnected_nonempty", Subject::space,
         MembershipInWord{{"{a,b} => {a=b}"}, "lr", SpaceAsMap::to_point}, nullptr,
         [](const SpaceOracles& o) { return o.is_totally_disconnected && o.is_nonempty; },
         CatalogueExactness::relative_approx, VerifyMode::necessary});
    add({"hausdorff", Subject::space,
         QuantifiedLifting{"{x,y}", true, "{x->o<-y} => {x=o=y}"}, nullptr,
         [](const SpaceOracles& o) { return o.is_hausdorff; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    // The same property written with the open/closed roles of the auxiliary
    // space reversed; swept alongside the entry above.
    add({"hausdorff_reversed_variant", Subject::space,
         QuantifiedLifting{"{x,y}", true, "{x<-o->y} => {x=o=y}"}, nullptr,
         [](const SpaceOracles& o) { return o.is_hausdorff; },
         CatalogueExactness::relative_approx, VerifyMode::diagnostic});
    add({"regular_t3", Subject::space,
         QuantifiedLifting{"{x}", false, "{x->X<-U->F} => {x=X=U->F}"}, nullptr,
         [](const SpaceOracles& o) { return o.is_regular_t3; }, CatalogueExactness::exact,
         VerifyMode::equivalence});
    add({"normal_t4", Subject::space,
         DirectLifting{Side::L, "{a<-U->x<-V->b} => {a<-U=x=V->b}", SpaceAsMap::from_empty},
         nullptr, [](const SpaceOracles& o) { return o.is_normal_t4; },
         CatalogueExactness::exact, VerifyMode::equivalence});
    // The two deep-word entries fold their words over a size-3 universe (the
    // proper class is given by maps between spaces of size at most 3); deeper
    // universes make the intermediate classes impractically large.
    add({"compact_hausdorff", Subject::space,
         MembershipInWord{proper_seed_class_literals(), "lr", SpaceAsMap::to_point}, nullptr,
         [](const SpaceOracles& o) { return o.is_hausdorff; },
         CatalogueExactness::finite_trivial, VerifyMode::necessary, -1, 3});
    add({"proper_evidence", Subject::map,
         MembershipInWord{{"{o} => {o->c}"}, "r,<5,l,r"},
         [](const ContinuousMap& f) { return map_oracles(f).is_closed_map; }, nullptr,
         CatalogueExactness::relative_approx, VerifyMode::necessary, 3, 3});

    return out;
}

namespace detail {

inline ContinuousMap space_as_map(const FiniteSpace& s, SpaceAsMap how) {
    if (how == SpaceAsMap::to_point) {
        FiniteSpace pt = make_space({"*"}, {});
        return {s, pt, std::vector<int>(s.n, 0)};
    }
    return {FiniteSpace{}, s, {}};
}

}  // namespace detail

struct PropertyVerdict {
    bool holds = false;
    CatalogueExactness exactness = CatalogueExactness::exact;
};

inline PropertyVerdict check_property(const ContinuousMap& subject_map, const PropertyDef& p,
                                      const Universe& u, int jobs = 1) {
    PropertyVerdict v;
    v.exactness = p.exactness;
    if (const auto* d = std::get_if<DirectLifting>(&p.form)) {
        ContinuousMap seed = parse_map(d->seed_literal);
        v.holds = d->side == Side::L ? lifts(subject_map, seed) : lifts(seed, subject_map);
    } else if (const auto* m = std::get_if<MembershipInWord>(&p.form)) {
        std::vector<ContinuousMap> seeds;
        for (const auto& lit : m->seed_literals) seeds.push_back(parse_map(lit));
        Universe capped;
        bool cap = p.word_universe_cap >= 0 && u.bound > p.word_universe_cap;
        if (cap) capped = build_universe(p.word_universe_cap);
        auto verdict = member_of_word_class(subject_map, make_seed_class(seeds),
                                            parse_word(m->word), cap ? capped : u, jobs);
        v.holds = verdict.member;
    } else {
        const auto& q = std::get<QuantifiedLifting>(p.form);
        FiniteSpace probe = parse_space(q.probe_literal);
        ContinuousMap rhs = parse_map(q.rhs_literal);
        const FiniteSpace& target = subject_map.dom;  // space subjects use X -> {*}
        v.holds = true;
        for (const auto& pm : hom_set(probe, target)) {
            if (q.injective_only && !map_oracles(pm).is_injective) continue;
            if (!lifts(pm, rhs)) {
                v.holds = false;
                break;
            }
        }
    }
    return v;
}

inline PropertyVerdict check_property(const FiniteSpace& subject, const PropertyDef& p,
                                      const Universe& u, int jobs = 1) {
    if (p.subject != Subject::space) throw error("property expects a map subject");
    SpaceAsMap how = SpaceAsMap::to_point;
    if (const auto* d = std::get_if<DirectLifting>(&p.form)) how = d->how;
    if (const auto* m = std::get_if<MembershipInWord>(&p.form)) how = m->how;
    return check_property(detail::space_as_map(subject, how), p, u, jobs);
}

struct EntryReport {
    std::string name;
    std::string exactness;
    std::string mode;
    int universe_bound = 0;
    long checked = 0;
    long agreements = 0;
    std::vector<std::string> disagreements;  // reproducible literals
};

struct VerificationReport {
    std::vector<EntryReport> entries;

    bool accepted() const {
        for (const auto& e : entries)
            if (e.mode != "diagnostic" && !e.disagreements.empty()) return false;
        return true;
    }
};

namespace detail {

// The per-entry lifting test with any word-membership prefix class
// evaluated once up front, so a sweep does not re-fold the word per subject.
struct PreparedProperty {
    const PropertyDef* def;
    std::optional<ContinuousMap> direct_seed;
    std::optional<MapClass> penultimate;  // for word membership
    std::optional<OrthStep> final_step;
    std::optional<FiniteSpace> probe;
    std::optional<ContinuousMap> rhs;

    bool test(const ContinuousMap& subject_map) const {
        if (direct_seed) {
            const auto& d = std::get<DirectLifting>(def->form);
            return d.side == Side::L ? lifts(subject_map, *direct_seed)
                                     : lifts(*direct_seed, subject_map);
        }
        if (penultimate) {
            if (final_step->kind == OrthStep::Kind::Trunc)
                return penultimate->contains(subject_map);
            for (const auto& m : penultimate->members) {
                bool ok = final_step->kind == OrthStep::Kind::L ? lifts(subject_map, m)
                                                                : lifts(m, subject_map);
                if (!ok) return false;
            }
            return true;
        }
        const auto& q = std::get<QuantifiedLifting>(def->form);
        for (const auto& pm : hom_set(*probe, subject_map.dom)) {
            if (q.injective_only && !map_oracles(pm).is_injective) continue;
            if (!lifts(pm, *rhs)) return false;
        }
        return true;
    }
};

inline PreparedProperty prepare_property(const PropertyDef& p, const Universe& u, int jobs) {
    PreparedProperty prep;
    prep.def = &p;
    if (const auto* d = std::get_if<DirectLifting>(&p.form)) {
        prep.direct_seed = parse_map(d->seed_literal);
    } else if (const auto* m = std::get_if<MembershipInWord>(&p.form)) {
        std::vector<ContinuousMap> seeds;
        for (const auto& lit : m->seed_literals) seeds.push_back(parse_map(lit));
        Universe capped;
        bool cap = p.word_universe_cap >= 0 && u.bound > p.word_universe_cap;
        if (cap) capped = build_universe(p.word_universe_cap);
        const Universe& uw = cap ? capped : u;
        OrthWord w = parse_word(m->word);
        prep.final_step = w.steps.back();
        if (prep.final_step->kind == OrthStep::Kind::Trunc) {
            prep.penultimate = eval_word(make_seed_class(seeds), w, uw, jobs);
        } else {
            OrthWord prefix;
            prefix.steps.assign(w.steps.begin(), w.steps.end() - 1);
            MapClass pen = prefix.steps.empty()
                               ? make_seed_class(seeds)
                               : eval_word(make_seed_class(seeds), prefix, uw, jobs);
            pen.members = by_size(pen.members);
            prep.penultimate = std::move(pen);
        }
    } else {
        const auto& q = std::get<QuantifiedLifting>(p.form);
        prep.probe = parse_space(q.probe_literal);
        prep.rhs = parse_map(q.rhs_literal);
    }
    return prep;
}

}  // namespace detail

// Sweeps every subject in the universe per entry. Equivalence entries must
// agree with their oracle everywhere; necessary entries require oracle-true
// subjects to pass; diagnostic entries are reported only.
inline VerificationReport verify_catalogue(const Universe& u, int jobs = 1) {
    VerificationReport rep;
    for (const auto& p : catalogue()) {
        EntryReport er;
        er.name = p.name;
        er.exactness = to_string(p.exactness);
        er.mode = p.verify_mode == VerifyMode::equivalence  ? "equivalence"
                  : p.verify_mode == VerifyMode::necessary ? "necessary"
                                                           : "diagnostic";
        er.universe_bound = u.bound;
        auto prep = detail::prepare_property(p, u, jobs);
        auto record = [&](bool oracle, bool lift, const std::string& literal) {
            ++er.checked;
            bool agree = p.verify_mode == VerifyMode::necessary ? (!oracle || lift)
                                                                : lift == oracle;
            if (agree)
                ++er.agreements;
            else
                er.disagreements.push_back(literal);
        };
        if (p.subject == Subject::map) {
            for (const auto& f : u.maps) {
                if (p.subject_max_points >= 0 &&
                    (f.dom.n > p.subject_max_points || f.cod.n > p.subject_max_points))
                    continue;
                bool oracle = p.map_oracle(f);
                if (p.verify_mode == VerifyMode::necessary && !oracle) continue;
                record(oracle, prep.test(f), print_map(f));
            }
        } else {
            for (const auto& s : u.spaces) {
                bool oracle = p.space_oracle(space_oracles(s));
                if (p.verify_mode == VerifyMode::necessary && !oracle) continue;
                SpaceAsMap how = SpaceAsMap::to_point;
                if (const auto* d = std::get_if<DirectLifting>(&p.form)) how = d->how;
                if (const auto* m = std::get_if<MembershipInWord>(&p.form)) how = m->how;
                record(oracle, prep.test(detail::space_as_map(s, how)), print_space(s));
            }
        }
        rep.entries.push_back(std::move(er));
    }
    return rep;
}

}  // namespace fintop
