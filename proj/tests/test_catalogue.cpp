#include <catch2/catch_amalgamated.hpp>

#include <fintop/catalogue.hpp>

using namespace fintop;

TEST_CASE("catalogue entries are well formed") {
    auto cat = catalogue();
    CHECK(cat.size() >= 16);
    std::set<std::string> names;
    for (const auto& p : cat) {
        CHECK(names.insert(p.name).second);
        if (const auto* d = std::get_if<DirectLifting>(&p.form)) {
            CHECK_NOTHROW(parse_map(d->seed_literal));
        } else if (const auto* m = std::get_if<MembershipInWord>(&p.form)) {
            for (const auto& lit : m->seed_literals) CHECK_NOTHROW(parse_map(lit));
            CHECK_NOTHROW(parse_word(m->word));
        } else {
            const auto& q = std::get<QuantifiedLifting>(p.form);
            CHECK_NOTHROW(parse_space(q.probe_literal));
            CHECK_NOTHROW(parse_map(q.rhs_literal));
        }
        if (p.subject == Subject::map)
            CHECK(p.map_oracle != nullptr);
        else
            CHECK(p.space_oracle != nullptr);
    }
    for (const auto& lit : proper_seed_class_literals()) CHECK_NOTHROW(parse_map(lit));
}

namespace {

const PropertyDef& entry(const std::string& name) {
    static auto cat = catalogue();
    for (const auto& p : cat)
        if (p.name == name) return p;
    throw error("no catalogue entry named " + name);
}

}  // namespace

TEST_CASE("check_property on hand-picked subjects") {
    auto u = build_universe(2);
    auto sier = parse_space("{o->c}");
    auto anti = parse_space("{x<->y}");
    auto disc = parse_space("{a,b}");

    CHECK(check_property(sier, entry("t0"), u).holds);
    CHECK_FALSE(check_property(anti, entry("t0"), u).holds);
    CHECK_FALSE(check_property(sier, entry("t1"), u).holds);

    CHECK(check_property(disc, entry("hausdorff"), u).holds);
    CHECK_FALSE(check_property(sier, entry("hausdorff"), u).holds);
    CHECK_FALSE(check_property(anti, entry("hausdorff"), u).holds);

    CHECK(check_property(sier, entry("connected_or_empty"), u).holds);
    CHECK_FALSE(check_property(disc, entry("connected_or_empty"), u).holds);
    CHECK(check_property(parse_space("{}"), entry("connected_or_empty"), u).holds);
    CHECK_FALSE(check_property(parse_space("{}"), entry("nonempty"), u).holds);

    CHECK(check_property(disc, entry("discrete"), u).holds);
    CHECK_FALSE(check_property(sier, entry("discrete"), u).holds);
    CHECK(check_property(anti, entry("antidiscrete"), u).holds);
    CHECK_FALSE(check_property(disc, entry("antidiscrete"), u).holds);

    auto surj = parse_map("{x<->y} => {x=y}");
    CHECK(check_property(surj, entry("surjective"), u).holds);
    CHECK_FALSE(check_property(surj, entry("injective"), u).holds);
    auto closed_in = parse_map("{c} => {o->c}");
    CHECK(check_property(closed_in, entry("injective"), u).holds);
    CHECK_FALSE(check_property(closed_in, entry("dense_image"), u).holds);
    CHECK(check_property(closed_in, entry("closed_map"), u).holds);
    auto open_in = parse_map("{o} => {o->c}");
    CHECK(check_property(open_in, entry("dense_image"), u).holds);
    CHECK_FALSE(check_property(open_in, entry("closed_map"), u).holds);

    CHECK_THROWS_AS(check_property(sier, entry("surjective"), u), error);
}

TEST_CASE("exactness flags surface through check_property") {
    auto u = build_universe(2);
    CHECK(check_property(parse_space("{*}"), entry("t0"), u).exactness ==
          CatalogueExactness::exact);
    CHECK(check_property(parse_space("{*}"), entry("compact_hausdorff"), u).exactness ==
          CatalogueExactness::finite_trivial);
    CHECK(check_property(parse_space("{a,b}"), entry("totally_disconnected_nonempty"), u)
              .exactness == CatalogueExactness::relative_approx);
}

TEST_CASE("adjoin_point builds the principal-ultrafilter inclusion") {
    auto s = parse_space("{o->c}");
    auto f = adjoin_point(s, 0);  // adjoin along the open point
    CHECK(f.dom.n == 2);
    CHECK(f.cod.n == 3);
    auto o = map_oracles(f);
    CHECK(o.is_injective);
    CHECK(o.is_subspace_embedding);
    // the new point is closed and not open
    PointSet w = 1u << 2;
    CHECK(is_closed(f.cod, w));
    CHECK_FALSE(is_open(f.cod, w));
    // w lies in the closure of exactly the points whose closure contains o
    CHECK(f.cod.related(0, 2));
    CHECK_FALSE(f.cod.related(1, 2));

    // fresh label never collides
    auto t = make_space({"w", "w'"}, {});
    auto g = adjoin_point(t, 1);
    std::set<std::string> ls(g.cod.labels.begin(), g.cod.labels.end());
    CHECK(ls.size() == 3);

    CHECK_THROWS_AS(adjoin_point(make_space({}, {}), 0), error);
    CHECK_THROWS_AS(adjoin_point(s, 5), error);
}

TEST_CASE("adjoining a point is a left-lifting construction") {
    // the inclusion lifts against the collapse of any small space to a point
    for (int n = 1; n <= 3; ++n)
        for (const auto& k : enumerate_spaces(n)) {
            for (int p = 0; p < k.n; ++p) {
                auto f = adjoin_point(k, p);
                auto to_pt = make_map(k, make_space({"*"}, {}), std::vector<int>(k.n, 0));
                CHECK(has_lifting(f, to_pt).holds);
            }
        }
}

TEST_CASE("zigzag_map shapes") {
    auto z1 = zigzag_map(1);
    CHECK(z1.dom.n == 3);
    CHECK(z1.cod.n == 3);
    CHECK(map_oracles(z1).is_isomorphism);

    auto z3 = zigzag_map(3);
    CHECK(z3.dom.n == 5);
    CHECK(z3.cod.n == 3);
    auto t4_seed = parse_map("{a<-U->x<-V->b} => {a<-U=x=V->b}");
    CHECK(maps_isomorphic(z3, t4_seed).has_value());

    auto z5 = zigzag_map(5);
    CHECK(z5.dom.n == 7);
    CHECK(map_oracles(z5).is_surjective);

    CHECK_THROWS_AS(zigzag_map(0), error);
    CHECK_THROWS_AS(zigzag_map(2), error);
    CHECK_THROWS_AS(zigzag_map(-1), error);
}

TEST_CASE("normal spaces lift against longer zigzags too") {
    auto u = build_universe(2);
    auto z3 = parse_map("{a<-U->x<-V->b} => {a<-U=x=V->b}");
    for (int n = 0; n <= 3; ++n)
        for (const auto& s : enumerate_spaces(n)) {
            bool t4 = space_oracles(s).is_normal_t4;
            bool lift = check_property(s, entry("normal_t4"), u).holds;
            CHECK(t4 == lift);
            if (t4) {
                auto from_empty = make_map(make_space({}, {}), s, {});
                CHECK(lifts(from_empty, zigzag_map(5)));
            }
        }
}

TEST_CASE("verify_catalogue accepts a small universe") {
    auto u = build_universe(2);
    auto rep = verify_catalogue(u);
    CHECK(rep.accepted());
    CHECK(rep.entries.size() == catalogue().size());
    for (const auto& e : rep.entries) {
        INFO(e.name);
        CHECK(e.checked > 0);
        if (e.mode != "diagnostic") {
            CHECK(e.agreements == e.checked);
            CHECK(e.disagreements.empty());
        }
    }
}

TEST_CASE("diagnostic variants disagree with the oracles without gating") {
    auto u = build_universe(3);
    auto rep = verify_catalogue(u);
    CHECK(rep.accepted());
    for (const auto& e : rep.entries)
        if (e.name == "dense_image_open_seed_variant") {
            CHECK_FALSE(e.disagreements.empty());
            // the reported literals reproduce the disagreement
            auto f = parse_map(e.disagreements.front());
            auto seed = parse_map("{o} => {o->c}");
            CHECK(lifts(f, seed) != map_oracles(f).is_dense_image);
        }
}
