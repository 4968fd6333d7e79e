#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fcair/error.hpp"
#include "fcair/index.hpp"
#include "fcair/lattice.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fcair;
using Names = std::vector<std::string>;

namespace {

std::size_t concept_with_intent(const FormalContext& ctx, const ConceptLattice& lat, const Names& intent) {
    std::size_t c = lat.find_intent(ctx.attribute_set(intent));
    REQUIRE(c < lat.size());
    return c;
}

ConceptLattice build_in_order(const FormalContext& ctx, const std::vector<std::size_t>& order, FormalContext& grown) {
    grown = FormalContext(ctx.attributes());
    ConceptLattice lat = empty_lattice(grown);
    for (std::size_t g : order) add_object(lat, grown, ctx.object(g), ctx.row(g));
    return lat;
}

}  // namespace

TEST_CASE("enumerate_concepts counts") {
    CHECK(enumerate_concepts(fixtures::table1()).size() == 9);
    CHECK(enumerate_concepts(fixtures::table2()).size() == 11);

    auto empty = enumerate_concepts(FormalContext{});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].extent.size() == 0);
    CHECK(empty[0].intent.size() == 0);
}

TEST_CASE("enumerate_concepts matches brute force") {
    auto ctx = fixtures::table1();
    CHECK(oracle::library_concepts(ctx, enumerate_concepts(ctx)) == oracle::concepts(oracle::from_context(ctx)));
}

TEST_CASE("build_lattice on table1") {
    auto ctx = fixtures::table1();
    auto lat = build_lattice(ctx);
    CHECK(lat.size() == 9);
    CHECK(lat.edge_count() == 12);
    CHECK(ctx.object_names(lat.concept_at(lat.top()).extent) == Names{"s1", "s2", "s3", "s4"});
    CHECK(ctx.attribute_names(lat.concept_at(lat.bottom()).intent) == Names{"p1", "p2", "p3", "p4", "p5"});
    CHECK(lat.upper(lat.top()).empty());
    CHECK(lat.lower(lat.bottom()).empty());

    std::size_t s4 = concept_with_intent(ctx, lat, {"p1", "p2", "p3", "p4"});
    CHECK(lat.neighbors(s4).lower == std::vector<std::size_t>{lat.bottom()});
    CHECK_THROWS_AS(lat.neighbors(lat.size()), Error);
}

TEST_CASE("build_lattice on table2") {
    auto ctx = fixtures::table2();
    auto lat = build_lattice(ctx);
    CHECK(lat.size() == 11);
    CHECK(lat.edge_count() == 16);
    std::size_t sp = concept_with_intent(ctx, lat, {"probability", "segmentation"});
    CHECK(ctx.object_names(lat.concept_at(sp).extent) == Names{"d1", "d4"});
    std::size_t s = concept_with_intent(ctx, lat, {"segmentation"});
    auto up = lat.neighbors(sp).upper;
    CHECK(std::find(up.begin(), up.end(), s) != up.end());
    CHECK(is_subconcept(lat.concept_at(sp), lat.concept_at(s)));
    CHECK_FALSE(is_subconcept(lat.concept_at(s), lat.concept_at(sp)));
    CHECK(is_subconcept(lat.concept_at(s), lat.concept_at(s)));
}

TEST_CASE("is_subconcept on incomparable table1 concepts") {
    auto ctx = fixtures::table1();
    auto lat = build_lattice(ctx);
    const auto& a = lat.concept_at(concept_with_intent(ctx, lat, {"p3", "p5"}));
    const auto& b = lat.concept_at(concept_with_intent(ctx, lat, {"p1", "p2", "p4"}));
    CHECK_FALSE(is_subconcept(a, b));
    CHECK_FALSE(is_subconcept(b, a));
}

TEST_CASE("degenerate contexts") {
    auto empty = build_lattice(FormalContext{});
    CHECK(empty.size() == 1);
    CHECK(empty.top() == empty.bottom());

    FormalContext one({"g"}, {"m"});
    one.set_incident(0, 0);
    auto lat = build_lattice(one);
    CHECK(lat.size() == 1);
    CHECK(lat.top() == lat.bottom());

    FormalContext two_attrs({"g"}, {"m", "n"});
    two_attrs.set_incident(0, 0);
    auto lat2 = build_lattice(two_attrs);
    CHECK(lat2.size() == 2);
    CHECK(lat2.edge_count() == 1);
}

TEST_CASE("add_object on table2 inserts the query concept") {
    auto ctx = fixtures::table2();
    auto lat = build_lattice(ctx);
    auto before = lat;
    std::size_t qc = add_object(lat, ctx, "Query", Names{"detection", "segmentation"});
    CHECK(lat.size() == 12);
    CHECK(ctx.object_names(lat.concept_at(qc).extent) == Names{"Query", "d4"});
    CHECK(ctx.attribute_names(lat.concept_at(qc).intent) == Names{"detection", "segmentation"});
    // Existing concepts keep their index; only extents may grow.
    for (std::size_t c = 0; c < before.size(); ++c) {
        CHECK(lat.concept_at(c).intent == before.concept_at(c).intent);
        CHECK(before.concept_at(c).extent.size() + 1 == lat.concept_at(c).extent.size());
    }
    CHECK(oracle::library_covers(ctx, lat) == oracle::covers(oracle::concepts(oracle::from_context(ctx))));
}

TEST_CASE("add_object errors") {
    auto ctx = fixtures::table2();
    auto lat = build_lattice(ctx);
    CHECK_THROWS_AS(add_object(lat, ctx, "d1", Names{"image"}), Error);
    CHECK_THROWS_AS(add_object(lat, ctx, "new", Names{"unknown"}), Error);
}

TEST_CASE("add_object with an empty intent") {
    auto ctx = fixtures::table2();
    auto lat = build_lattice(ctx);
    std::size_t n = lat.size();
    std::size_t c = add_object(lat, ctx, "blank", Names{});
    CHECK(c == lat.top());
    CHECK(lat.size() <= n + 1);
    CHECK(lat.concept_at(lat.top()).extent.all());
}

TEST_CASE("incremental build matches the brute-force oracle on random contexts") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        auto pc = oracle::random_context(rng, 1 + rng() % 10, rng() % 11, 0.2 + 0.3 * (trial % 3));
        auto ctx = oracle::to_context(pc);
        auto lat = build_lattice(ctx);
        auto expected = oracle::concepts(pc);
        CHECK(oracle::library_concepts(ctx, lat.concepts()) == expected);
        CHECK(oracle::library_covers(ctx, lat) == oracle::covers(expected));
        CHECK(oracle::library_concepts(ctx, enumerate_concepts(ctx)) == expected);
        for (const auto& r : check_lattice(ctx, lat)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
    }
}

TEST_CASE("insertion order does not change the lattice") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto ctx = oracle::to_context(oracle::random_context(rng, 8, 8, 0.5));
        std::vector<std::size_t> order(ctx.object_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        FormalContext g1, g2;
        auto l1 = build_in_order(ctx, order, g1);
        std::shuffle(order.begin(), order.end(), rng);
        auto l2 = build_in_order(ctx, order, g2);
        CHECK(canonical_lattice_json(g1, l1) == canonical_lattice_json(g2, l2));
    }
}

TEST_CASE("lattice invariants") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto ctx = oracle::to_context(oracle::random_context(rng, 10, 9, 0.5));
        auto lat = build_lattice(ctx);
        const auto& cs = lat.concepts();
        // Sorting by extent size ascending agrees with intent size descending.
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = 0; b < cs.size(); ++b)
                if (cs[a].extent.count() < cs[b].extent.count() && is_subconcept(cs[a], cs[b]))
                    CHECK(cs[a].intent.count() > cs[b].intent.count());
        // Hasse minimality.
        for (auto [c, d] : lat.edges())
            for (std::size_t e = 0; e < cs.size(); ++e)
                CHECK_FALSE((cs[c].extent.is_proper_subset_of(cs[e].extent) &&
                             cs[e].extent.is_proper_subset_of(cs[d].extent)));
    }
}

TEST_CASE("compute_covers agrees with stored edges") {
    auto ctx = fixtures::table2();
    auto lat = build_lattice(ctx);
    CHECK(compute_covers(lat.concepts()) == lat.edges());
}
