#include <doctest.h>

#include <random>
#include <sstream>

#include "fcair/cxt.hpp"
#include "fcair/error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace fcair;
using Names = std::vector<std::string>;

TEST_CASE("bitset basics") {
    Bitset a(70), b(70);
    a.set(0);
    a.set(65);
    b.set(65);
    CHECK(a.count() == 2);
    CHECK(b.is_subset_of(a));
    CHECK(b.is_proper_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK((a & b) == b);
    CHECK((a - b).indices() == std::vector<std::size_t>{0});
    CHECK(Bitset::full(70).all());
    CHECK(Bitset::full(70).count() == 70);
    CHECK(a.equal_below(b, 0));
    CHECK_FALSE(a.equal_below(b, 1));
    CHECK(a.equal_below(a | b, 70));

    Bitset c(3, true);
    c.resize(130, true);
    CHECK(c.all());
    c.resize(2);
    CHECK(c.count() == 2);
}

TEST_CASE("derive_intent on the table1 context") {
    auto ctx = fixtures::table1();
    CHECK(derive_intent(ctx, Names{"s1", "s4"}) == Names{"p1", "p2", "p4"});
    CHECK(derive_intent(ctx, Names{}) == Names{"p1", "p2", "p3", "p4", "p5"});
    CHECK(derive_intent(ctx, Names{"s1", "s2", "s3", "s4"}).empty());
    CHECK_THROWS_AS(derive_intent(ctx, Names{"s9"}), Error);
}

TEST_CASE("derive_extent") {
    auto ctx = fixtures::table1();
    CHECK(derive_extent(ctx, Names{"p4"}) == Names{"s1", "s4"});
    CHECK(derive_extent(ctx, Names{}) == Names{"s1", "s2", "s3", "s4"});
    CHECK(derive_extent(fixtures::table2(), Names{"detection", "segmentation"}) == Names{"d4"});
    try {
        derive_extent(ctx, Names{"p9"});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
}

TEST_CASE("closure_attributes") {
    auto ctx = fixtures::table1();
    CHECK(closure_attributes(ctx, Names{"p1"}) == Names{"p1", "p2"});
    CHECK(closure_attributes(ctx, Names{}).empty());
    CHECK(closure_attributes(ctx, Names{"p1", "p2", "p3", "p4", "p5"}) == Names{"p1", "p2", "p3", "p4", "p5"});
}

TEST_CASE("context rejects duplicate identifiers") {
    CHECK_THROWS_AS(FormalContext({"a", "a"}, {"x"}), Error);
    CHECK_THROWS_AS(FormalContext({"a"}, {"x", "x"}), Error);
    FormalContext ctx({"a"}, {"x"});
    CHECK_THROWS_AS(ctx.add_object("a", ctx.empty_intent()), Error);
}

TEST_CASE("add_object keeps rows and columns consistent") {
    FormalContext ctx({"x", "y"});
    AttributeSet row(2);
    row.set(1);
    ctx.add_object("g", row);
    ctx.add_object("h", AttributeSet::full(2));
    CHECK(ctx.column(0).indices() == std::vector<std::size_t>{1});
    CHECK(ctx.column(1).indices() == std::vector<std::size_t>{0, 1});
}

// Property: the two derivation operators form a Galois connection.
TEST_CASE("Galois connection properties on random contexts") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng() % 12, m = 1 + rng() % 12;
        auto pc = oracle::random_context(rng, n, m, 0.2 + 0.3 * (trial % 3));
        auto ctx = oracle::to_context(pc);
        for (int k = 0; k < 10; ++k) {
            ObjectSet a(n), a2(n);
            AttributeSet b(m);
            for (std::size_t g = 0; g < n; ++g) {
                bool in = rng() % 2;
                a.set(g, in);
                a2.set(g, in || rng() % 2);
            }
            for (std::size_t j = 0; j < m; ++j) b.set(j, rng() % 2);

            CHECK(a.is_subset_of(derive_extent(ctx, b)) == b.is_subset_of(derive_intent(ctx, a)));
            CHECK(a.is_subset_of(closure_objects(ctx, a)));
            CHECK(b.is_subset_of(closure_attributes(ctx, b)));
            CHECK(derive_intent(ctx, a2).is_subset_of(derive_intent(ctx, a)));
            CHECK(derive_intent(ctx, closure_objects(ctx, a)) == derive_intent(ctx, a));
            CHECK(closure_attributes(ctx, closure_attributes(ctx, b)) == closure_attributes(ctx, b));
        }
    }
}

TEST_CASE("cxt round trip") {
    auto ctx = load_cxt(fixtures::path("table1.cxt"));
    CHECK(ctx == fixtures::table1());
    std::stringstream ss;
    write_cxt(ss, ctx);
    CHECK(read_cxt(ss) == ctx);

    std::istringstream bad("B\n\n2\n1\n\na\nb\nx\nX\n");
    CHECK_THROWS_AS(read_cxt(bad), Error);
    std::istringstream named("B\nmy context\n1\n1\n\ng\nm\nX\n");
    CHECK(read_cxt(named).incident(0, 0));
}
