#include <gtest/gtest.h>

#include <bikernel.hpp>

#include "oracle.hpp"

using namespace bikernel;

TEST(Product, Structure) {
    auto g = make_path({Color::one});
    auto h = make_cycle({Color::one, Color::two, Color::two});
    auto p = cartesian_product(g, h);
    EXPECT_EQ(p.vertex_count(), 6u);
    EXPECT_EQ(p.arc_count(), 2 * 3 + 3 * 1);
    EXPECT_TRUE(p.has_arc(p.index_of("v0,v0"), p.index_of("v1,v0"), Color::one));
    EXPECT_TRUE(p.has_arc(p.index_of("v1,v1"), p.index_of("v1,v2"), Color::two));
    EXPECT_THROW(cartesian_product(g, BicoloredDigraph{}), InputError);
}

TEST(Product, NameCollision) {
    auto g = BicoloredDigraph({"a", "a,b"}, {});
    auto h = BicoloredDigraph({"b,c", "c"}, {});
    EXPECT_THROW(cartesian_product(g, h), InputError);
}

TEST(Product, ComposeRandomPairs) {
    Rng rng(31);
    int composed = 0;
    for (int round = 0; round < 400 && composed < 60; ++round) {
        auto g = random_bicolored(rng.between(1, 4), rng.between(0, 6), rng);
        auto h = random_bicolored(rng.between(1, 4), rng.between(0, 6), rng);
        auto bg = solve_classes(g), bh = solve_classes(h);
        if (!bg || !bh) continue;
        auto b = compose_bikernels(g, h, bg.bikernel(), bh.bikernel());
        ASSERT_TRUE(oracle::is_bikernel(cartesian_product(g, h), b));
        ++composed;
    }
    EXPECT_GT(composed, 10);
}

TEST(Product, ComposeRejectsNonBikernels) {
    auto g = make_path({Color::one});
    auto h = BicoloredDigraph({"x"}, {});
    EXPECT_THROW(compose_bikernels(g, h, VertexSet{0}, VertexSet{0}), InputError);
}

TEST(Product, PathProducts) {
    auto good = make_path({Color::two, Color::one});
    auto bad = make_path({Color::one});
    auto ok = path_product_bikernel({good, good});
    EXPECT_TRUE(ok.verdict);
    EXPECT_TRUE(oracle::is_bikernel(ok.product, ok.verdict.bikernel()));
    auto no = path_product_bikernel({good, bad});
    EXPECT_EQ(describe(no.product, no.verdict.reason()), "factor_without_bikernel 2");
    EXPECT_FALSE(solve_brute(no.product));
    EXPECT_THROW(path_product_bikernel({good, monochromatic_cycle(3, Color::one)}), InputError);
}

TEST(Product, MonochromaticCycles) {
    auto c4a = monochromatic_cycle(4, Color::one), c4b = monochromatic_cycle(4, Color::two);
    auto r = cycle_product_bikernel(c4a, c4b);
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict.bikernel().size(), 4u);
    EXPECT_TRUE(oracle::is_bikernel(r.product, r.verdict.bikernel()));

    auto c3 = monochromatic_cycle(3, Color::one);
    EXPECT_FALSE(cycle_product_bikernel(c3, c4b).verdict);
    EXPECT_FALSE(cycle_product_bikernel(c3, c3).verdict);
    EXPECT_FALSE(solve_brute(cartesian_product(c3, c4b)));
}
