#include <gtest/gtest.h>

#include <set>

#include <bikernel.hpp>

#include "oracle.hpp"

using namespace bikernel;

TEST(Solve, StaircaseDiagonal) {
    auto g = staircase();
    EXPECT_EQ(g.vertex_count(), 15u);
    const std::vector<std::string> expect{"12", "23", "34", "45", "56"};
    EXPECT_EQ(solve_brute(g).bikernel().names(g), expect);
    EXPECT_EQ(solve_classes(g).bikernel().names(g), expect);
    EXPECT_EQ(solve_acyclic(g).bikernel().names(g), expect);
}

TEST(Solve, EmptyGraph) {
    BicoloredDigraph g;
    EXPECT_EQ(describe(g, solve_brute(g).reason()), "empty_graph");
    EXPECT_EQ(describe(g, solve_classes(g).reason()), "empty_graph");
}

TEST(Solve, SingleVertex) {
    auto g = BicoloredDigraph({"a"}, {});
    EXPECT_EQ(solve_classes(g).bikernel().names(g), std::vector<std::string>{"a"});
}

TEST(Solve, BruteCap) {
    auto g = staircase();
    EXPECT_THROW(solve_brute(g, BruteOptions{10}), RefusalError);
    // Caps above the hard limit are clamped to it.
    EXPECT_TRUE(solve_brute(g, BruteOptions{100}));
}

TEST(Solve, BruteMatchesOracleEnumeration) {
    Rng rng(21);
    for (int round = 0; round < 300; ++round) {
        auto n = rng.between(1, 7);
        auto g = random_bicolored(n, rng.between(0, 3 * n), rng);
        auto mine = all_bikernels_brute(g);
        auto ref = oracle::all_bikernels(g);
        std::vector<std::vector<std::size_t>> mine_lists;
        for (const auto& b : mine) mine_lists.push_back(oracle::members(b));
        std::sort(mine_lists.begin(), mine_lists.end());
        std::sort(ref.begin(), ref.end());
        ASSERT_EQ(mine_lists, ref);
    }
}

TEST(Solve, ClassesEqualsBruteOutput) {
    Rng rng(22);
    for (int round = 0; round < 500; ++round) {
        auto n = rng.between(1, 8);
        auto g = random_bicolored(n, rng.between(0, 3 * n), rng);
        auto a = solve_brute(g), b = solve_classes(g);
        ASSERT_EQ(a.has_bikernel(), b.has_bikernel());
        if (a) ASSERT_EQ(a.bikernel(), b.bikernel());
    }
}

TEST(Solve, ClassCountMismatchWitness) {
    // Two disjoint color-1 sinks, one color-2 source class.
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::two}, {"a", "c", Color::two}});
    auto v = solve_classes(g);
    ASSERT_FALSE(v);
    EXPECT_EQ(describe(g, v.reason()), "class_count_mismatch 3 1");
}

TEST(Solve, HallWitnessIsGenuine) {
    Rng rng(23);
    std::size_t seen = 0;
    for (int round = 0; round < 3000 && seen < 30; ++round) {
        auto n = rng.between(3, 8);
        auto g = random_bicolored(n, rng.between(n, 3 * n), rng);
        auto v = solve_classes(g);
        if (v) continue;
        auto* r = std::get_if<reason::NoPerfectMatching>(&v.reason());
        if (!r) continue;
        ++seen;
        auto s = class_structure(g);
        // Every witness class is in M1; the M2 classes meeting them are fewer.
        std::set<std::size_t> hit;
        for (const auto& cls : r->hall_witness)
            for (Vertex x : cls) {
                auto k = s.two.class_of[x];
                if (std::find(s.m2.begin(), s.m2.end(), k) != s.m2.end()) hit.insert(k);
            }
        ASSERT_LT(hit.size(), r->hall_witness.size());
    }
    EXPECT_GT(seen, 0u);
}

TEST(Solve, AcyclicRefusesCycles) {
    auto g = monochromatic_cycle(3, Color::one);
    EXPECT_THROW(solve_acyclic(g), RefusalError);
    EXPECT_FALSE(is_mono_acyclic(g));
}

TEST(Solve, AcyclicCertificate) {
    // a -1-> b: b is a 1-sink that some 2-source must 2-reach; a is a 2-source but not a 1-sink.
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::one}});
    auto v = solve_acyclic(g);
    ASSERT_FALSE(v);
    auto r = std::get<reason::AdjacentCriticalPair>(v.reason());
    EXPECT_TRUE(is_two_source(g, r.from));
    EXPECT_TRUE(is_one_sink(g, r.to));
    EXPECT_NE(criticality(g, r.from), Criticality::supercritical);
}

TEST(Solve, AcyclicCertificatesAreReal) {
    Rng rng(24);
    for (int round = 0; round < 500; ++round) {
        auto n = rng.between(1, 9);
        auto g = random_mono_acyclic(n, rng.between(0, 3 * n), rng);
        auto v = solve_acyclic(g);
        auto b = solve_brute(g);
        ASSERT_EQ(v.has_bikernel(), b.has_bikernel());
        if (v) {
            ASSERT_EQ(v.bikernel(), b.bikernel());
            continue;
        }
        if (g.empty()) continue;
        auto r = std::get<reason::AdjacentCriticalPair>(v.reason());
        ASSERT_TRUE(is_critical(criticality(g, r.from)));
        ASSERT_TRUE(is_critical(criticality(g, r.to)));
        ASSERT_TRUE(criticality(g, r.from) != Criticality::supercritical ||
                    criticality(g, r.to) != Criticality::supercritical);
        ASSERT_TRUE(MonoClosure(g).reach(r.color, r.from, r.to));
    }
}

TEST(Solve, TraceToExtremum) {
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::one}, {"b", "c", Color::one}, {"x", "b", Color::two}});
    auto p = trace_to_extremum(g, "a", Color::one);
    EXPECT_EQ(VertexSet(p).names(g), (std::vector<std::string>{"a", "b", "c"}));
    auto q = trace_to_extremum(g, "b", Color::two);
    EXPECT_EQ(g.name(q.front()), "x");
    EXPECT_EQ(g.name(q.back()), "b");
    EXPECT_THROW(trace_to_extremum(g, "c", Color::one), InputError);
}
