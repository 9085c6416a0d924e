#include <gtest/gtest.h>

#include <set>

#include <bikernel.hpp>

#include "oracle.hpp"

using namespace bikernel;

namespace {

BicoloredDigraph alternating_c4() {
    return BicoloredDigraph::from_arcs({{"x1", "x2", Color::one},
                                        {"x2", "x3", Color::two},
                                        {"x3", "x4", Color::one},
                                        {"x4", "x1", Color::two}});
}

}  // namespace

TEST(Digraph, NamesAreSortedAndArcsIndexed) {
    auto g = BicoloredDigraph::from_arcs({{"b", "a", Color::one}, {"a", "c", Color::two}});
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_TRUE(g.has_arc(g.index_of("b"), g.index_of("a"), Color::one));
    EXPECT_FALSE(g.has_arc(g.index_of("b"), g.index_of("a"), Color::two));
    EXPECT_EQ(g.count_arcs(Color::two), 1u);
}

TEST(Digraph, RejectsSelfLoopsAndDuplicates) {
    EXPECT_THROW(BicoloredDigraph::from_arcs({{"a", "a", Color::one}}), InputError);
    EXPECT_THROW(BicoloredDigraph::from_arcs({{"a", "b", Color::one}, {"a", "b", Color::one}}), InputError);
    EXPECT_NO_THROW(BicoloredDigraph::from_arcs({{"a", "b", Color::one}, {"a", "b", Color::two}}));
    EXPECT_THROW(Digraph::from_arcs({{"a", "b"}, {"a", "b"}}), InputError);
}

TEST(Digraph, UnknownVertex) {
    auto g = alternating_c4();
    EXPECT_THROW(g.index_of("zz"), InputError);
    EXPECT_FALSE(g.find("zz").has_value());
}

TEST(Degree, CriticalVertices) {
    // a -1-> b -2-> c
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::one}, {"b", "c", Color::two}});
    EXPECT_EQ(criticality(g, "a"), Criticality::two_source);
    EXPECT_EQ(criticality(g, "b"), Criticality::supercritical);
    EXPECT_EQ(criticality(g, "c"), Criticality::one_sink);
    EXPECT_EQ(degree(g, "b", Direction::in), 1u);
    EXPECT_EQ(degree(g, "b", Direction::out, Color::one), 0u);

    auto h = BicoloredDigraph::from_arcs({{"a", "b", Color::two}, {"c", "b", Color::one}});
    EXPECT_EQ(criticality(h, "a"), Criticality::supercritical);
    EXPECT_EQ(criticality(h, "b"), Criticality::one_sink);
    EXPECT_EQ(criticality(h, "c"), Criticality::two_source);
}

TEST(Closure, MatchesMatrixSquaring) {
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
        auto n = rng.between(1, 9);
        auto g = random_bicolored(n, rng.between(0, 3 * n), rng);
        MonoClosure c(g);
        for (Color col : kColors) {
            auto m = oracle::reach(g, col);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) ASSERT_EQ(c.reach(col, u, v), m[u][v]);
        }
    }
}

TEST(Condensation, ClassesAreMutualReachability) {
    Rng rng(12);
    for (int round = 0; round < 200; ++round) {
        auto n = rng.between(1, 9);
        auto g = random_bicolored(n, rng.between(0, 3 * n), rng);
        for (Color col : kColors) {
            auto r = oracle::reach(g, col);
            auto cond = condensation(g, col);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    bool same = u == v || (r[u][v] && r[v][u]);
                    ASSERT_EQ(cond.class_of[u] == cond.class_of[v], same);
                }
            // A maximal class reaches nothing outside itself; a minimal one is reached by nothing outside.
            for (std::size_t k = 0; k < cond.classes.size(); ++k) {
                bool reaches_out = false, reached = false;
                for (Vertex u : cond.classes[k])
                    for (Vertex v = 0; v < n; ++v) {
                        if (cond.class_of[v] == k) continue;
                        reaches_out = reaches_out || r[u][v];
                        reached = reached || r[v][u];
                    }
                bool is_max = std::find(cond.maximal.begin(), cond.maximal.end(), k) != cond.maximal.end();
                bool is_min = std::find(cond.minimal.begin(), cond.minimal.end(), k) != cond.minimal.end();
                ASSERT_EQ(is_max, !reaches_out);
                ASSERT_EQ(is_min, !reached);
            }
        }
    }
}

TEST(Verify, AlternatingC4) {
    auto g = alternating_c4();
    auto v = find_violation(g, VertexSet::from_names(g, {"x1", "x3"}));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(describe(g, *v), "absorbency x2");
    EXPECT_EQ(describe(g, *find_violation(g, {})), "empty_set");
    EXPECT_EQ(describe(g, *find_violation(g, VertexSet::from_names(g, {"x1", "x2"}))), "independence x1 x2 1");
    // Only {x2, x4} works: x1 -1-> x2 and x4 -2-> x1, x2 -2-> x3 -1-> x4.
    EXPECT_TRUE(is_bikernel(g, VertexSet::from_names(g, {"x2", "x4"})));
}

TEST(Verify, DominanceWitness) {
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::one}});
    // {b}: a reaches b by color 1 but b does not 2-dominate a.
    EXPECT_EQ(describe(g, *find_violation(g, VertexSet::from_names(g, {"b"}))), "dominance a");
}

TEST(Verify, AgreesWithOracle) {
    Rng rng(13);
    for (int round = 0; round < 300; ++round) {
        auto n = rng.between(1, 7);
        auto g = random_bicolored(n, rng.between(0, 3 * n), rng);
        std::vector<Vertex> pick;
        for (Vertex v = 0; v < n; ++v)
            if (rng.coin()) pick.push_back(v);
        VertexSet s(pick);
        ASSERT_EQ(is_bikernel(g, s), oracle::is_bikernel(g, s));
    }
}

TEST(Verify, CriticalVerticesLieInEveryBikernel) {
    Rng rng(14);
    std::size_t checked = 0;
    for (int round = 0; round < 400; ++round) {
        auto n = rng.between(2, 7);
        auto g = random_bicolored(n, rng.between(n, 3 * n), rng);
        for (const auto& b : oracle::all_bikernels(g)) {
            ++checked;
            for (Vertex v = 0; v < n; ++v)
                if (is_critical(criticality(g, v))) ASSERT_NE(std::find(b.begin(), b.end(), v), b.end());
        }
    }
    EXPECT_GT(checked, 20u);
}

TEST(Matching, PerfectAndHallWitness) {
    BipartiteMatching m(3, 3);
    m.add_edge(0, 0);
    m.add_edge(1, 0);
    m.add_edge(2, 1);
    m.add_edge(2, 2);
    EXPECT_EQ(m.solve(), 2u);
    EXPECT_FALSE(m.saturates_left());
    auto s = m.hall_violator();
    std::set<std::size_t> nb;
    for (auto l : s)
        for (auto r : m.neighbors(l)) nb.insert(r);
    EXPECT_LT(nb.size(), s.size());

    BipartiteMatching p(2, 2);
    p.add_edge(0, 0);
    p.add_edge(0, 1);
    p.add_edge(1, 0);
    EXPECT_EQ(p.solve(), 2u);
    EXPECT_EQ(p.mate_of_left(1), 0u);
    EXPECT_TRUE(p.hall_violator().empty());
}

TEST(Matching, HallWitnessOnRandomGraphs) {
    Rng rng(15);
    for (int round = 0; round < 500; ++round) {
        auto l = rng.between(1, 6), r = rng.between(1, 6);
        BipartiteMatching m(l, r);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (rng.below(3) == 0) m.add_edge(i, j);
        m.solve();
        if (m.saturates_left()) continue;
        auto s = m.hall_violator();
        std::set<std::size_t> nb;
        for (auto x : s)
            for (auto y : m.neighbors(x)) nb.insert(y);
        ASSERT_LT(nb.size(), s.size());
    }
}
