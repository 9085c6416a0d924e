#include <gtest/gtest.h>

#include <bikernel.hpp>

#include "oracle.hpp"

using namespace bikernel;

namespace {

std::vector<Color> colors_of(std::string_view s) {
    std::vector<Color> c;
    for (char ch : s) c.push_back(ch == '1' ? Color::one : Color::two);
    return c;
}

}  // namespace

TEST(Shape, Detection) {
    EXPECT_TRUE(std::holds_alternative<shape::DirectedPath>(detect_shape(make_path(colors_of("12")))));
    EXPECT_TRUE(std::holds_alternative<shape::DirectedPath>(detect_shape(BicoloredDigraph({"a"}, {}))));
    EXPECT_TRUE(std::holds_alternative<shape::DirectedCycle>(detect_shape(make_cycle(colors_of("121")))));
    auto chorded = detect_shape(make_chorded_cycle(colors_of("1212"), 0, 2, Color::one));
    ASSERT_TRUE(std::holds_alternative<shape::ChordedCycle>(chorded));
    EXPECT_EQ(std::get<shape::ChordedCycle>(chorded).chord, (Arc{0, 2, Color::one}));
    EXPECT_TRUE(std::holds_alternative<shape::Other>(detect_shape(staircase())));
    // Parallel arcs of both colors never form one of the families.
    EXPECT_TRUE(std::holds_alternative<shape::Other>(
        detect_shape(BicoloredDigraph::from_arcs({{"a", "b", Color::one}, {"a", "b", Color::two}}))));
}

TEST(Shape, RunsWrapAroundCycles) {
    auto g = make_cycle(colors_of("1121"));
    auto p = run_profile(g, detect_shape(g));
    // Arcs 3, 0 and 1 all have color 1: one run of 3 starting at position 3.
    ASSERT_EQ(p.runs.size(), 2u);
    EXPECT_EQ(p.longest(), 3u);
    EXPECT_EQ(p.runs[1], (RunProfile::Run{Color::one, 3, 3}));
}

TEST(Path, Rules) {
    auto ok = make_path(colors_of("21"));
    EXPECT_EQ(path_bikernel(ok).bikernel().names(ok), (std::vector<std::string>{"v0", "v2"}));
    auto even = make_path(colors_of("1"));
    EXPECT_EQ(describe(even, path_bikernel(even).reason()), "even_order 2");
    auto sink = make_path(colors_of("12"));
    EXPECT_EQ(describe(sink, path_bikernel(sink).reason()), "sink_arc_color v1 v2");
    auto run = make_path(colors_of("2112"));
    EXPECT_EQ(describe(run, path_bikernel(run).reason()), "long_run v1 1 2");
    EXPECT_THROW(path_bikernel(make_cycle(colors_of("121"))), InputError);
}

TEST(Cycle, Rules) {
    auto alt = make_cycle(colors_of("1212"));
    EXPECT_EQ(cycle_bikernel(alt).bikernel().names(alt), (std::vector<std::string>{"v1", "v3"}));
    auto odd = make_cycle(colors_of("121"));
    EXPECT_FALSE(cycle_bikernel(odd));
    auto mono = monochromatic_cycle(4, Color::two);
    EXPECT_EQ(describe(mono, cycle_bikernel(mono).reason()), "long_run v0 2 4");
}

TEST(Families, SmallCasesAgreeWithOracle) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Color> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? Color::two : Color::one;
            auto path = make_path(std::vector<Color>(c.begin(), c.end() - 1));
            ASSERT_EQ(path_bikernel(path).has_bikernel(), !oracle::all_bikernels(path).empty());
            if (n >= 3) {
                auto cyc = make_cycle(c);
                ASSERT_EQ(cycle_bikernel(cyc).has_bikernel(), !oracle::all_bikernels(cyc).empty());
            }
        }
    }
}

TEST(ChordedCycle, AlternatingBase) {
    // Labels x1..x4 = v0..v3; an even tail needs color 2.
    auto good = make_chorded_cycle(colors_of("1212"), 1, 3, Color::two);
    EXPECT_FALSE(chorded_cycle_bikernel(good));  // two even positions
    auto odd_to_odd = make_chorded_cycle(colors_of("1212"), 0, 2, Color::one);
    EXPECT_EQ(chorded_cycle_bikernel(odd_to_odd).bikernel().names(odd_to_odd), (std::vector<std::string>{"v1", "v3"}));
    auto bad_tail = make_chorded_cycle(colors_of("121212"), 1, 4, Color::one);
    EXPECT_EQ(describe(bad_tail, chorded_cycle_bikernel(bad_tail).reason()), "chord_placement v1 v4 1");
    auto reversed = make_chorded_cycle(colors_of("1212"), 1, 0, Color::two);
    EXPECT_TRUE(chorded_cycle_bikernel(reversed));
}

TEST(ChordedCycle, SmallCasesAgreeWithOracle) {
    for (std::size_t n = 4; n <= 6; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Color> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? Color::two : Color::one;
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t h = 0; h < n; ++h) {
                    if (t == h || h == (t + 1) % n) continue;
                    for (Color col : kColors) {
                        auto g = make_chorded_cycle(c, t, h, col);
                        if (!std::holds_alternative<shape::ChordedCycle>(detect_shape(g))) continue;
                        ASSERT_EQ(chorded_cycle_bikernel(g).has_bikernel(), !oracle::all_bikernels(g).empty())
                            << serialize(g);
                    }
                }
        }
    }
}

TEST(Regular22, CountsCycles) {
    // Color 1 is one 4-cycle, color 2 two 2-cycles.
    auto g = BicoloredDigraph::from_arcs({{"a", "b", Color::one},
                                          {"b", "c", Color::one},
                                          {"c", "d", Color::one},
                                          {"d", "a", Color::one},
                                          {"a", "c", Color::two},
                                          {"c", "a", Color::two},
                                          {"b", "d", Color::two},
                                          {"d", "b", Color::two}});
    ASSERT_TRUE(is_regular22(g));
    auto r = regular22_necessary(g);
    EXPECT_EQ(r.cycles_one, 1u);
    EXPECT_EQ(r.cycles_two, 2u);
    EXPECT_TRUE(r.fails());
    EXPECT_FALSE(solve_brute(g));
    EXPECT_THROW(regular22_necessary(staircase()), RefusalError);
}
