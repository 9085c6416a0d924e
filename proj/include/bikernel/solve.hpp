#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closure.hpp"
#include "condensation.hpp"
#include "degree.hpp"
#include "matching.hpp"
#include "verdict.hpp"
#include "verify.hpp"

namespace bikernel {

struct BruteOptions {
    std::size_t max_vertices = 20;
};

/// Bitmask form of the subset search; 64-bit masks bound any cap.
inline constexpr std::size_t kBruteHardLimit = 63;

namespace detail {

struct MaskClosure {
    std::size_t n = 0;
    std::vector<std::uint64_t> reach_one;      // color-1 successors of v
    std::vector<std::uint64_t> reach_two;      // color-2 successors of v
    std::vector<std::uint64_t> reached_by_two; // color-2 predecessors of v
};

inline MaskClosure mask_closure(const MonoClosure& reach) {
    MaskClosure m;
    m.n = reach.vertex_count();
    m.reach_one.assign(m.n, 0);
    m.reach_two.assign(m.n, 0);
    m.reached_by_two.assign(m.n, 0);
    for (Vertex u = 0; u < m.n; ++u) {
        for (Vertex v = 0; v < m.n; ++v) {
            if (reach.reach(Color::one, u, v)) m.reach_one[u] |= std::uint64_t{1} << v;
            if (reach.reach(Color::two, u, v)) {
                m.reach_two[u] |= std::uint64_t{1} << v;
                m.reached_by_two[v] |= std::uint64_t{1} << u;
            }
        }
    }
    return m;
}

inline bool mask_is_bikernel(const MaskClosure& m, std::uint64_t b) {
    if (b == 0) return false;
    for (std::size_t v = 0; v < m.n; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (b & bit) {
            if ((m.reach_one[v] | m.reach_two[v]) & b & ~bit) return false;
        } else if (!(m.reach_one[v] & b) || !(m.reached_by_two[v] & b)) {
            return false;
        }
    }
    return true;
}

/// Calls visit(mask) for nonempty subsets of {0..n-1} ordered by size, then by
/// sorted member list; stops when visit returns true.
template <typename Visit>
bool for_each_subset_size_lex(std::size_t n, Visit&& visit) {
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= n; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (auto i : pick) mask |= std::uint64_t{1} << i;
            if (visit(mask)) return true;
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

inline VertexSet mask_to_set(std::uint64_t mask, std::size_t n) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

inline void check_brute_cap(const BicoloredDigraph& g, const BruteOptions& opt) {
    const std::size_t cap = std::min(opt.max_vertices, kBruteHardLimit);
    if (g.vertex_count() > cap) {
        throw RefusalError("brute-force search refuses " + std::to_string(g.vertex_count()) +
                           " vertices (cap " + std::to_string(cap) + ")");
    }
}

/// Some vertex on a color-c cycle, if any.
inline std::optional<Vertex> vertex_on_cycle(const BicoloredDigraph& g, Color c) {
    auto cond = condensation(g, c);
    for (const auto& cls : cond.classes) {
        if (cls.size() >= 2) return *cls.begin();
    }
    return std::nullopt;
}

}  // namespace detail

/// Exhaustive search; returns the first bikernel in (size, lex) order.
inline BikernelVerdict solve_brute(const BicoloredDigraph& g, const BruteOptions& opt = {}) {
    detail::check_brute_cap(g, opt);
    if (g.empty()) return BikernelVerdict::none(reason::EmptyGraph{});
    const auto masks = detail::mask_closure(MonoClosure(g));
    std::uint64_t hit = 0;
    detail::for_each_subset_size_lex(g.vertex_count(), [&](std::uint64_t b) {
        if (!detail::mask_is_bikernel(masks, b)) return false;
        hit = b;
        return true;
    });
    if (hit == 0) return BikernelVerdict::none(reason::Exhausted{});
    auto b = detail::mask_to_set(hit, g.vertex_count());
    if (!is_bikernel(g, b)) throw InternalError("brute-force hit failed verification");
    return BikernelVerdict::found(std::move(b));
}

/// Every bikernel, in (size, lex) order.
inline std::vector<VertexSet> all_bikernels_brute(const BicoloredDigraph& g, const BruteOptions& opt = {}) {
    detail::check_brute_cap(g, opt);
    std::vector<VertexSet> out;
    const auto masks = detail::mask_closure(MonoClosure(g));
    detail::for_each_subset_size_lex(g.vertex_count(), [&](std::uint64_t b) {
        if (detail::mask_is_bikernel(masks, b)) out.push_back(detail::mask_to_set(b, g.vertex_count()));
        return false;
    });
    return out;
}

/// Intersection bipartite graph between maximal color-1 classes (left) and
/// minimal color-2 classes (right).
struct ClassStructure {
    Condensation one;
    Condensation two;
    std::vector<std::size_t> m1;  // class ids in `one`
    std::vector<std::size_t> m2;  // class ids in `two`
    std::vector<std::vector<std::size_t>> adjacent;  // m1 position -> m2 positions

    const VertexSet& left_class(std::size_t i) const { return one.classes[m1[i]]; }
    const VertexSet& right_class(std::size_t j) const { return two.classes[m2[j]]; }
};

inline ClassStructure class_structure(const BicoloredDigraph& g) {
    ClassStructure s{condensation(g, Color::one), condensation(g, Color::two), {}, {}, {}};
    s.m1 = s.one.maximal;
    s.m2 = s.two.minimal;
    std::vector<std::size_t> pos2(s.two.classes.size(), BipartiteMatching::npos);
    for (std::size_t j = 0; j < s.m2.size(); ++j) pos2[s.m2[j]] = j;
    s.adjacent.resize(s.m1.size());
    for (std::size_t i = 0; i < s.m1.size(); ++i) {
        for (Vertex v : s.left_class(i)) {
            auto j = pos2[s.two.class_of[v]];
            if (j != BipartiteMatching::npos) s.adjacent[i].push_back(j);
        }
        std::sort(s.adjacent[i].begin(), s.adjacent[i].end());
        s.adjacent[i].erase(std::unique(s.adjacent[i].begin(), s.adjacent[i].end()), s.adjacent[i].end());
    }
    return s;
}

namespace detail {

inline bool has_perfect_matching(const ClassStructure& s, const std::vector<bool>& used1, const std::vector<bool>& used2) {
    std::vector<std::size_t> left_ids, right_pos(s.m2.size(), BipartiteMatching::npos);
    std::size_t right_count = 0;
    for (std::size_t j = 0; j < s.m2.size(); ++j) {
        if (!used2[j]) right_pos[j] = right_count++;
    }
    for (std::size_t i = 0; i < s.m1.size(); ++i) {
        if (!used1[i]) left_ids.push_back(i);
    }
    if (left_ids.size() != right_count) return false;
    BipartiteMatching m(left_ids.size(), right_count);
    for (std::size_t k = 0; k < left_ids.size(); ++k) {
        for (auto j : s.adjacent[left_ids[k]]) {
            if (!used2[j]) m.add_edge(k, right_pos[j]);
        }
    }
    return m.solve() == left_ids.size();
}

}  // namespace detail

/// Decides existence through a bijection M1 -> M2 with nonempty pairwise
/// intersections. Among all such choices returns the lexicographically
/// smallest bikernel (greedy over vertices with a perfect-matching check).
inline BikernelVerdict solve_classes(const BicoloredDigraph& g) {
    if (g.empty()) return BikernelVerdict::none(reason::EmptyGraph{});
    const auto s = class_structure(g);
    if (s.m1.size() != s.m2.size()) {
        return BikernelVerdict::none(reason::ClassCountMismatch{s.m1.size(), s.m2.size()});
    }

    BipartiteMatching matching(s.m1.size(), s.m2.size());
    for (std::size_t i = 0; i < s.m1.size(); ++i) {
        for (auto j : s.adjacent[i]) matching.add_edge(i, j);
    }
    if (matching.solve() != s.m1.size()) {
        reason::NoPerfectMatching r;
        for (auto i : matching.hall_violator()) r.hall_witness.push_back(s.left_class(i));
        return BikernelVerdict::none(std::move(r));
    }

    std::vector<std::size_t> pos1(s.one.classes.size(), BipartiteMatching::npos);
    std::vector<std::size_t> pos2(s.two.classes.size(), BipartiteMatching::npos);
    for (std::size_t i = 0; i < s.m1.size(); ++i) pos1[s.m1[i]] = i;
    for (std::size_t j = 0; j < s.m2.size(); ++j) pos2[s.m2[j]] = j;

    std::vector<bool> used1(s.m1.size(), false), used2(s.m2.size(), false);
    std::vector<Vertex> picks;
    for (Vertex v = 0; v < g.vertex_count() && picks.size() < s.m1.size(); ++v) {
        auto i = pos1[s.one.class_of[v]];
        auto j = pos2[s.two.class_of[v]];
        if (i == BipartiteMatching::npos || j == BipartiteMatching::npos || used1[i] || used2[j]) continue;
        used1[i] = used2[j] = true;
        if (detail::has_perfect_matching(s, used1, used2)) {
            picks.push_back(v);
        } else {
            used1[i] = used2[j] = false;
        }
    }
    VertexSet b(std::move(picks));
    if (b.size() != s.m1.size() || !is_bikernel(g, b)) {
        throw InternalError("class-matching construction failed verification");
    }
    return BikernelVerdict::found(std::move(b));
}

/// Follows color-1 arcs forward from `v` to a 1-sink (c = 1), or color-2 arcs
/// backward from `v` to a 2-source (c = 2), taking the smallest neighbor at
/// each step. The returned path always runs in arc direction.
inline std::vector<Vertex> trace_to_extremum(const BicoloredDigraph& g, Vertex v, Color c) {
    g.check_vertex(v);
    if (auto on = detail::vertex_on_cycle(g, c)) {
        throw InputError("color " + to_string(c) + " subgraph has a cycle through " + g.name(*on));
    }
    std::vector<Vertex> path{v};
    if (c == Color::one) {
        if (is_one_sink(g, v)) throw InputError(g.name(v) + " is already a 1-sink");
        while (!g.out(Color::one, path.back()).empty()) path.push_back(g.out(Color::one, path.back()).front());
    } else {
        if (is_two_source(g, v)) throw InputError(g.name(v) + " is already a 2-source");
        while (!g.in(Color::two, path.back()).empty()) path.push_back(g.in(Color::two, path.back()).front());
        std::reverse(path.begin(), path.end());
    }
    return path;
}

inline std::vector<Vertex> trace_to_extremum(const BicoloredDigraph& g, std::string_view v, Color c) {
    return trace_to_extremum(g, g.index_of(v), c);
}

/// Fast path for graphs without monochromatic cycles: a bikernel exists iff
/// every critical vertex is supercritical, and then it is exactly the set of
/// supercritical vertices.
inline BikernelVerdict solve_acyclic(const BicoloredDigraph& g) {
    for (Color c : kColors) {
        if (auto on = detail::vertex_on_cycle(g, c)) {
            throw RefusalError("monochromatic cycle of color " + to_string(c) + " through " + g.name(*on));
        }
    }
    if (g.empty()) return BikernelVerdict::none(reason::EmptyGraph{});

    std::vector<Vertex> super;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        switch (criticality(g, v)) {
            case Criticality::one_sink: {
                auto path = trace_to_extremum(g, v, Color::two);
                return BikernelVerdict::none(reason::AdjacentCriticalPair{path.front(), v, Color::two});
            }
            case Criticality::two_source: {
                auto path = trace_to_extremum(g, v, Color::one);
                return BikernelVerdict::none(reason::AdjacentCriticalPair{v, path.back(), Color::one});
            }
            case Criticality::supercritical: super.push_back(v); break;
            case Criticality::not_critical: break;
        }
    }
    VertexSet b(std::move(super));
    if (!is_bikernel(g, b)) throw InternalError("supercritical set failed verification");
    return BikernelVerdict::found(std::move(b));
}

/// True when neither color subgraph has a directed cycle.
inline bool is_mono_acyclic(const BicoloredDigraph& g) {
    return !detail::vertex_on_cycle(g, Color::one) && !detail::vertex_on_cycle(g, Color::two);
}

}  // namespace bikernel
