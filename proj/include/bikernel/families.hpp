#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "solve.hpp"
#include "verdict.hpp"
#include "verify.hpp"

namespace bikernel {

namespace shape {
/// Arcs are exactly order[i] -> order[i+1].
struct DirectedPath {
    std::vector<Vertex> order;
    bool operator==(const DirectedPath&) const = default;
};
/// Arcs are exactly order[i] -> order[i+1 mod n], n >= 3; order starts at the
/// smallest vertex.
struct DirectedCycle {
    std::vector<Vertex> order;
    bool operator==(const DirectedCycle&) const = default;
};
/// A directed cycle plus one extra arc on an ordered pair that is not a cycle
/// arc. The chord may reverse a cycle arc.
struct ChordedCycle {
    std::vector<Vertex> order;
    Arc chord;
    bool operator==(const ChordedCycle&) const = default;
};
struct Other {
    bool operator==(const Other&) const = default;
};
}  // namespace shape

using FamilyShape = std::variant<shape::DirectedPath, shape::DirectedCycle, shape::ChordedCycle, shape::Other>;

/// Maximal segments of equally colored consecutive arcs. `start` is the
/// position (in the path or cycle order) of the tail of the segment's first
/// arc. Runs of a cycle wrap around; a monochromatic cycle is a single run.
struct RunProfile {
    struct Run {
        Color color;
        std::size_t length;
        std::size_t start;
        bool operator==(const Run&) const = default;
    };
    std::vector<Run> runs;

    std::size_t longest() const {
        std::size_t m = 0;
        for (const auto& r : runs) m = std::max(m, r.length);
        return m;
    }
};

namespace detail {

inline Color arc_color(const BicoloredDigraph& g, Vertex u, Vertex v) {
    return g.has_arc(u, v, Color::one) ? Color::one : Color::two;
}

inline std::vector<Color> order_colors(const BicoloredDigraph& g, const std::vector<Vertex>& order, bool cyclic) {
    std::vector<Color> colors;
    const std::size_t n = order.size();
    const std::size_t arcs = cyclic ? n : (n == 0 ? 0 : n - 1);
    for (std::size_t i = 0; i < arcs; ++i) colors.push_back(arc_color(g, order[i], order[(i + 1) % n]));
    return colors;
}

// Follows the unique successor from `start` using `next` (npos when absent).
inline std::vector<Vertex> walk(const std::vector<std::size_t>& next, Vertex start, std::size_t limit) {
    std::vector<Vertex> order{start};
    while (order.size() < limit && next[order.back()] != BipartiteMatching::npos) {
        Vertex v = next[order.back()];
        if (v == start) break;
        order.push_back(v);
    }
    return order;
}

// Directed Hamiltonian cycle formed by exactly `arcs`, starting at vertex 0.
inline std::optional<std::vector<Vertex>> as_cycle(std::size_t n, const std::vector<Arc>& arcs) {
    if (n < 3 || arcs.size() != n) return std::nullopt;
    std::vector<std::size_t> next(n, BipartiteMatching::npos), indeg(n, 0);
    for (const auto& a : arcs) {
        if (next[a.tail] != BipartiteMatching::npos) return std::nullopt;
        next[a.tail] = a.head;
        ++indeg[a.head];
    }
    for (auto d : indeg) {
        if (d != 1) return std::nullopt;
    }
    auto order = walk(next, 0, n);
    if (order.size() != n || next[order.back()] != 0) return std::nullopt;
    return order;
}

inline std::optional<std::vector<Vertex>> as_path(std::size_t n, const std::vector<Arc>& arcs) {
    if (n == 0 || arcs.size() != n - 1) return std::nullopt;
    std::vector<std::size_t> next(n, BipartiteMatching::npos), indeg(n, 0);
    for (const auto& a : arcs) {
        if (next[a.tail] != BipartiteMatching::npos) return std::nullopt;
        next[a.tail] = a.head;
        ++indeg[a.head];
    }
    std::optional<Vertex> source;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] > 1) return std::nullopt;
        if (indeg[v] == 0) {
            if (source) return std::nullopt;
            source = v;
        }
    }
    if (!source) return std::nullopt;
    auto order = walk(next, *source, n);
    if (order.size() != n) return std::nullopt;
    return order;
}

inline RunProfile runs_of(const std::vector<Color>& colors, bool cyclic) {
    RunProfile p;
    const std::size_t m = colors.size();
    if (m == 0) return p;
    std::size_t first = 0;
    if (cyclic) {
        while (first < m && colors[(first + m - 1) % m] == colors[first]) ++first;
        if (first == m) {
            p.runs.push_back({colors[0], m, 0});
            return p;
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t i = (first + k) % m;
        if (!p.runs.empty() && p.runs.back().color == colors[i]) {
            ++p.runs.back().length;
        } else {
            p.runs.push_back({colors[i], 1, i});
        }
    }
    return p;
}

inline BikernelVerdict verified(const BicoloredDigraph& g, VertexSet b, const char* what) {
    if (auto v = find_violation(g, b)) {
        throw InternalError(std::string(what) + " construction failed verification: " + describe(g, *v));
    }
    return BikernelVerdict::found(std::move(b));
}

inline std::optional<BikernelVerdict> long_run_violation(const RunProfile& p, const std::vector<Vertex>& order,
                                                         std::size_t max_allowed) {
    for (const auto& r : p.runs) {
        if (r.length > max_allowed) return BikernelVerdict::none(reason::LongRun{order[r.start], r.color, r.length});
    }
    return std::nullopt;
}

}  // namespace detail

inline FamilyShape detect_shape(const BicoloredDigraph& g) {
    const std::size_t n = g.vertex_count();
    const auto& arcs = g.arcs();
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i - 1].tail == arcs[i].tail && arcs[i - 1].head == arcs[i].head) return shape::Other{};
    }
    if (auto order = detail::as_path(n, arcs)) return shape::DirectedPath{*order};
    if (auto order = detail::as_cycle(n, arcs)) return shape::DirectedCycle{*order};
    if (n >= 3 && arcs.size() == n + 1) {
        for (std::size_t skip = 0; skip < arcs.size(); ++skip) {
            std::vector<Arc> rest;
            for (std::size_t i = 0; i < arcs.size(); ++i) {
                if (i != skip) rest.push_back(arcs[i]);
            }
            if (auto order = detail::as_cycle(n, rest)) return shape::ChordedCycle{*order, arcs[skip]};
        }
    }
    return shape::Other{};
}

inline RunProfile run_profile(const BicoloredDigraph& g, const FamilyShape& s) {
    if (auto p = std::get_if<shape::DirectedPath>(&s)) return detail::runs_of(detail::order_colors(g, p->order, false), false);
    if (auto c = std::get_if<shape::DirectedCycle>(&s)) return detail::runs_of(detail::order_colors(g, c->order, true), true);
    if (auto c = std::get_if<shape::ChordedCycle>(&s)) return detail::runs_of(detail::order_colors(g, c->order, true), true);
    throw InputError("run profile needs a path or cycle");
}

/// A directed path has a bikernel iff no two consecutive arcs share a color,
/// its order is odd and the arc into the sink has color 1. The bikernel is
/// every second vertex counted from the sink.
inline BikernelVerdict path_bikernel(const BicoloredDigraph& g) {
    const auto s = detect_shape(g);
    const auto* p = std::get_if<shape::DirectedPath>(&s);
    if (!p) throw InputError("path_bikernel: graph is not a directed path");
    const auto& order = p->order;
    const std::size_t n = order.size();
    if (auto bad = detail::long_run_violation(run_profile(g, s), order, 1)) return *bad;
    if (n % 2 == 0) return BikernelVerdict::none(reason::EvenOrder{n});
    if (n >= 2 && detail::arc_color(g, order[n - 2], order[n - 1]) == Color::two) {
        return BikernelVerdict::none(reason::SinkArcColor{order[n - 2], order[n - 1]});
    }
    std::vector<Vertex> b;
    for (std::size_t i = 0; i < n; i += 2) b.push_back(order[n - 1 - i]);
    return detail::verified(g, VertexSet(std::move(b)), "path");
}

/// A directed cycle has a bikernel iff its colors alternate; it is the set of
/// heads of color-1 arcs and it is unique.
inline BikernelVerdict cycle_bikernel(const BicoloredDigraph& g) {
    const auto s = detect_shape(g);
    const auto* c = std::get_if<shape::DirectedCycle>(&s);
    if (!c) throw InputError("cycle_bikernel: graph is not a directed cycle");
    const auto& order = c->order;
    if (auto bad = detail::long_run_violation(run_profile(g, s), order, 1)) return *bad;
    std::vector<Vertex> b;
    for (const auto& a : g.arcs()) {
        if (a.color == Color::one) b.push_back(a.head);
    }
    return detail::verified(g, VertexSet(std::move(b)), "cycle");
}

/// Directed cycle with one chord. Two accepting configurations:
///  - alternating base: label from the tail of a color-1 arc as x1, x2, ...;
///    the chord may not join two even positions, an even tail needs color 2
///    and an even head needs color 1. A chord reversing a base arc is always
///    accepted. Bikernel: the even positions.
///  - exactly one run of two arcs (x, y, z), every other run single: for
///    color 1 the chord must enter y with color 2 (bikernel z, z+2, ...); for
///    color 2 it must leave y with color 1 (bikernel x, z+1, z+3, ...).
inline BikernelVerdict chorded_cycle_bikernel(const BicoloredDigraph& g) {
    const auto s = detect_shape(g);
    const auto* c = std::get_if<shape::ChordedCycle>(&s);
    if (!c) throw InputError("chorded_cycle_bikernel: graph is not a directed cycle with one chord");
    const auto& order = c->order;
    const auto& chord = c->chord;
    const std::size_t n = order.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    const auto colors = detail::order_colors(g, order, true);
    const auto profile = detail::runs_of(colors, true);
    const auto placement = BikernelVerdict::none(reason::ChordPlacement{chord.tail, chord.head, chord.color});

    if (profile.longest() == 1) {
        std::size_t first_one = 0;
        while (colors[first_one] != Color::one) ++first_one;
        auto label = [&](Vertex v) { return (pos[v] + n - first_one) % n + 1; };
        const bool even_tail = label(chord.tail) % 2 == 0;
        const bool even_head = label(chord.head) % 2 == 0;
        const bool reverses_base = pos[chord.tail] == (pos[chord.head] + 1) % n;
        const bool ok = reverses_base || (!(even_tail && even_head) && (!even_tail || chord.color == Color::two) &&
                                          (!even_head || chord.color == Color::one));
        if (!ok) return placement;
        std::vector<Vertex> b;
        for (Vertex v : order) {
            if (label(v) % 2 == 0) b.push_back(v);
        }
        return detail::verified(g, VertexSet(std::move(b)), "chorded cycle");
    }

    if (auto bad = detail::long_run_violation(profile, order, 2)) return *bad;
    std::optional<RunProfile::Run> pair;
    for (const auto& r : profile.runs) {
        if (r.length != 2) continue;
        if (pair) return BikernelVerdict::none(reason::LongRun{order[r.start], r.color, r.length});
        pair = r;
    }
    const std::size_t p = pair->start;
    const Vertex x = order[p], y = order[(p + 1) % n];
    std::vector<Vertex> b;
    if (pair->color == Color::one) {
        if (chord.head != y || chord.color != Color::two) return placement;
        for (std::size_t i = (p + 2) % n; i != p && i != (p + 1) % n; i = (i + 2) % n) b.push_back(order[i]);
    } else {
        if (chord.tail != y || chord.color != Color::one) return placement;
        b.push_back(x);
        for (std::size_t i = (p + 3) % n; i != p; i = (i + 2) % n) b.push_back(order[i]);
    }
    return detail::verified(g, VertexSet(std::move(b)), "chorded cycle");
}

struct Regular22Result {
    std::size_t cycles_one;
    std::size_t cycles_two;

    /// Unequal cycle counts certify that no bikernel exists.
    bool fails() const noexcept { return cycles_one != cycles_two; }
};

/// Necessary condition for (2,2)-regular graphs: each color class splits into
/// the same number of disjoint cycles.
inline Regular22Result regular22_necessary(const BicoloredDigraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Color c : kColors) {
            if (g.out(c, v).size() != 1 || g.in(c, v).size() != 1) {
                throw RefusalError("not (2,2)-regular at vertex " + g.name(v) + " (color " + to_string(c) + ")");
            }
        }
    }
    auto count_cycles = [&](Color c) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::size_t k = 0;
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            if (seen[s]) continue;
            ++k;
            for (Vertex v = s; !seen[v]; v = g.out(c, v).front()) seen[v] = true;
        }
        return k;
    };
    return {count_cycles(Color::one), count_cycles(Color::two)};
}

inline bool is_regular22(const BicoloredDigraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Color c : kColors) {
            if (g.out(c, v).size() != 1 || g.in(c, v).size() != 1) return false;
        }
    }
    return g.vertex_count() > 0;
}

}  // namespace bikernel
