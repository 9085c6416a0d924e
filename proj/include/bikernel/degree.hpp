#pragma once

#include <optional>
#include <string_view>

#include "digraph.hpp"

namespace bikernel {

enum class Direction { in, out };

/// Number of arcs at `v` in the given direction, restricted to `color` when set.
inline std::size_t degree(const BicoloredDigraph& g, Vertex v, Direction dir, std::optional<Color> color = std::nullopt) {
    g.check_vertex(v);
    auto count = [&](Color c) { return dir == Direction::out ? g.out(c, v).size() : g.in(c, v).size(); };
    if (color) return count(*color);
    return count(Color::one) + count(Color::two);
}

inline std::size_t degree(const BicoloredDigraph& g, std::string_view v, Direction dir,
                          std::optional<Color> color = std::nullopt) {
    return degree(g, g.index_of(v), dir, color);
}

/// No outgoing color-1 arc.
inline bool is_one_sink(const BicoloredDigraph& g, Vertex v) { return degree(g, v, Direction::out, Color::one) == 0; }

/// No incoming color-2 arc.
inline bool is_two_source(const BicoloredDigraph& g, Vertex v) { return degree(g, v, Direction::in, Color::two) == 0; }

enum class Criticality { not_critical, one_sink, two_source, supercritical };

inline Criticality criticality(const BicoloredDigraph& g, Vertex v) {
    const bool sink = is_one_sink(g, v);
    const bool source = is_two_source(g, v);
    if (sink && source) return Criticality::supercritical;
    if (sink) return Criticality::one_sink;
    if (source) return Criticality::two_source;
    return Criticality::not_critical;
}

inline Criticality criticality(const BicoloredDigraph& g, std::string_view v) { return criticality(g, g.index_of(v)); }

inline bool is_critical(Criticality c) noexcept { return c != Criticality::not_critical; }

inline const char* to_string(Criticality c) noexcept {
    switch (c) {
        case Criticality::not_critical: return "not_critical";
        case Criticality::one_sink: return "one_sink";
        case Criticality::two_source: return "two_source";
        case Criticality::supercritical: return "supercritical";
    }
    return "?";
}

}  // namespace bikernel
