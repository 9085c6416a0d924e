#pragma once

#include <optional>
#include <string>
#include <variant>

#include "closure.hpp"
#include "digraph.hpp"

namespace bikernel {

namespace violation {
struct EmptySet {
    bool operator==(const EmptySet&) const = default;
};
/// A monochromatic path of `color` runs from member `from` to member `to`.
struct Dependent {
    Vertex from;
    Vertex to;
    Color color;
    bool operator==(const Dependent&) const = default;
};
/// `vertex` is outside the set and reaches no member by a color-1 path.
struct Unabsorbed {
    Vertex vertex;
    bool operator==(const Unabsorbed&) const = default;
};
/// `vertex` is outside the set and no member reaches it by a color-2 path.
struct Undominated {
    Vertex vertex;
    bool operator==(const Undominated&) const = default;
};
}  // namespace violation

using Violation = std::variant<violation::EmptySet, violation::Dependent, violation::Unabsorbed, violation::Undominated>;

/// First failing clause in the order independence, absorbency, dominance,
/// with the lexicographically smallest witness; nullopt when `b` is a
/// bikernel. Members outside the graph raise InputError.
inline std::optional<Violation> find_violation(const BicoloredDigraph& g, const MonoClosure& reach, const VertexSet& b) {
    for (Vertex v : b) g.check_vertex(v);
    if (b.empty()) return violation::EmptySet{};

    for (Vertex u : b) {
        for (Vertex v : b) {
            if (u == v) continue;
            for (Color c : kColors) {
                if (reach.reach(c, u, v)) return violation::Dependent{u, v, c};
            }
        }
    }
    const std::size_t n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        if (b.contains(v)) continue;
        bool absorbed = false;
        for (Vertex m : b) absorbed = absorbed || reach.reach(Color::one, v, m);
        if (!absorbed) return violation::Unabsorbed{v};
    }
    for (Vertex v = 0; v < n; ++v) {
        if (b.contains(v)) continue;
        bool dominated = false;
        for (Vertex m : b) dominated = dominated || reach.reach(Color::two, m, v);
        if (!dominated) return violation::Undominated{v};
    }
    return std::nullopt;
}

inline std::optional<Violation> find_violation(const BicoloredDigraph& g, const VertexSet& b) {
    return find_violation(g, MonoClosure(g), b);
}

inline bool is_bikernel(const BicoloredDigraph& g, const MonoClosure& reach, const VertexSet& b) {
    return !find_violation(g, reach, b).has_value();
}

inline bool is_bikernel(const BicoloredDigraph& g, const VertexSet& b) { return !find_violation(g, b).has_value(); }

/// Space-separated rendering, e.g. "independence a b 1" or "absorbency x2".
inline std::string describe(const BicoloredDigraph& g, const Violation& v) {
    struct Visitor {
        const BicoloredDigraph& g;
        std::string operator()(const violation::EmptySet&) const { return "empty_set"; }
        std::string operator()(const violation::Dependent& d) const {
            return "independence " + g.name(d.from) + " " + g.name(d.to) + " " + to_string(d.color);
        }
        std::string operator()(const violation::Unabsorbed& u) const { return "absorbency " + g.name(u.vertex); }
        std::string operator()(const violation::Undominated& u) const { return "dominance " + g.name(u.vertex); }
    };
    return std::visit(Visitor{g}, v);
}

}  // namespace bikernel
