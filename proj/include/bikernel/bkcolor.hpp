#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matching.hpp"
#include "scc.hpp"
#include "solve.hpp"

namespace bikernel {

/// Partition of the arcs into stars. owner[i] is the center that arc i of
/// d.arcs() belongs to; every center owns at least one in-arc and one
/// out-arc. A center need not own every arc it touches.
struct StarDecomposition {
    VertexSet centers;
    std::vector<Vertex> owner;

    bool operator==(const StarDecomposition&) const = default;
};

namespace star_failure {
/// An arc whose tail is a source or sink and whose head is a source or sink;
/// neither endpoint can be a center.
struct ExtremeArc {
    Vertex tail;
    Vertex head;
    bool operator==(const ExtremeArc&) const = default;
};
/// No choice of centers admits an owner assignment.
struct NoAssignment {
    bool operator==(const NoAssignment&) const = default;
};
}  // namespace star_failure

using StarFailure = std::variant<star_failure::ExtremeArc, star_failure::NoAssignment>;
using StarSearch = std::variant<StarDecomposition, StarFailure>;

namespace not_colorable {
struct NoStars {
    StarFailure failure;
    bool operator==(const NoStars&) const = default;
};
/// Terminal strong component: a proper vertex subset no arc leaves.
struct NotStronglyConnected {
    VertexSet terminal_component;
    bool operator==(const NotStronglyConnected&) const = default;
};
struct Exhausted {
    bool operator==(const Exhausted&) const = default;
};
}  // namespace not_colorable

using NotColorableReason = std::variant<not_colorable::NoStars, not_colorable::NotStronglyConnected, not_colorable::Exhausted>;

struct Colored {
    std::vector<Color> coloring;  // aligned with the input's arcs()
    BicoloredDigraph graph;
    VertexSet bikernel;
};

class ColoringResult {
public:
    static ColoringResult colored(Colored c) { return ColoringResult(std::move(c)); }
    static ColoringResult not_colorable(NotColorableReason r) { return ColoringResult(std::move(r)); }

    bool is_colored() const noexcept { return std::holds_alternative<Colored>(value_); }
    explicit operator bool() const noexcept { return is_colored(); }
    const Colored& result() const { return std::get<Colored>(value_); }
    const NotColorableReason& reason() const { return std::get<NotColorableReason>(value_); }

private:
    explicit ColoringResult(Colored c) : value_(std::move(c)) {}
    explicit ColoringResult(NotColorableReason r) : value_(std::move(r)) {}

    std::variant<Colored, NotColorableReason> value_;
};

inline std::string describe(const Digraph& d, const NotColorableReason& r) {
    struct Visitor {
        const Digraph& d;
        std::string operator()(const not_colorable::NoStars& s) const {
            if (auto* e = std::get_if<star_failure::ExtremeArc>(&s.failure)) {
                return "extreme_arc " + d.name(e->tail) + " " + d.name(e->head);
            }
            return "no_star_assignment";
        }
        std::string operator()(const not_colorable::NotStronglyConnected& s) const {
            std::string out = "not_strongly_connected";
            for (Vertex v : s.terminal_component) out += " " + d.name(v);
            return out;
        }
        std::string operator()(const not_colorable::Exhausted&) const { return "exhausted"; }
    };
    return std::visit(Visitor{d}, r);
}

inline std::vector<std::size_t> strong_components(const Digraph& d) {
    return detail::strong_components(d.vertex_count(), [&](std::size_t v) -> const std::vector<Vertex>& { return d.out(v); });
}

inline bool is_acyclic(const Digraph& d) {
    auto comp = strong_components(d);
    std::vector<bool> seen(comp.size(), false);
    for (auto c : comp) {
        if (seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

inline bool is_strongly_connected(const Digraph& d) {
    auto comp = strong_components(d);
    return d.vertex_count() > 0 && std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// Exactly one arc between every two distinct vertices.
inline bool is_tournament(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    if (d.arc_count() != n * (n - 1) / 2 && n > 0) return false;
    for (const auto& a : d.arcs()) {
        if (d.has_arc(a.head, a.tail)) return false;
    }
    return true;
}

/// d with vertex v removed.
inline Digraph without_vertex(const Digraph& d, Vertex v) {
    std::vector<std::string> names;
    for (Vertex u = 0; u < d.vertex_count(); ++u) {
        if (u != v) names.push_back(d.name(u));
    }
    std::vector<NamedPlainArc> arcs;
    for (const auto& a : d.arcs()) {
        if (a.tail != v && a.head != v) arcs.push_back({d.name(a.tail), d.name(a.head)});
    }
    return Digraph(std::move(names), arcs);
}

namespace detail {

class StarSearcher {
public:
    explicit StarSearcher(const Digraph& d) : d_(d), status_(d.vertex_count(), unknown) {}

    StarSearch run() {
        const std::size_t n = d_.vertex_count();
        for (Vertex v = 0; v < n; ++v) {
            if (d_.in(v).empty() || d_.out(v).empty()) status_[v] = leaf;
        }
        for (const auto& a : d_.arcs()) {
            if (status_[a.tail] == leaf && status_[a.head] == leaf) return star_failure::ExtremeArc{a.tail, a.head};
        }
        for (Vertex v = 0; v < n; ++v) {
            if (status_[v] == leaf) make_neighbors_centers(v, nullptr);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (status_[v] == unknown) free_.push_back(v);
        }
        if (search(0)) return *found_;
        return star_failure::NoAssignment{};
    }

private:
    static constexpr int unknown = -1, leaf = 0, center = 1;

    void make_neighbors_centers(Vertex v, std::vector<Vertex>* changed) {
        auto mark = [&](Vertex w) {
            if (status_[w] == unknown) {
                status_[w] = center;
                if (changed) changed->push_back(w);
            }
        };
        for (Vertex w : d_.out(v)) mark(w);
        for (Vertex w : d_.in(v)) mark(w);
    }

    bool search(std::size_t idx) {
        while (idx < free_.size() && status_[free_[idx]] != unknown) ++idx;
        if (idx == free_.size()) return assign();
        const Vertex v = free_[idx];

        status_[v] = center;
        if (search(idx + 1)) return true;

        bool blocked = false;
        for (Vertex w : d_.out(v)) blocked = blocked || status_[w] == leaf;
        for (Vertex w : d_.in(v)) blocked = blocked || status_[w] == leaf;
        if (!blocked) {
            std::vector<Vertex> changed;
            status_[v] = leaf;
            make_neighbors_centers(v, &changed);
            if (search(idx + 1)) return true;
            for (Vertex w : changed) status_[w] = unknown;
        }
        status_[v] = unknown;
        return false;
    }

    // With every vertex labelled, match unmet (center, direction) needs to
    // center-center arcs; each arc can serve its tail's out-need or its
    // head's in-need.
    bool assign() {
        const auto& arcs = d_.arcs();
        const std::size_t n = d_.vertex_count();
        std::vector<bool> has_out(n, false), has_in(n, false);
        std::vector<Vertex> owner(arcs.size());
        std::vector<std::size_t> inner;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto& a = arcs[i];
            if (status_[a.head] == leaf) {
                owner[i] = a.tail;
                has_out[a.tail] = true;
            } else if (status_[a.tail] == leaf) {
                owner[i] = a.head;
                has_in[a.head] = true;
            } else {
                inner.push_back(i);
            }
        }
        std::vector<std::pair<Vertex, bool>> needs;  // (center, wants out-arc)
        std::vector<Vertex> centers;
        for (Vertex v = 0; v < n; ++v) {
            if (status_[v] != center) continue;
            centers.push_back(v);
            if (!has_out[v]) needs.push_back({v, true});
            if (!has_in[v]) needs.push_back({v, false});
        }
        BipartiteMatching m(needs.size(), inner.size());
        for (std::size_t k = 0; k < needs.size(); ++k) {
            for (std::size_t e = 0; e < inner.size(); ++e) {
                const auto& a = arcs[inner[e]];
                if (needs[k].second ? a.tail == needs[k].first : a.head == needs[k].first) m.add_edge(k, e);
            }
        }
        if (m.solve() != needs.size()) return false;
        for (std::size_t e = 0; e < inner.size(); ++e) {
            const auto& a = arcs[inner[e]];
            auto k = m.mate_of_right(e);
            owner[inner[e]] = (!k || needs[*k].second) ? a.tail : a.head;
        }
        found_ = StarDecomposition{VertexSet(std::move(centers)), std::move(owner)};
        return true;
    }

    const Digraph& d_;
    std::vector<int> status_;
    std::vector<Vertex> free_;
    std::optional<StarDecomposition> found_;
};

}  // namespace detail

/// Searches for a star decomposition of a digraph without directed cycles.
/// Sources and sinks are never centers; the remaining vertices are labelled
/// center-first by backtracking and each labelling is checked by bipartite
/// matching. Worst-case exponential in the number of unforced vertices.
inline StarSearch find_star_decomposition(const Digraph& d) {
    if (!is_acyclic(d)) throw RefusalError("star decomposition needs a digraph without directed cycles");
    return detail::StarSearcher(d).run();
}

inline void validate_star_decomposition(const Digraph& d, const StarDecomposition& s) {
    if (s.owner.size() != d.arc_count()) throw InputError("star decomposition must assign every arc");
    std::vector<bool> owns_out(d.vertex_count(), false), owns_in(d.vertex_count(), false);
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
        const auto& a = d.arcs()[i];
        const Vertex o = s.owner[i];
        if (o != a.tail && o != a.head) {
            throw InputError("arc " + d.name(a.tail) + " -> " + d.name(a.head) + " assigned to a non-endpoint");
        }
        if (!s.centers.contains(o)) {
            throw InputError("arc " + d.name(a.tail) + " -> " + d.name(a.head) + " touches no center");
        }
        (o == a.tail ? owns_out : owns_in)[o] = true;
    }
    for (Vertex c : s.centers) {
        if (c >= d.vertex_count()) throw InputError("center out of range");
        if (!owns_out[c] || !owns_in[c]) throw InputError("center " + d.name(c) + " lacks an in-arc or an out-arc");
    }
}

/// Colors arcs a center owns as outgoing with 1 and incoming with 2; the
/// non-centers form the bikernel.
inline ColoringResult color_from_stars(const Digraph& d, const StarDecomposition& s) {
    validate_star_decomposition(d, s);
    std::vector<Color> coloring(d.arc_count());
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
        coloring[i] = s.owner[i] == d.arcs()[i].tail ? Color::one : Color::two;
    }
    auto g = apply_coloring(d, coloring);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (!s.centers.contains(v)) rest.push_back(v);
    }
    VertexSet b(std::move(rest));
    if (auto v = find_violation(g, b)) throw InternalError("star coloring failed verification: " + describe(g, *v));
    return ColoringResult::colored({std::move(coloring), std::move(g), std::move(b)});
}

/// BK-coloring of a digraph without directed cycles via stars.
inline ColoringResult color_acyclic(const Digraph& d) {
    auto s = find_star_decomposition(d);
    if (auto* f = std::get_if<StarFailure>(&s)) return ColoringResult::not_colorable(not_colorable::NoStars{*f});
    return color_from_stars(d, std::get<StarDecomposition>(s));
}

/// First coloring (arc i gets color 2 iff bit i of the index is set) under
/// which a bikernel exists, paired with its (size, lex)-smallest bikernel.
inline std::optional<Colored> exhaustive_bk_coloring(const Digraph& d, std::size_t max_arcs = 20) {
    if (d.arc_count() > max_arcs) {
        throw RefusalError("exhaustive coloring refuses " + std::to_string(d.arc_count()) + " arcs (cap " +
                           std::to_string(max_arcs) + ")");
    }
    const std::size_t m = d.arc_count();
    std::vector<Color> coloring(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (std::size_t i = 0; i < m; ++i) coloring[i] = (mask >> i & 1) ? Color::two : Color::one;
        auto g = apply_coloring(d, coloring);
        auto verdict = solve_brute(g);
        if (verdict) return Colored{coloring, std::move(g), verdict.bikernel()};
    }
    return std::nullopt;
}

namespace detail {

inline VertexSet terminal_component(const Digraph& d) {
    auto comp = strong_components(d);
    std::size_t k = 0;
    for (auto c : comp) k = std::max(k, c + 1);
    std::vector<bool> leaves(k, false);
    for (const auto& a : d.arcs()) {
        if (comp[a.tail] != comp[a.head]) leaves[comp[a.tail]] = true;
    }
    std::size_t target = 0;
    while (target < k && leaves[target]) ++target;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        if (comp[v] == target) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

}  // namespace detail

/// BK-coloring of a tournament. From four vertices on, colorable exactly
/// when strongly connected: peel a vertex v whose removal keeps the
/// tournament strong, color the rest recursively, then color arcs into v
/// with 2 and arcs out of v with 1. Four vertices and fewer are searched
/// exhaustively. The bikernel is always a single vertex.
inline ColoringResult color_tournament(const Digraph& t) {
    if (!is_tournament(t)) throw InputError("color_tournament: input is not a tournament");
    const std::size_t n = t.vertex_count();
    if (n == 0) throw InputError("color_tournament: empty tournament");
    if (n >= 4 && !is_strongly_connected(t)) {
        return ColoringResult::not_colorable(not_colorable::NotStronglyConnected{detail::terminal_component(t)});
    }
    if (n <= 4) {
        auto found = exhaustive_bk_coloring(t);
        if (found) return ColoringResult::colored(std::move(*found));
        if (n == 4) throw InternalError("strong 4-tournament without BK-coloring");
        if (!is_strongly_connected(t)) {
            return ColoringResult::not_colorable(not_colorable::NotStronglyConnected{detail::terminal_component(t)});
        }
        return ColoringResult::not_colorable(not_colorable::Exhausted{});
    }

    for (Vertex v = 0; v < n; ++v) {
        auto rest = without_vertex(t, v);
        if (!is_strongly_connected(rest)) continue;
        auto inner = color_tournament(rest);
        if (!inner) throw InternalError("strong sub-tournament reported not colorable");
        const auto& sub = inner.result();
        std::vector<Color> coloring(t.arc_count());
        for (std::size_t i = 0; i < t.arc_count(); ++i) {
            const auto& a = t.arcs()[i];
            if (a.head == v) {
                coloring[i] = Color::two;
            } else if (a.tail == v) {
                coloring[i] = Color::one;
            } else {
                auto j = rest.arc_index(rest.index_of(t.name(a.tail)), rest.index_of(t.name(a.head)));
                coloring[i] = sub.coloring[*j];
            }
        }
        auto g = apply_coloring(t, coloring);
        auto b = VertexSet::from_names(g, sub.bikernel.names(sub.graph));
        if (auto bad = find_violation(g, b)) {
            throw InternalError("tournament extension failed verification: " + describe(g, *bad));
        }
        return ColoringResult::colored({std::move(coloring), std::move(g), std::move(b)});
    }
    throw InternalError("strong tournament on " + std::to_string(n) + " vertices has no removable vertex");
}

}  // namespace bikernel
