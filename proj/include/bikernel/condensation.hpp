#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "scc.hpp"

namespace bikernel {

/// Strongly connected components of one color's subgraph, with the acyclic
/// quotient. `maximal` classes have no outgoing quotient arc (maximal under
/// color-c reachability); `minimal` classes have no incoming one.
struct Condensation {
    Color color = Color::one;
    std::vector<std::size_t> class_of;
    std::vector<VertexSet> classes;
    std::vector<std::pair<std::size_t, std::size_t>> dag_arcs;
    std::vector<std::size_t> maximal;
    std::vector<std::size_t> minimal;
};

inline Condensation condensation(const BicoloredDigraph& g, Color c) {
    Condensation out;
    out.color = c;
    const std::size_t n = g.vertex_count();
    out.class_of = detail::strong_components(n, [&](std::size_t v) -> const std::vector<Vertex>& { return g.out(c, v); });

    std::size_t k = 0;
    for (auto id : out.class_of) k = std::max(k, id + 1);
    std::vector<std::vector<Vertex>> members(k);
    for (Vertex v = 0; v < n; ++v) members[out.class_of[v]].push_back(v);
    out.classes.reserve(k);
    for (auto& m : members) out.classes.emplace_back(std::move(m));

    for (const auto& a : g.arcs()) {
        if (a.color != c) continue;
        auto from = out.class_of[a.tail], to = out.class_of[a.head];
        if (from != to) out.dag_arcs.emplace_back(from, to);
    }
    std::sort(out.dag_arcs.begin(), out.dag_arcs.end());
    out.dag_arcs.erase(std::unique(out.dag_arcs.begin(), out.dag_arcs.end()), out.dag_arcs.end());

    std::vector<bool> has_out(k, false), has_in(k, false);
    for (auto [from, to] : out.dag_arcs) {
        has_out[from] = true;
        has_in[to] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!has_out[i]) out.maximal.push_back(i);
        if (!has_in[i]) out.minimal.push_back(i);
    }
    return out;
}

}  // namespace bikernel
