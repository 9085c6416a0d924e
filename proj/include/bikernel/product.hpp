#pragma once

#include <span>
#include <string>
#include <vector>

#include "families.hpp"

namespace bikernel {

/// Name of the product vertex (left, right).
inline std::string product_vertex_name(const std::string& left, const std::string& right) { return left + "," + right; }

/// Cartesian product with the induced coloring: (u1,v)->(u2,v) takes the color
/// of u1->u2 in g, (u,v1)->(u,v2) the color of v1->v2 in h.
inline BicoloredDigraph cartesian_product(const BicoloredDigraph& g, const BicoloredDigraph& h) {
    if (g.empty() || h.empty()) throw InputError("cartesian product needs two nonempty factors");
    const std::size_t m = h.vertex_count();
    std::vector<std::string> names;
    names.reserve(g.vertex_count() * m);
    for (const auto& left : g.names()) {
        for (const auto& right : h.names()) names.push_back(product_vertex_name(left, right));
    }
    auto at = [m](Vertex u, Vertex v) { return u * m + v; };
    std::vector<Arc> arcs;
    arcs.reserve(g.vertex_count() * h.arc_count() + m * g.arc_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const auto& a : h.arcs()) arcs.push_back({at(u, a.tail), at(u, a.head), a.color});
    }
    for (Vertex v = 0; v < m; ++v) {
        for (const auto& a : g.arcs()) arcs.push_back({at(a.tail, v), at(a.head, v), a.color});
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("product vertex names collide; rename factor vertices containing ','");
    }
    return BicoloredDigraph::from_indexed(names, arcs);
}

namespace detail {

inline VertexSet product_set(const BicoloredDigraph& product, const BicoloredDigraph& g, const BicoloredDigraph& h,
                             const VertexSet& bg, const VertexSet& bh) {
    std::vector<Vertex> members;
    for (Vertex u : bg) {
        for (Vertex v : bh) members.push_back(product.index_of(product_vertex_name(g.name(u), h.name(v))));
    }
    return VertexSet(std::move(members));
}

}  // namespace detail

/// bg x bh, indexed in cartesian_product(g, h). Both inputs must be bikernels
/// of their factors; the result is re-verified on the product.
inline VertexSet compose_bikernels(const BicoloredDigraph& g, const BicoloredDigraph& h, const VertexSet& bg,
                                   const VertexSet& bh) {
    if (auto v = find_violation(g, bg)) throw InputError("factor 1: not a bikernel (" + describe(g, *v) + ")");
    if (auto v = find_violation(h, bh)) throw InputError("factor 2: not a bikernel (" + describe(h, *v) + ")");
    const auto product = cartesian_product(g, h);
    auto b = detail::product_set(product, g, h, bg, bh);
    if (auto v = find_violation(product, b)) {
        throw InternalError("composed bikernel failed verification: " + describe(product, *v));
    }
    return b;
}

struct ProductVerdict {
    BicoloredDigraph product;
    BikernelVerdict verdict;
};

/// A product of directed paths has a bikernel iff every factor does.
inline ProductVerdict path_product_bikernel(std::span<const BicoloredDigraph> factors) {
    if (factors.empty()) throw InputError("path product needs at least one factor");
    std::vector<BikernelVerdict> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!std::holds_alternative<shape::DirectedPath>(detect_shape(factors[i]))) {
            throw InputError("factor " + std::to_string(i + 1) + " is not a directed path");
        }
        parts.push_back(path_bikernel(factors[i]));
    }
    BicoloredDigraph product = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) product = cartesian_product(product, factors[i]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i]) return {std::move(product), BikernelVerdict::none(reason::FactorWithoutBikernel{i + 1})};
    }

    BicoloredDigraph acc = factors[0];
    VertexSet b = parts[0].bikernel();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        auto next = cartesian_product(acc, factors[i]);
        b = detail::product_set(next, acc, factors[i], b, parts[i].bikernel());
        acc = std::move(next);
    }
    if (auto v = find_violation(product, b)) {
        throw InternalError("path product bikernel failed verification: " + describe(product, *v));
    }
    return {std::move(product), BikernelVerdict::found(std::move(b))};
}

inline ProductVerdict path_product_bikernel(std::initializer_list<BicoloredDigraph> factors) {
    std::vector<BicoloredDigraph> list(factors);
    return path_product_bikernel(std::span<const BicoloredDigraph>(list));
}

namespace detail {

inline std::optional<Color> single_color(const BicoloredDigraph& g) {
    if (g.count_arcs(Color::one) == g.arc_count()) return Color::one;
    if (g.count_arcs(Color::two) == g.arc_count()) return Color::two;
    return std::nullopt;
}

}  // namespace detail

/// C1 x C2 has a bikernel iff both cycles have one, or both are
/// monochromatic of equal length with opposite colors. In the second case
/// the bikernel is a cyclic diagonal {(x_i, y_{i+k})} for the smallest
/// shift k that verifies.
inline ProductVerdict cycle_product_bikernel(const BicoloredDigraph& c1, const BicoloredDigraph& c2) {
    const auto s1 = detect_shape(c1), s2 = detect_shape(c2);
    const auto* cyc1 = std::get_if<shape::DirectedCycle>(&s1);
    const auto* cyc2 = std::get_if<shape::DirectedCycle>(&s2);
    if (!cyc1) throw InputError("factor 1 is not a directed cycle");
    if (!cyc2) throw InputError("factor 2 is not a directed cycle");
    auto product = cartesian_product(c1, c2);

    const auto v1 = cycle_bikernel(c1), v2 = cycle_bikernel(c2);
    if (v1 && v2) {
        auto b = detail::product_set(product, c1, c2, v1.bikernel(), v2.bikernel());
        if (!is_bikernel(product, b)) throw InternalError("cycle product bikernel failed verification");
        return {std::move(product), BikernelVerdict::found(std::move(b))};
    }

    const auto col1 = detail::single_color(c1), col2 = detail::single_color(c2);
    const std::size_t n = cyc1->order.size();
    if (col1 && col2 && *col1 != *col2 && n == cyc2->order.size()) {
        const MonoClosure reach(product);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Vertex> members;
            for (std::size_t i = 0; i < n; ++i) {
                members.push_back(product.index_of(
                    product_vertex_name(c1.name(cyc1->order[i]), c2.name(cyc2->order[(i + k) % n]))));
            }
            VertexSet b(std::move(members));
            if (is_bikernel(product, reach, b)) return {std::move(product), BikernelVerdict::found(std::move(b))};
        }
        throw InternalError("no diagonal of the monochromatic cycle product verified");
    }
    return {std::move(product), BikernelVerdict::none(reason::CycleFactors{})};
}

}  // namespace bikernel
