#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's closure, condensation and matching code.

#include <bikernel/digraph.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix multiply_or(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (b[k][j]) c[i][j] = true;
    return c;
}

// Reachability by nonempty paths of color c, by repeated squaring of
// (A + A^2 + ...).
inline Matrix reach(const bikernel::BicoloredDigraph& g, bikernel::Color c) {
    const std::size_t n = g.vertex_count();
    Matrix r(n, std::vector<bool>(n, false));
    for (const auto& a : g.arcs())
        if (a.color == c) r[a.tail][a.head] = true;
    for (std::size_t len = 1; len < n; len *= 2) {
        Matrix sq = multiply_or(r, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || sq[i][j];
    }
    return r;
}

struct Reach {
    Matrix one, two;
    explicit Reach(const bikernel::BicoloredDigraph& g)
        : one(reach(g, bikernel::Color::one)), two(reach(g, bikernel::Color::two)) {}
};

inline bool is_bikernel(const Reach& r, const std::vector<bool>& in) {
    const std::size_t n = in.size();
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) any = any || in[v];
    if (!any) return false;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && in[u] && in[v] && (r.one[u][v] || r.two[u][v])) return false;
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool absorbed = false, dominated = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (!in[b]) continue;
            absorbed = absorbed || r.one[v][b];
            dominated = dominated || r.two[b][v];
        }
        if (!absorbed || !dominated) return false;
    }
    return true;
}

inline bool is_bikernel(const bikernel::BicoloredDigraph& g, const bikernel::VertexSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : s) in[v] = true;
    return is_bikernel(Reach(g), in);
}

// Every bikernel, as sorted vertex lists, in increasing bitmask order.
inline std::vector<std::vector<std::size_t>> all_bikernels(const bikernel::BicoloredDigraph& g) {
    const std::size_t n = g.vertex_count();
    Reach r(g);
    std::vector<std::vector<std::size_t>> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> in(n);
        for (std::size_t v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
        if (!is_bikernel(r, in)) continue;
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v)
            if (in[v]) s.push_back(v);
        found.push_back(s);
    }
    return found;
}

inline std::vector<std::size_t> members(const bikernel::VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace oracle
