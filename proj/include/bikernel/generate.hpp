#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace bikernel {

/// Seeded source of randomness. The raw engine is std::mt19937_64, whose
/// output sequence the standard fixes; bounded draws use rejection sampling
/// so results do not depend on the library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw InputError("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    bool coin() { return next() >> 63; }
    Color color() { return coin() ? Color::two : Color::one; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

/// "v" + index, zero-padded so that name order equals index order.
inline std::string vertex_label(std::size_t i, std::size_t n) {
    std::string digits = std::to_string(i);
    const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
    return "v" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

inline std::vector<std::string> vertex_labels(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_label(i, n));
    return names;
}

/// v0 -> v1 -> ... with colors[i] on arc i.
inline BicoloredDigraph make_path(const std::vector<Color>& colors) {
    const std::size_t n = colors.size() + 1;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1, colors[i]});
    return BicoloredDigraph::from_indexed(vertex_labels(n), arcs);
}

/// v0 -> v1 -> ... -> v{n-1} -> v0 with colors[i] on the arc leaving v_i.
inline BicoloredDigraph make_cycle(const std::vector<Color>& colors) {
    const std::size_t n = colors.size();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, colors[i]});
    return BicoloredDigraph::from_indexed(vertex_labels(n), arcs);
}

inline BicoloredDigraph make_chorded_cycle(const std::vector<Color>& colors, std::size_t tail, std::size_t head, Color c) {
    const std::size_t n = colors.size();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, colors[i]});
    arcs.push_back({tail, head, c});
    return BicoloredDigraph::from_indexed(vertex_labels(n), arcs);
}

inline BicoloredDigraph monochromatic_cycle(std::size_t n, Color c) { return make_cycle(std::vector<Color>(n, c)); }

/// Staircase on vertices "ij", 1 <= i < j <= k: color-2 arcs ij -> i(j+1),
/// color-1 arcs ij -> (i+1)j. Its bikernel is the diagonal 12, 23, ...
inline BicoloredDigraph staircase(std::size_t k = 6) {
    auto label = [k](std::size_t i, std::size_t j) {
        return k <= 9 ? std::to_string(i) + std::to_string(j) : std::to_string(i) + "_" + std::to_string(j);
    };
    std::vector<NamedArc> arcs;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = i + 1; j <= k; ++j) {
            names.push_back(label(i, j));
            if (j + 1 <= k) arcs.push_back({label(i, j), label(i, j + 1), Color::two});
            if (i + 1 < j) arcs.push_back({label(i, j), label(i + 1, j), Color::one});
        }
    }
    return BicoloredDigraph(names, arcs);
}

inline std::vector<Color> random_colors(std::size_t count, Rng& rng) {
    std::vector<Color> c(count);
    for (auto& x : c) x = rng.color();
    return c;
}

inline std::vector<Color> alternating_colors(std::size_t count, Color first = Color::one) {
    std::vector<Color> c(count);
    for (std::size_t i = 0; i < count; ++i) c[i] = i % 2 == 0 ? first : other(first);
    return c;
}

/// Random chord: any ordered pair that is not a cycle arc.
inline BicoloredDigraph random_chorded_cycle(std::size_t n, Rng& rng) {
    if (n < 3) throw InputError("chorded cycle needs at least 3 vertices");
    std::size_t tail, head;
    do {
        tail = rng.below(n);
        head = rng.below(n);
    } while (tail == head || head == (tail + 1) % n);
    return make_chorded_cycle(random_colors(n, rng), tail, head, rng.color());
}

/// `arc_count` distinct colored arcs chosen uniformly among all n(n-1)*2.
inline BicoloredDigraph random_bicolored(std::size_t n, std::size_t arc_count, Rng& rng) {
    std::vector<Arc> all;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v) {
                all.push_back({u, v, Color::one});
                all.push_back({u, v, Color::two});
            }
        }
    }
    rng.shuffle(all);
    all.resize(std::min(arc_count, all.size()));
    return BicoloredDigraph::from_indexed(vertex_labels(n), all);
}

/// Random arcs where each color follows its own random vertex order, so
/// neither color subgraph has a cycle (the union may).
inline BicoloredDigraph random_mono_acyclic(std::size_t n, std::size_t arc_count, Rng& rng) {
    const auto rank_one = rng.permutation(n), rank_two = rng.permutation(n);
    std::vector<Arc> all;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rank_one[u] < rank_one[v]) all.push_back({u, v, Color::one});
            if (rank_two[u] < rank_two[v]) all.push_back({u, v, Color::two});
        }
    }
    rng.shuffle(all);
    all.resize(std::min(arc_count, all.size()));
    return BicoloredDigraph::from_indexed(vertex_labels(n), all);
}

inline Digraph random_dag(std::size_t n, std::size_t arc_count, Rng& rng) {
    const auto rank = rng.permutation(n);
    std::vector<PlainArc> all;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && rank[u] < rank[v]) all.push_back({u, v});
        }
    }
    rng.shuffle(all);
    all.resize(std::min(arc_count, all.size()));
    return Digraph::from_indexed(vertex_labels(n), all);
}

inline Digraph random_tournament(std::size_t n, Rng& rng) {
    std::vector<PlainArc> arcs;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) arcs.push_back(rng.coin() ? PlainArc{u, v} : PlainArc{v, u});
    }
    return Digraph::from_indexed(vertex_labels(n), arcs);
}

/// Each color is a random fixed-point-free permutation, so every vertex has
/// exactly one in-arc and one out-arc of each color.
inline BicoloredDigraph random_regular22(std::size_t n, Rng& rng) {
    if (n < 2) throw InputError("(2,2)-regular graphs need at least 2 vertices");
    auto derangement = [&] {
        while (true) {
            auto p = rng.permutation(n);
            bool fixed = false;
            for (std::size_t i = 0; i < n; ++i) fixed = fixed || p[i] == i;
            if (!fixed) return p;
        }
    };
    std::vector<Arc> arcs;
    for (Color c : kColors) {
        auto p = derangement();
        for (std::size_t i = 0; i < n; ++i) arcs.push_back({i, p[i], c});
    }
    return BicoloredDigraph::from_indexed(vertex_labels(n), arcs);
}

}  // namespace bikernel
