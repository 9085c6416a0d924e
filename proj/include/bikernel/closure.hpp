#pragma once

#include <vector>

#include "digraph.hpp"

namespace bikernel {

/// Per-color reachability over paths of at least one arc. reach(c, u, u) holds
/// exactly when u lies on a color-c cycle.
class MonoClosure {
public:
    MonoClosure() = default;

    explicit MonoClosure(const BicoloredDigraph& g) : n_(g.vertex_count()) {
        for (Color c : kColors) {
            auto& rows = reach_[slot(c)];
            rows.assign(n_, std::vector<bool>(n_, false));
            std::vector<Vertex> stack;
            for (Vertex s = 0; s < n_; ++s) {
                auto& row = rows[s];
                stack.assign(g.out(c, s).begin(), g.out(c, s).end());
                while (!stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    if (row[x]) continue;
                    row[x] = true;
                    for (Vertex y : g.out(c, x)) {
                        if (!row[y]) stack.push_back(y);
                    }
                }
            }
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }

    bool reach(Color c, Vertex u, Vertex v) const { return reach_[slot(c)][u][v]; }

    const std::vector<bool>& row(Color c, Vertex u) const { return reach_[slot(c)][u]; }

    bool on_cycle(Color c, Vertex v) const { return reach(c, v, v); }

    bool has_cycle(Color c) const {
        for (Vertex v = 0; v < n_; ++v) {
            if (on_cycle(c, v)) return true;
        }
        return false;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<bool>> reach_[2];
};

inline MonoClosure mono_closure(const BicoloredDigraph& g) { return MonoClosure(g); }

}  // namespace bikernel
