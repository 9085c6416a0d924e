#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace bikernel::detail {

/// Strongly connected components (iterative Tarjan). Returns a component id
/// per vertex; ids are renumbered so that components are ordered by their
/// smallest vertex.
template <typename OutFn>
std::vector<std::size_t> strong_components(std::size_t n, OutFn&& out) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge position)
    std::size_t counter = 0, comp_count = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& succ = out(v);
            if (pos < succ.size()) {
                std::size_t w = succ[pos++];
                if (index[w] == unvisited) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
            std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }

    std::vector<std::size_t> rename(comp_count, unvisited);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (rename[comp[v]] == unvisited) rename[comp[v]] = next++;
        comp[v] = rename[comp[v]];
    }
    return comp;
}

}  // namespace bikernel::detail
