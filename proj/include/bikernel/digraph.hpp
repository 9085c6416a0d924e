#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "color.hpp"
#include "errors.hpp"

namespace bikernel {

/// Index of a vertex in its graph. Indices follow the lexicographic order of
/// vertex names, so index order is name order.
using Vertex = std::size_t;

struct Arc {
    Vertex tail;
    Vertex head;
    Color color;

    auto operator<=>(const Arc&) const = default;
};

struct PlainArc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const PlainArc&) const = default;
};

struct NamedArc {
    std::string tail;
    std::string head;
    Color color;
};

struct NamedPlainArc {
    std::string tail;
    std::string head;
};

namespace detail {

class VertexTable {
public:
    VertexTable() = default;

    explicit VertexTable(std::vector<std::string> names) : names_(std::move(names)) {
        std::sort(names_.begin(), names_.end());
        names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
        for (const auto& n : names_) {
            if (n.empty()) throw InputError("vertex names must be nonempty");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Vertex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<Vertex> find(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return std::nullopt;
        return static_cast<Vertex>(it - names_.begin());
    }

    Vertex index_of(std::string_view name) const {
        if (auto v = find(name)) return *v;
        throw InputError("unknown vertex '" + std::string(name) + "'");
    }

    void check(Vertex v) const {
        if (v >= names_.size()) throw InputError("vertex index " + std::to_string(v) + " out of range");
    }

    bool operator==(const VertexTable&) const = default;

private:
    std::vector<std::string> names_;
};

// Maps indices into an arbitrary-order name list onto sorted indices.
inline std::vector<Vertex> remap_to_sorted(const std::vector<std::string>& names, const VertexTable& table) {
    std::vector<Vertex> map(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) map[i] = table.index_of(names[i]);
    return map;
}

}  // namespace detail

/// Finite loop-free digraph whose arcs carry color 1 or 2. A pair of vertices
/// may be joined in the same direction by one arc of each color.
class BicoloredDigraph {
public:
    BicoloredDigraph() = default;

    /// Every arc endpoint must appear in `vertices`.
    BicoloredDigraph(std::vector<std::string> vertices, const std::vector<NamedArc>& arcs)
        : table_(std::move(vertices)) {
        std::vector<Arc> indexed;
        indexed.reserve(arcs.size());
        for (const auto& a : arcs) {
            auto t = table_.find(a.tail);
            auto h = table_.find(a.head);
            if (!t || !h) {
                throw InputError("arc " + a.tail + " -> " + a.head + " uses an undeclared vertex");
            }
            indexed.push_back({*t, *h, a.color});
        }
        init(std::move(indexed));
    }

    /// Declares arc endpoints implicitly; `extra` adds isolated vertices.
    static BicoloredDigraph from_arcs(const std::vector<NamedArc>& arcs, std::vector<std::string> extra = {}) {
        for (const auto& a : arcs) {
            extra.push_back(a.tail);
            extra.push_back(a.head);
        }
        return BicoloredDigraph(std::move(extra), arcs);
    }

    /// Arcs index into `names` as given (not necessarily sorted).
    static BicoloredDigraph from_indexed(const std::vector<std::string>& names, const std::vector<Arc>& arcs) {
        BicoloredDigraph g;
        g.table_ = detail::VertexTable(names);
        if (g.table_.size() != names.size()) throw InputError("duplicate vertex name");
        auto map = detail::remap_to_sorted(names, g.table_);
        std::vector<Arc> indexed;
        indexed.reserve(arcs.size());
        for (const auto& a : arcs) {
            if (a.tail >= names.size() || a.head >= names.size()) throw InputError("arc endpoint out of range");
            indexed.push_back({map[a.tail], map[a.head], a.color});
        }
        g.init(std::move(indexed));
        return g;
    }

    std::size_t vertex_count() const noexcept { return table_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return table_.size() == 0; }

    const std::string& name(Vertex v) const { return table_.name(v); }
    const std::vector<std::string>& names() const noexcept { return table_.names(); }
    std::optional<Vertex> find(std::string_view name) const { return table_.find(name); }
    Vertex index_of(std::string_view name) const { return table_.index_of(name); }
    void check_vertex(Vertex v) const { table_.check(v); }

    /// Sorted by (tail, head, color).
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Heads of color-`c` arcs leaving `v`, ascending.
    const std::vector<Vertex>& out(Color c, Vertex v) const { return out_[slot(c)].at(v); }
    /// Tails of color-`c` arcs entering `v`, ascending.
    const std::vector<Vertex>& in(Color c, Vertex v) const { return in_[slot(c)].at(v); }

    bool has_arc(Vertex tail, Vertex head, Color c) const {
        const auto& o = out(c, tail);
        return std::binary_search(o.begin(), o.end(), head);
    }

    std::size_t count_arcs(Color c) const {
        return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(),
                                                      [c](const Arc& a) { return a.color == c; }));
    }

    bool operator==(const BicoloredDigraph& o) const { return table_ == o.table_ && arcs_ == o.arcs_; }

private:
    void init(std::vector<Arc> arcs) {
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto& a = arcs[i];
            if (a.tail == a.head) throw InputError("self-loop on vertex " + table_.name(a.tail));
            if (i > 0 && arcs[i - 1] == a) {
                throw InputError("duplicate arc " + table_.name(a.tail) + " -> " + table_.name(a.head) +
                                 " color " + to_string(a.color));
            }
        }
        arcs_ = std::move(arcs);
        for (auto& side : out_) side.assign(table_.size(), {});
        for (auto& side : in_) side.assign(table_.size(), {});
        for (const auto& a : arcs_) {
            out_[slot(a.color)][a.tail].push_back(a.head);
            in_[slot(a.color)][a.head].push_back(a.tail);
        }
        for (auto& side : in_) {
            for (auto& list : side) std::sort(list.begin(), list.end());
        }
    }

    detail::VertexTable table_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_[2];
    std::vector<std::vector<Vertex>> in_[2];
};

/// Uncolored loop-free digraph without parallel arcs; input to BK-coloring.
class Digraph {
public:
    Digraph() = default;

    Digraph(std::vector<std::string> vertices, const std::vector<NamedPlainArc>& arcs) : table_(std::move(vertices)) {
        std::vector<PlainArc> indexed;
        indexed.reserve(arcs.size());
        for (const auto& a : arcs) {
            auto t = table_.find(a.tail);
            auto h = table_.find(a.head);
            if (!t || !h) {
                throw InputError("arc " + a.tail + " -> " + a.head + " uses an undeclared vertex");
            }
            indexed.push_back({*t, *h});
        }
        init(std::move(indexed));
    }

    static Digraph from_arcs(const std::vector<NamedPlainArc>& arcs, std::vector<std::string> extra = {}) {
        for (const auto& a : arcs) {
            extra.push_back(a.tail);
            extra.push_back(a.head);
        }
        return Digraph(std::move(extra), arcs);
    }

    static Digraph from_indexed(const std::vector<std::string>& names, const std::vector<PlainArc>& arcs) {
        Digraph d;
        d.table_ = detail::VertexTable(names);
        if (d.table_.size() != names.size()) throw InputError("duplicate vertex name");
        auto map = detail::remap_to_sorted(names, d.table_);
        std::vector<PlainArc> indexed;
        indexed.reserve(arcs.size());
        for (const auto& a : arcs) {
            if (a.tail >= names.size() || a.head >= names.size()) throw InputError("arc endpoint out of range");
            indexed.push_back({map[a.tail], map[a.head]});
        }
        d.init(std::move(indexed));
        return d;
    }

    std::size_t vertex_count() const noexcept { return table_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    const std::string& name(Vertex v) const { return table_.name(v); }
    const std::vector<std::string>& names() const noexcept { return table_.names(); }
    std::optional<Vertex> find(std::string_view name) const { return table_.find(name); }
    Vertex index_of(std::string_view name) const { return table_.index_of(name); }

    const std::vector<PlainArc>& arcs() const noexcept { return arcs_; }
    const std::vector<Vertex>& out(Vertex v) const { return out_.at(v); }
    const std::vector<Vertex>& in(Vertex v) const { return in_.at(v); }

    bool has_arc(Vertex tail, Vertex head) const {
        const auto& o = out(tail);
        return std::binary_search(o.begin(), o.end(), head);
    }

    /// Position of (tail, head) in arcs(), if present.
    std::optional<std::size_t> arc_index(Vertex tail, Vertex head) const {
        PlainArc key{tail, head};
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
        if (it == arcs_.end() || *it != key) return std::nullopt;
        return static_cast<std::size_t>(it - arcs_.begin());
    }

    bool operator==(const Digraph& o) const { return table_ == o.table_ && arcs_ == o.arcs_; }

private:
    void init(std::vector<PlainArc> arcs) {
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto& a = arcs[i];
            if (a.tail == a.head) throw InputError("self-loop on vertex " + table_.name(a.tail));
            if (i > 0 && arcs[i - 1] == a) {
                throw InputError("duplicate arc " + table_.name(a.tail) + " -> " + table_.name(a.head));
            }
        }
        arcs_ = std::move(arcs);
        out_.assign(table_.size(), {});
        in_.assign(table_.size(), {});
        for (const auto& a : arcs_) {
            out_[a.tail].push_back(a.head);
            in_[a.head].push_back(a.tail);
        }
        for (auto& list : in_) std::sort(list.begin(), list.end());
    }

    detail::VertexTable table_;
    std::vector<PlainArc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Applies `coloring` (aligned with d.arcs()) to an uncolored digraph.
inline BicoloredDigraph apply_coloring(const Digraph& d, const std::vector<Color>& coloring) {
    if (coloring.size() != d.arc_count()) throw InputError("coloring size does not match arc count");
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (std::size_t i = 0; i < d.arc_count(); ++i) arcs.push_back({d.arcs()[i].tail, d.arcs()[i].head, coloring[i]});
    return BicoloredDigraph::from_indexed(d.names(), arcs);
}

/// Sorted set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    template <typename Graph>
    static VertexSet from_names(const Graph& g, const std::vector<std::string>& names) {
        std::vector<Vertex> members;
        members.reserve(names.size());
        for (const auto& n : names) members.push_back(g.index_of(n));
        return VertexSet(std::move(members));
    }

    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Vertex>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    template <typename Graph>
    std::vector<std::string> names(const Graph& g) const {
        std::vector<std::string> out;
        out.reserve(members_.size());
        for (Vertex v : members_) out.push_back(g.name(v));
        return out;
    }

    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

}  // namespace bikernel
