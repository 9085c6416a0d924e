#pragma once

#include <string>
#include <variant>
#include <vector>

#include "digraph.hpp"

namespace bikernel {

/// Why a graph has no bikernel. Witness vertices index the graph the verdict
/// was computed for.
namespace reason {
struct EmptyGraph {
    bool operator==(const EmptyGraph&) const = default;
};
/// |M1| != |M2|: maximal color-1 classes vs minimal color-2 classes.
struct ClassCountMismatch {
    std::size_t maximal_one;
    std::size_t minimal_two;
    bool operator==(const ClassCountMismatch&) const = default;
};
/// Maximal color-1 classes W whose intersecting minimal color-2 classes
/// number fewer than |W|.
struct NoPerfectMatching {
    std::vector<VertexSet> hall_witness;
    bool operator==(const NoPerfectMatching&) const = default;
};
/// Two critical vertices joined by a monochromatic path from -> to.
struct AdjacentCriticalPair {
    Vertex from;
    Vertex to;
    Color color;
    bool operator==(const AdjacentCriticalPair&) const = default;
};
struct Exhausted {
    bool operator==(const Exhausted&) const = default;
};
/// A run of `length` >= 2 equally colored arcs starting at `start`.
struct LongRun {
    Vertex start;
    Color color;
    std::size_t length;
    bool operator==(const LongRun&) const = default;
};
struct EvenOrder {
    std::size_t order;
    bool operator==(const EvenOrder&) const = default;
};
/// The arc into the sink of a path has color 2.
struct SinkArcColor {
    Vertex tail;
    Vertex sink;
    bool operator==(const SinkArcColor&) const = default;
};
struct ChordPlacement {
    Vertex tail;
    Vertex head;
    Color color;
    bool operator==(const ChordPlacement&) const = default;
};
/// 1-based index of the first product factor lacking a bikernel.
struct FactorWithoutBikernel {
    std::size_t factor;
    bool operator==(const FactorWithoutBikernel&) const = default;
};
/// Cycle factors are neither both bikernel-bearing nor monochromatic of equal
/// length and opposite colors.
struct CycleFactors {
    bool operator==(const CycleFactors&) const = default;
};
}  // namespace reason

using Reason = std::variant<reason::EmptyGraph, reason::ClassCountMismatch, reason::NoPerfectMatching,
                            reason::AdjacentCriticalPair, reason::Exhausted, reason::LongRun, reason::EvenOrder,
                            reason::SinkArcColor, reason::ChordPlacement, reason::FactorWithoutBikernel,
                            reason::CycleFactors>;

class BikernelVerdict {
public:
    static BikernelVerdict found(VertexSet b) { return BikernelVerdict(std::move(b)); }
    static BikernelVerdict none(Reason r) { return BikernelVerdict(std::move(r)); }

    bool has_bikernel() const noexcept { return std::holds_alternative<VertexSet>(value_); }
    explicit operator bool() const noexcept { return has_bikernel(); }

    const VertexSet& bikernel() const { return std::get<VertexSet>(value_); }
    const Reason& reason() const { return std::get<Reason>(value_); }

private:
    explicit BikernelVerdict(VertexSet b) : value_(std::move(b)) {}
    explicit BikernelVerdict(Reason r) : value_(std::move(r)) {}

    std::variant<VertexSet, Reason> value_;
};

/// Reason code followed by witness tokens, e.g. "class_count_mismatch 1 2".
/// Classes in a Hall witness are rendered by their smallest member.
template <typename Graph>
std::string describe(const Graph& g, const Reason& r) {
    struct Visitor {
        const Graph& g;
        std::string operator()(const reason::EmptyGraph&) const { return "empty_graph"; }
        std::string operator()(const reason::ClassCountMismatch& m) const {
            return "class_count_mismatch " + std::to_string(m.maximal_one) + " " + std::to_string(m.minimal_two);
        }
        std::string operator()(const reason::NoPerfectMatching& m) const {
            std::string s = "no_perfect_matching";
            for (const auto& cls : m.hall_witness) s += " " + g.name(*cls.begin());
            return s;
        }
        std::string operator()(const reason::AdjacentCriticalPair& p) const {
            return "adjacent_critical_pair " + g.name(p.from) + " " + g.name(p.to) + " " + to_string(p.color);
        }
        std::string operator()(const reason::Exhausted&) const { return "exhausted"; }
        std::string operator()(const reason::LongRun& r) const {
            return "long_run " + g.name(r.start) + " " + to_string(r.color) + " " + std::to_string(r.length);
        }
        std::string operator()(const reason::EvenOrder& e) const { return "even_order " + std::to_string(e.order); }
        std::string operator()(const reason::SinkArcColor& s) const {
            return "sink_arc_color " + g.name(s.tail) + " " + g.name(s.sink);
        }
        std::string operator()(const reason::ChordPlacement& c) const {
            return "chord_placement " + g.name(c.tail) + " " + g.name(c.head) + " " + to_string(c.color);
        }
        std::string operator()(const reason::FactorWithoutBikernel& f) const {
            return "factor_without_bikernel " + std::to_string(f.factor);
        }
        std::string operator()(const reason::CycleFactors&) const { return "cycle_factors"; }
    };
    return std::visit(Visitor{g}, r);
}

}  // namespace bikernel
