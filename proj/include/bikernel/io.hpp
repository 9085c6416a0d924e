#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"

namespace bikernel {

/// Statements of a graph file. Arc-free files read as either kind.
class ParsedGraph {
public:
    bool has_colored_arcs() const noexcept { return colored_.has_value() && *colored_; }
    bool has_uncolored_arcs() const noexcept { return colored_.has_value() && !*colored_; }

    BicoloredDigraph bicolored() const {
        if (has_uncolored_arcs()) throw InputError("expected a bicolored graph but arcs carry no color");
        return BicoloredDigraph(vertices_, colored_arcs_);
    }

    Digraph uncolored() const {
        if (has_colored_arcs()) throw InputError("expected an uncolored digraph but arcs carry colors");
        return Digraph(vertices_, plain_arcs_);
    }

private:
    friend ParsedGraph parse(std::string_view text);

    std::vector<std::string> vertices_;
    std::vector<NamedArc> colored_arcs_;
    std::vector<NamedPlainArc> plain_arcs_;
    std::optional<bool> colored_;
};

/// Nonempty, no whitespace or '#'; commas only between nonempty components
/// (product vertices render as "left,right").
inline bool is_valid_vertex_name(std::string_view name) {
    if (name.empty() || name.front() == ',' || name.back() == ',') return false;
    char prev = 0;
    for (char ch : name) {
        if (ch == '#' || static_cast<unsigned char>(ch) <= ' ' || ch == 0x7f) return false;
        if (ch == ',' && prev == ',') return false;
        prev = ch;
    }
    return true;
}

/// Line-oriented format: `vertex <name>`, `arc <tail> <head> <color>` (color 1
/// or 2) or `arc <tail> <head>`; '#' comments run to end of line. A file is
/// either uniformly colored or uniformly uncolored.
inline ParsedGraph parse(std::string_view text) {
    ParsedGraph g;
    std::vector<std::pair<std::string, std::string>> seen_plain;
    std::vector<std::tuple<std::string, std::string, Color>> seen_colored;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string> tok;
        std::istringstream in{std::string(line)};
        for (std::string t; in >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;

        auto check_name = [&](const std::string& name) {
            if (!is_valid_vertex_name(name)) throw ParseError(line_no, "illegal vertex name '" + name + "'");
        };
        if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: vertex <name>");
            check_name(tok[1]);
            g.vertices_.push_back(tok[1]);
        } else if (tok[0] == "arc") {
            if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected: arc <tail> <head> [color]");
            check_name(tok[1]);
            check_name(tok[2]);
            if (tok[1] == tok[2]) throw ParseError(line_no, "self-loop on vertex " + tok[1]);
            const bool colored = tok.size() == 4;
            if (g.colored_ && *g.colored_ != colored) throw ParseError(line_no, "mixed colored and uncolored arcs");
            g.colored_ = colored;
            g.vertices_.push_back(tok[1]);
            g.vertices_.push_back(tok[2]);
            if (colored) {
                if (tok[3] != "1" && tok[3] != "2") throw ParseError(line_no, "bad color '" + tok[3] + "' (expected 1 or 2)");
                Color c = tok[3] == "1" ? Color::one : Color::two;
                std::tuple<std::string, std::string, Color> key{tok[1], tok[2], c};
                if (std::find(seen_colored.begin(), seen_colored.end(), key) != seen_colored.end()) {
                    throw ParseError(line_no, "duplicate arc " + tok[1] + " " + tok[2] + " " + tok[3]);
                }
                seen_colored.push_back(key);
                g.colored_arcs_.push_back({tok[1], tok[2], c});
            } else {
                std::pair<std::string, std::string> key{tok[1], tok[2]};
                if (std::find(seen_plain.begin(), seen_plain.end(), key) != seen_plain.end()) {
                    throw ParseError(line_no, "duplicate arc " + tok[1] + " " + tok[2]);
                }
                seen_plain.push_back(key);
                g.plain_arcs_.push_back({tok[1], tok[2]});
            }
        } else {
            throw ParseError(line_no, "unknown statement '" + tok[0] + "'");
        }
    }
    return g;
}

inline BicoloredDigraph parse_bicolored(std::string_view text) { return parse(text).bicolored(); }
inline Digraph parse_digraph(std::string_view text) { return parse(text).uncolored(); }

/// Canonical form: header comment, every vertex, then arcs in sorted order.
inline std::string serialize(const BicoloredDigraph& g) {
    std::string out = "# bikernel graph: bicolored\n";
    for (const auto& n : g.names()) out += "vertex " + n + "\n";
    for (const auto& a : g.arcs()) out += "arc " + g.name(a.tail) + " " + g.name(a.head) + " " + to_string(a.color) + "\n";
    return out;
}

inline std::string serialize(const Digraph& d) {
    std::string out = "# bikernel graph: uncolored\n";
    for (const auto& n : d.names()) out += "vertex " + n + "\n";
    for (const auto& a : d.arcs()) out += "arc " + d.name(a.tail) + " " + d.name(a.head) + "\n";
    return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace detail

/// Graphviz rendering; color 1 arcs are blue, color 2 arcs red.
inline std::string to_dot(const BicoloredDigraph& g) {
    std::string out = "digraph G {\n";
    for (const auto& n : g.names()) out += "  " + detail::dot_quote(n) + ";\n";
    for (const auto& a : g.arcs()) {
        out += "  " + detail::dot_quote(g.name(a.tail)) + " -> " + detail::dot_quote(g.name(a.head)) +
               (a.color == Color::one ? " [color=blue];\n" : " [color=red];\n");
    }
    return out + "}\n";
}

inline std::string to_dot(const Digraph& d) {
    std::string out = "digraph G {\n";
    for (const auto& n : d.names()) out += "  " + detail::dot_quote(n) + ";\n";
    for (const auto& a : d.arcs()) out += "  " + detail::dot_quote(d.name(a.tail)) + " -> " + detail::dot_quote(d.name(a.head)) + ";\n";
    return out + "}\n";
}

}  // namespace bikernel
