#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bikernel.hpp"

namespace bikernel::cli {

struct Result {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr const char* kWitnessHelp = R"(Exit codes: 0 found / yes, 1 none / no, 2 error.

NONE reason codes (solve, family):
  empty_graph
  class_count_mismatch <|M1|> <|M2|>
  no_perfect_matching <class>...       classes of M1 named by smallest member
  adjacent_critical_pair <u> <v> <c>   a c-path links a 2-source u to a 1-sink v
  exhausted                            no subset is a bikernel
  long_run <start> <c> <length>
  even_order <n>
  sink_arc_color <tail> <sink>
  chord_placement <tail> <head> <c>
  regular22 <k1> <k2>                  unequal monochromatic cycle counts

check violations: empty_set | independence <u> <v> <c> | absorbency <v> | dominance <v>

NOT-BK-COLORABLE reasons: extreme_arc <u> <v> | no_star_assignment |
  not_strongly_connected <terminal component>... | exhausted
)";

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

inline std::string join_names(const BicoloredDigraph& g, const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + g.name(v);
    return out;
}

inline std::string verdict_line(const BicoloredDigraph& g, const BikernelVerdict& v) {
    return v ? "BIKERNEL " + join_names(g, v.bikernel()) : "NONE " + describe(g, v.reason());
}

/// Names may contain commas, so a comma list is resolved greedily, preferring
/// the longest run of tokens that names a vertex.
inline VertexSet resolve_set(const BicoloredDigraph& g, const std::string& list) {
    if (list.empty()) return {};
    std::vector<std::string> tok;
    std::stringstream s(list);
    for (std::string t; std::getline(s, t, ',');) tok.push_back(t);
    if (list.back() == ',') tok.push_back("");
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < tok.size();) {
        std::size_t take = 0;
        std::string name;
        for (std::size_t k = tok.size() - i; k >= 1 && take == 0; --k) {
            std::string cand = tok[i];
            for (std::size_t j = 1; j < k; ++j) cand += "," + tok[i + j];
            if (g.find(cand)) {
                take = k;
                name = cand;
            }
        }
        if (take == 0) throw InputError("unknown vertex '" + tok[i] + "'");
        members.push_back(g.index_of(name));
        i += take;
    }
    return VertexSet(members);
}

inline std::string class_text(const BicoloredDigraph& g, const VertexSet& s) { return "{" + join_names(g, s) + "}"; }

inline std::string shape_name(const FamilyShape& s) {
    if (std::holds_alternative<shape::DirectedPath>(s)) return "path";
    if (std::holds_alternative<shape::DirectedCycle>(s)) return "cycle";
    if (std::holds_alternative<shape::ChordedCycle>(s)) return "chorded-cycle";
    return "other";
}

}  // namespace detail

inline Result run(const std::vector<std::string>& args) {
    Result res;
    std::ostringstream out, err;

    CLI::App app{"Bikernels by monochromatic paths in bicolored digraphs", "bikernel"};
    app.footer(kWitnessHelp);
    app.require_subcommand(1);

    std::string file, file_b, method = "auto", set_list, out_path, kind, colors = "random";
    std::size_t cap = BruteOptions{}.max_vertices, n = 6, arcs = 0;
    std::uint64_t seed = 1;
    bool strong = false;

    auto* solve = app.add_subcommand("solve", "decide and construct a bikernel");
    solve->add_option("file", file, "graph file")->required();
    solve->add_option("--method", method, "auto|brute|classes|acyclic")
        ->check(CLI::IsMember({"auto", "brute", "classes", "acyclic"}));
    solve->add_option("--cap", cap, "vertex cap for brute force")->check(CLI::Range(std::size_t{0}, kBruteHardLimit));

    auto* check = app.add_subcommand("check", "verify a candidate set");
    check->add_option("file", file, "graph file")->required();
    check->add_option("--set", set_list, "comma-separated vertices")->required();

    auto* classes = app.add_subcommand("classes", "print cyclic classes and M1, M2");
    classes->add_option("file", file, "graph file")->required();

    auto* family = app.add_subcommand("family", "detect path/cycle/chorded cycle and apply its rule");
    family->add_option("file", file, "graph file")->required();

    auto* product = app.add_subcommand("product", "Cartesian product of two bicolored digraphs");
    product->add_option("a", file, "first factor")->required();
    product->add_option("b", file_b, "second factor")->required();
    product->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* bk = app.add_subcommand("bk-color", "color an acyclic digraph or tournament so that a bikernel exists");
    bk->add_option("file", file, "uncolored graph file")->required();

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("kind", kind, "path|cycle|chorded-cycle|tournament|random|mono-acyclic|dag|regular22")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "chorded-cycle", "tournament", "random", "mono-acyclic", "dag", "regular22"}));
    gen->add_option("-n,--vertices", n, "number of vertices")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    gen->add_option("--arcs", arcs, "arc count for random kinds (default 2n)");
    gen->add_option("--colors", colors, "random|alternating (path, cycle, chorded-cycle)")
        ->check(CLI::IsMember({"random", "alternating"}));
    gen->add_flag("--strong", strong, "tournament: resample until strongly connected");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* dot = app.add_subcommand("export-dot", "render a graph file as Graphviz DOT");
    dot->add_option("file", file, "graph file")->required();

    std::vector<std::string> argv_store{"bikernel"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        res.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    try {
        if (*solve) {
            auto g = parse_bicolored(detail::read_file(file));
            if (method == "auto") method = is_mono_acyclic(g) ? "acyclic" : "classes";
            BikernelVerdict v = method == "brute"     ? solve_brute(g, BruteOptions{cap})
                                : method == "classes" ? solve_classes(g)
                                                      : solve_acyclic(g);
            out << detail::verdict_line(g, v) << "\n";
            res.exit_code = v ? 0 : 1;
        } else if (*check) {
            auto g = parse_bicolored(detail::read_file(file));
            auto v = find_violation(g, detail::resolve_set(g, set_list));
            out << (v ? "NO " + describe(g, *v) : std::string("YES")) << "\n";
            res.exit_code = v ? 1 : 0;
        } else if (*classes) {
            auto g = parse_bicolored(detail::read_file(file));
            auto s = class_structure(g);
            for (const Condensation* c : {&s.one, &s.two}) {
                out << "CLASSES " << to_string(c->color);
                for (const auto& cls : c->classes) out << " " << detail::class_text(g, cls);
                out << "\n";
            }
            out << "M1";
            for (std::size_t i = 0; i < s.m1.size(); ++i) out << " " << detail::class_text(g, s.left_class(i));
            out << "\nM2";
            for (std::size_t j = 0; j < s.m2.size(); ++j) out << " " << detail::class_text(g, s.right_class(j));
            out << "\n";
        } else if (*family) {
            auto g = parse_bicolored(detail::read_file(file));
            auto s = detect_shape(g);
            out << "SHAPE " << detail::shape_name(s) << "\n";
            std::optional<BikernelVerdict> v;
            if (std::holds_alternative<shape::DirectedPath>(s)) v = path_bikernel(g);
            if (std::holds_alternative<shape::DirectedCycle>(s)) v = cycle_bikernel(g);
            if (std::holds_alternative<shape::ChordedCycle>(s)) v = chorded_cycle_bikernel(g);
            if (v) {
                out << detail::verdict_line(g, *v) << "\n";
                res.exit_code = *v ? 0 : 1;
            }
            if (is_regular22(g)) {
                auto r = regular22_necessary(g);
                if (r.fails()) {
                    out << "NONE regular22 " << r.cycles_one << " " << r.cycles_two << "\n";
                    res.exit_code = 1;
                } else {
                    out << "REGULAR22 " << r.cycles_one << " " << r.cycles_two << " inconclusive\n";
                }
            }
        } else if (*product) {
            auto p = cartesian_product(parse_bicolored(detail::read_file(file)), parse_bicolored(detail::read_file(file_b)));
            if (out_path.empty()) {
                out << serialize(p);
            } else {
                detail::write_file(out_path, serialize(p));
                out << "PRODUCT " << p.vertex_count() << " vertices " << p.arc_count() << " arcs\n";
            }
        } else if (*bk) {
            auto d = parse_digraph(detail::read_file(file));
            std::optional<ColoringResult> r;
            if (is_tournament(d)) {
                r = color_tournament(d);
            } else if (is_acyclic(d)) {
                r = color_acyclic(d);
            } else {
                throw RefusalError("bk-color handles acyclic digraphs and tournaments only");
            }
            if (*r) {
                const auto& c = r->result();
                for (const auto& a : c.graph.arcs()) {
                    out << "arc " << c.graph.name(a.tail) << " " << c.graph.name(a.head) << " " << to_string(a.color) << "\n";
                }
                out << "BIKERNEL " << detail::join_names(c.graph, c.bikernel) << "\n";
            } else {
                out << "NOT-BK-COLORABLE " << describe(d, r->reason()) << "\n";
                res.exit_code = 1;
            }
        } else if (*gen) {
            Rng rng(seed);
            const std::size_t m = arcs ? arcs : 2 * n;
            auto pick = [&](std::size_t count) {
                return colors == "alternating" ? alternating_colors(count) : random_colors(count, rng);
            };
            std::string text;
            if (kind == "path") {
                text = serialize(make_path(pick(n - 1)));
            } else if (kind == "cycle" || kind == "chorded-cycle") {
                if (n < 3) throw InputError("cycles need at least 3 vertices");
                if (kind == "cycle") {
                    text = serialize(make_cycle(pick(n)));
                } else {
                    auto base = pick(n);
                    std::size_t tail, head;
                    do {
                        tail = rng.below(n);
                        head = rng.below(n);
                    } while (tail == head || head == (tail + 1) % n);
                    text = serialize(make_chorded_cycle(base, tail, head, rng.color()));
                }
            } else if (kind == "tournament") {
                if (strong && n == 2) throw InputError("no strong tournament on 2 vertices");
                auto t = random_tournament(n, rng);
                while (strong && !is_strongly_connected(t)) t = random_tournament(n, rng);
                text = serialize(t);
            } else if (kind == "random") {
                text = serialize(random_bicolored(n, m, rng));
            } else if (kind == "mono-acyclic") {
                text = serialize(random_mono_acyclic(n, m, rng));
            } else if (kind == "dag") {
                text = serialize(random_dag(n, m, rng));
            } else {
                text = serialize(random_regular22(n, rng));
            }
            if (out_path.empty()) {
                out << text;
            } else {
                detail::write_file(out_path, text);
            }
        } else if (*dot) {
            auto parsed = parse(detail::read_file(file));
            out << (parsed.has_uncolored_arcs() ? to_dot(parsed.uncolored()) : to_dot(parsed.bicolored()));
        }
    } catch (const std::exception& e) {
        out.str("");
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace bikernel::cli
