#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcsum/chromatic.hpp"
#include "gcsum/extension.hpp"
#include "gcsum/graph.hpp"
#include "gcsum/matching.hpp"
#include "gcsum/patterns.hpp"
#include "gcsum/verify.hpp"

namespace gcsum {

using nlohmann::json;

// ---- edge-list text format --------------------------------------------------
// First non-comment line:  n <count>
// Then one edge per line:  u v          (0-indexed)
// '#' starts a comment anywhere on a line.

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<VertexPair> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        if (n < 0) {
            std::string tag;
            if (!(ss >> tag)) continue;  // blank line
            require(tag == "n", errc::parse_error,
                    "line " + std::to_string(lineno) + ": expected 'n <count>'");
            require(static_cast<bool>(ss >> n) && n >= 1, errc::parse_error,
                    "line " + std::to_string(lineno) + ": bad vertex count");
            continue;
        }
        int u, v;
        if (!(ss >> u)) continue;
        require(static_cast<bool>(ss >> v), errc::parse_error,
                "line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    require(n >= 1, errc::parse_error, "missing 'n <count>' header");
    return Graph(n, edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), errc::parse_error, "cannot open '" + path + "'");
    return read_edge_list(in);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// Undirected DOT for external visualization.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

// ---- JSON -------------------------------------------------------------------

inline void to_json(json& j, const Graph& g) {
    j = json{{"n", g.n()}, {"edges", g.edges()}};
}

inline void from_json(const json& j, Graph& g) {
    std::vector<VertexPair> edges = j.at("edges").get<std::vector<VertexPair>>();
    g = Graph(j.at("n").get<int>(), edges);
}

inline void to_json(json& j, const Matching& m) { j = m.pairs; }

inline void from_json(const json& j, Matching& m) {
    m = normalized_matching(j.get<std::vector<VertexPair>>());
}

inline void to_json(json& j, const Coloring& c) {
    j = json{{"k", c.k}, {"colors", c.colors}};
}

inline void from_json(const json& j, Coloring& c) {
    c.k = j.at("k").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
}

inline void to_json(json& j, const BipartitePartition& p) {
    j = json{{"X", p.X}, {"Y", p.Y}};
}

inline void from_json(const json& j, BipartitePartition& p) {
    p.X = j.at("X").get<std::vector<int>>();
    p.Y = j.at("Y").get<std::vector<int>>();
}

inline void to_json(json& j, const SumReport& r) {
    j = json{{"chi", r.chi},
             {"chi_sum_min", r.chi_sum_min},
             {"chi_sum_max", r.chi_sum_max},
             {"witness_min", r.witness_min},
             {"witness_max", r.witness_max},
             {"theta_min", theta(r.witness_min)},
             {"theta_max", theta(r.witness_max)}};
}

inline void to_json(json& j, const ExtensionSet& e) {
    j = json{{"base", e.base}, {"matchings", e.matchings}, {"iso_classes", e.iso_classes}};
}

inline void to_json(json& j, const ExtensionSumsReport::ClassRow& r) {
    j = json{{"representative", r.representative},
             {"members", r.members},
             {"chi", r.chi},
             {"chi_sum_min", r.chi_sum_min},
             {"chi_sum_max", r.chi_sum_max}};
}

inline void to_json(json& j, const ExtensionSumsReport& r) {
    j = json{{"chi_sum_min", r.chi_sum_min},
             {"chi_sum_max", r.chi_sum_max},
             {"min_extension", r.min_extension},
             {"max_extension", r.max_extension},
             {"witness_min", r.witness_min},
             {"witness_max", r.witness_max},
             {"per_class", r.per_class}};
}

inline void to_json(json& j, const VerifyRow& r) {
    j = json::object();
    j["instance"] = r.instance;
    if (r.chi) j["chi"] = *r.chi;
    if (r.exact_min) j["exact_min"] = *r.exact_min;
    if (r.paper_min) j["paper_min"] = *r.paper_min;
    if (r.exact_max) j["exact_max"] = *r.exact_max;
    if (r.paper_max) j["paper_max"] = *r.paper_max;
    j["status"] = r.status;
    if (!r.note.empty()) j["note"] = r.note;
}

inline void to_json(json& j, const VerifyReport& r) {
    j = json{{"theorem", r.theorem}, {"rows", r.rows}, {"mismatches", r.mismatches}};
}

// ---- composition specs --------------------------------------------------------
// {
//   "base": {"family": "cycle", "n": 5} | {"n": 4, "edges": [[0,1], ...]},
//   "elements": [
//     {"kind": "single"},
//     {"kind": "vertex"},
//     {"kind": "cloverlike", "copies": 3, "vertices": [0, 0, 2]},
//     {"kind": "booklike", "copies": 2, "edges": [[0,1],[2,3]], "flips": [false, true]},
//     {"kind": "gridlike", "copies": 2,
//      "merges": [{"a": 0, "edge_a": [0,1], "b": 1, "edge_b": [3,4], "flip": false}]}
//   ],
//   "joins": [{"from": 0, "from_vertex": 2, "to": 1, "to_vertex": 0, "path": 1}]
// }

inline Graph graph_from_json_or_family(const json& j) {
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        if (fam == "path") return path_graph(j.at("n").get<int>());
        if (fam == "cycle") return cycle_graph(j.at("n").get<int>());
        if (fam == "complete") return complete_graph(j.at("n").get<int>());
        if (fam == "complete_bipartite")
            return complete_bipartite_graph(j.at("r").get<int>(), j.at("s").get<int>());
        fail(errc::unknown_family, "unknown family '" + fam + "'");
    }
    return j.get<Graph>();
}

inline void from_json(const json& j, GridMerge& gm) {
    gm.copy_a = j.at("a").get<int>();
    gm.copy_b = j.at("b").get<int>();
    gm.edge_a = j.at("edge_a").get<VertexPair>();
    gm.edge_b = j.at("edge_b").get<VertexPair>();
    gm.flip = j.value("flip", false);
}

inline void to_json(json& j, const GridMerge& gm) {
    j = json{{"a", gm.copy_a}, {"edge_a", gm.edge_a}, {"b", gm.copy_b}, {"edge_b", gm.edge_b},
             {"flip", gm.flip}};
}

inline void from_json(const json& j, ElementSpec& e) {
    std::string kind = j.value("kind", "single");
    if (kind == "single") {
        e.kind = ElementSpec::Kind::single;
        e.copies = 1;
    } else if (kind == "vertex") {
        e.kind = ElementSpec::Kind::vertex;
        e.copies = 1;
    } else if (kind == "cloverlike") {
        e.kind = ElementSpec::Kind::cloverlike;
        e.copies = j.at("copies").get<int>();
        e.merge_vertices = j.at("vertices").get<std::vector<int>>();
    } else if (kind == "booklike") {
        e.kind = ElementSpec::Kind::booklike;
        e.copies = j.at("copies").get<int>();
        e.merge_edges = j.at("edges").get<std::vector<VertexPair>>();
        if (j.contains("flips")) e.flips = j.at("flips").get<std::vector<bool>>();
    } else if (kind == "gridlike") {
        e.kind = ElementSpec::Kind::gridlike;
        e.copies = j.at("copies").get<int>();
        e.merges = j.at("merges").get<std::vector<GridMerge>>();
    } else {
        fail(errc::malformed_spec, "unknown element kind '" + kind + "'");
    }
}

inline void to_json(json& j, const ElementSpec& e) {
    switch (e.kind) {
        case ElementSpec::Kind::single: j = json{{"kind", "single"}}; return;
        case ElementSpec::Kind::vertex: j = json{{"kind", "vertex"}}; return;
        case ElementSpec::Kind::cloverlike:
            j = json{{"kind", "cloverlike"}, {"copies", e.copies}, {"vertices", e.merge_vertices}};
            return;
        case ElementSpec::Kind::booklike:
            j = json{{"kind", "booklike"}, {"copies", e.copies}, {"edges", e.merge_edges}};
            if (!e.flips.empty()) j["flips"] = e.flips;
            return;
        case ElementSpec::Kind::gridlike:
            j = json{{"kind", "gridlike"}, {"copies", e.copies}, {"merges", e.merges}};
            return;
    }
}

inline void from_json(const json& j, JoinSpec& s) {
    s.from_element = j.at("from").get<int>();
    s.from_vertex = j.at("from_vertex").get<int>();
    s.to_element = j.at("to").get<int>();
    s.to_vertex = j.at("to_vertex").get<int>();
    s.interior = j.value("path", 0);
}

inline void to_json(json& j, const JoinSpec& s) {
    j = json{{"from", s.from_element},
             {"from_vertex", s.from_vertex},
             {"to", s.to_element},
             {"to_vertex", s.to_vertex},
             {"path", s.interior}};
}

inline void from_json(const json& j, CompositionSpec& spec) {
    spec.base = graph_from_json_or_family(j.at("base"));
    spec.elements = j.at("elements").get<std::vector<ElementSpec>>();
    if (j.contains("joins")) spec.joins = j.at("joins").get<std::vector<JoinSpec>>();
    spec.allow_cyclic = j.value("cyclic", false);
}

inline void to_json(json& j, const CompositionSpec& spec) {
    j = json{{"base", spec.base}, {"elements", spec.elements}, {"joins", spec.joins}};
    if (spec.allow_cyclic) j["cyclic"] = true;
}

inline CompositionSpec read_composition_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), errc::parse_error, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
        return j.get<CompositionSpec>();
    } catch (const json::exception& e) {
        fail(errc::parse_error, "bad composition spec: " + std::string(e.what()));
    }
}

}  // namespace gcsum
