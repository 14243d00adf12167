// graph_io.hpp - DIMACS-flavored graph files: "p <n> <m>" header, "e <u> <v>
// <w>" edge lines, "c ..." comments. Weights are mandatory; serialization is
// canonical (edges sorted by (min, max), one direction stored).
#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "logpath/graph.hpp"

namespace logpath {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Graph parse_graph_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Vertex n = 0;
    std::int64_t m = 0;
    std::vector<EdgeSpec> edges;

    auto fail = [&](const std::string& what) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header, expected 'p <n> <m>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) fail("edge line before header");
            EdgeSpec e;
            if (!(ls >> e.u >> e.v >> e.weight)) fail("malformed edge, expected 'e <u> <v> <w>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after edge");
            edges.push_back(e);
            continue;
        }
        fail("unknown line tag '" + tag + "'");
    }
    if (!have_header) throw ParseError("missing 'p <n> <m>' header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " edge lines were found");
    try {
        return Graph::build(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline Graph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

inline void write_graph_file(const Graph& g, std::ostream& out) {
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (Vertex u = 1; u <= g.order(); ++u)
        for (const Edge& e : g.neighbors(u))
            if (u < e.to) out << "e " << u << ' ' << e.to << ' ' << e.weight << '\n';
}

inline std::string write_graph_file(const Graph& g) {
    std::ostringstream out;
    write_graph_file(g, out);
    return out.str();
}

}  // namespace logpath
