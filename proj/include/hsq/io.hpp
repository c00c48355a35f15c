#pragma once

// Serialization.  Text format:
//
//   # comment
//   graph <n>          |  bigraph <nx> <ny>
//   u v                |  x y          (one edge per line, 0-based)
//
// JSON mirrors: {"n": n, "edges": [[u,v],...]} and
// {"nx": nx, "ny": ny, "edges": [[x,y],...]}.  DOT export is best-effort
// output only.  All emitters are byte-for-byte deterministic.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hsq/error.hpp"
#include "hsq/graph.hpp"

namespace hsq {

using json = nlohmann::ordered_json;

namespace detail {

// Strips comments and blank lines, returns data lines.
inline std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

} // namespace detail

// ---- text ----------------------------------------------------------------

inline Graph read_graph_text(std::istream& in) {
    auto lines = detail::data_lines(in);
    require(!lines.empty(), E_PARSE, "empty graph file");
    std::istringstream head(lines[0]);
    std::string kw;
    int n = -1;
    head >> kw >> n;
    require(!head.fail() && kw == "graph" && n >= 0, E_PARSE,
            "expected header 'graph <n>'");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        int u, v;
        ls >> u >> v;
        std::string extra;
        require(!ls.fail() && !(ls >> extra), E_PARSE, "bad edge line: " + lines[i]);
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const error& e) {
        throw error(E_PARSE, e.what());
    }
}

inline BipartiteGraph read_bigraph_text(std::istream& in) {
    auto lines = detail::data_lines(in);
    require(!lines.empty(), E_PARSE, "empty bigraph file");
    std::istringstream head(lines[0]);
    std::string kw;
    int nx = -1, ny = -1;
    head >> kw >> nx >> ny;
    require(!head.fail() && kw == "bigraph" && nx >= 0 && ny >= 0, E_PARSE,
            "expected header 'bigraph <nx> <ny>'");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        int x, y;
        ls >> x >> y;
        std::string extra;
        require(!ls.fail() && !(ls >> extra), E_PARSE, "bad edge line: " + lines[i]);
        edges.emplace_back(x, y);
    }
    try {
        return BipartiteGraph(nx, ny, std::move(edges));
    } catch (const error& e) {
        throw error(E_PARSE, e.what());
    }
}

inline void write_graph_text(std::ostream& out, const Graph& g) {
    out << "graph " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_bigraph_text(std::ostream& out, const BipartiteGraph& b) {
    out << "bigraph " << b.nx() << " " << b.ny() << "\n";
    for (auto [x, y] : b.edges()) out << x << " " << y << "\n";
}

// ---- json ----------------------------------------------------------------

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline json bigraph_to_json(const BipartiteGraph& b) {
    json j;
    j["nx"] = b.nx();
    j["ny"] = b.ny();
    j["edges"] = json::array();
    for (auto [x, y] : b.edges()) j["edges"].push_back({x, y});
    return j;
}

inline Graph graph_from_json(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("edges"), E_PARSE,
            "graph json: need keys n, edges");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        require(e.is_array() && e.size() == 2, E_PARSE, "graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(j.at("n").get<int>(), std::move(edges));
    } catch (const error& e) {
        throw error(E_PARSE, e.what());
    }
}

inline BipartiteGraph bigraph_from_json(const json& j) {
    require(j.is_object() && j.contains("nx") && j.contains("ny") && j.contains("edges"),
            E_PARSE, "bigraph json: need keys nx, ny, edges");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        require(e.is_array() && e.size() == 2, E_PARSE, "bigraph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return BipartiteGraph(j.at("nx").get<int>(), j.at("ny").get<int>(), std::move(edges));
    } catch (const error& e) {
        throw error(E_PARSE, e.what());
    }
}

inline Graph read_graph_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(E_PARSE, e.what());
    }
    return graph_from_json(j);
}

inline BipartiteGraph read_bigraph_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error(E_PARSE, e.what());
    }
    return bigraph_from_json(j);
}

// ---- dot -----------------------------------------------------------------

inline void write_graph_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  v" << v;
        if (v < static_cast<int>(g.labels.size()) && !g.labels[v].empty())
            out << " [label=\"" << g.labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
}

inline void write_bigraph_dot(std::ostream& out, const BipartiteGraph& b) {
    out << "graph B {\n";
    for (int x = 0; x < b.nx(); ++x) {
        out << "  x" << x << " [shape=circle";
        if (x < static_cast<int>(b.labels_x.size()) && !b.labels_x[x].empty())
            out << ",label=\"" << b.labels_x[x] << "\"";
        out << "];\n";
    }
    for (int y = 0; y < b.ny(); ++y) {
        out << "  y" << y << " [shape=box";
        if (y < static_cast<int>(b.labels_y.size()) && !b.labels_y[y].empty())
            out << ",label=\"" << b.labels_y[y] << "\"";
        out << "];\n";
    }
    for (auto [x, y] : b.edges()) out << "  x" << x << " -- y" << y << ";\n";
    out << "}\n";
}

// Sniffs text vs json by the first non-space byte.
inline bool looks_like_json(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    return c == '{';
}

inline Graph read_graph_any(std::istream& in) {
    return looks_like_json(in) ? read_graph_json(in) : read_graph_text(in);
}

inline BipartiteGraph read_bigraph_any(std::istream& in) {
    return looks_like_json(in) ? read_bigraph_json(in) : read_bigraph_text(in);
}

} // namespace hsq
