#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "thinness/graph.hpp"

namespace thinness {

// Graph file format: {"n": int, "edges": [[u,v],...]} with u < v, sorted
// lexicographically. Round-trips bit-exactly.
inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs \"n\" and \"edges\"");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

inline std::string graph_to_string(const Graph& g) { return graph_to_json(g).dump(); }

inline Graph graph_from_string(const std::string& s) {
    return graph_from_json(nlohmann::json::parse(s));
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << graph_to_json(g).dump() << "\n";
}

inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); v++) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline Graph graph_from_dot(const std::string& dot) {
    // Parses the subset of DOT emitted by graph_to_dot.
    std::istringstream in(dot);
    std::string tok;
    int max_vertex = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u;
        if (!(ls >> u)) continue;
        max_vertex = std::max(max_vertex, u);
        std::string sep;
        if (ls >> sep && sep == "--") {
            int v;
            if (!(ls >> v)) throw std::invalid_argument("dot parse: missing edge endpoint");
            max_vertex = std::max(max_vertex, v);
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(max_vertex + 1, edges);
}

}  // namespace thinness
