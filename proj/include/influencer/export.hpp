#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "influencer/edge_list.hpp"
#include "influencer/graph.hpp"

namespace influencer {

enum class ExportFormat { dot, graphml, csv };

inline ExportFormat parse_export_format(std::string_view name) {
    if (name == "dot") return ExportFormat::dot;
    if (name == "graphml") return ExportFormat::graphml;
    if (name == "csv") return ExportFormat::csv;
    throw ContractError("unknown export format '" + std::string(name) + "'");
}

// Node size carries the in-degree (follower count) for layout tools.

inline void write_dot(std::ostream& out, const DirectedGraph& g) {
    const bool directed = g.is_directed();
    out << (directed ? "digraph" : "graph") << " follow_network {\n";
    for (Index v = 0; v < g.node_count(); ++v) {
        out << "  " << g.id(v) << " [size=" << g.in_degree(v) << "];\n";
    }
    const char* arrow = directed ? " -> " : " -- ";
    for (const auto& [i, j] : g.edges()) out << "  " << i << arrow << j << ";\n";
    out << "}\n";
}

inline void write_graphml(std::ostream& out, const DirectedGraph& g) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"int\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"" << (g.is_directed() ? "directed" : "undirected") << "\">\n";
    for (Index v = 0; v < g.node_count(); ++v) {
        out << "    <node id=\"n" << g.id(v) << "\"><data key=\"size\">" << g.in_degree(v) << "</data></node>\n";
    }
    for (const auto& [i, j] : g.edges()) {
        out << "    <edge source=\"n" << i << "\" target=\"n" << j << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

inline void export_graph(std::ostream& out, const DirectedGraph& g, ExportFormat format) {
    switch (format) {
    case ExportFormat::dot: write_dot(out, g); return;
    case ExportFormat::graphml: write_graphml(out, g); return;
    case ExportFormat::csv: write_edge_csv(out, g); return;
    }
}

inline std::string export_graph(const DirectedGraph& g, ExportFormat format) {
    std::ostringstream out;
    export_graph(out, g, format);
    return out.str();
}

} // namespace influencer
