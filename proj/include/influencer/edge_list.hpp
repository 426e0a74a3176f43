#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "influencer/graph.hpp"

namespace influencer {

struct ParsedEdgeList {
    DirectedGraph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline NodeId parse_id(std::string_view field, std::size_t line) {
    field = trim(field);
    NodeId value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    }
    return value;
}

} // namespace detail

/// Reads `<header>\n<i>,<j>\n...`. Each row is a directed edge i -> j.
/// Self-loops and repeated rows are dropped and counted.
inline ParsedEdgeList parse_edge_csv(std::istream& in, bool directed = true) {
    GraphBuilder builder(directed);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = line;
        if (line_no == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
        if (detail::trim(row).empty()) continue;

        auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected exactly two comma-separated fields");
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        builder.add_edge(detail::parse_id(row.substr(0, comma), line_no),
                         detail::parse_id(row.substr(comma + 1), line_no));
    }
    if (in.bad()) throw DataError("read error after line " + std::to_string(line_no));

    return {builder.build(), builder.self_loops(), builder.duplicates()};
}

inline ParsedEdgeList read_edge_csv(const std::filesystem::path& path, bool directed = true) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list '" + path.string() + "'");
    return parse_edge_csv(in, directed);
}

/// Header `i,j`, rows sorted by (i, j).
inline void write_edge_csv(std::ostream& out, const DirectedGraph& g) {
    out << "i,j\n";
    for (const auto& [i, j] : g.edges()) out << i << ',' << j << '\n';
}

} // namespace influencer
