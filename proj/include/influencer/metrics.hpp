#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "influencer/format.hpp"
#include "influencer/graph.hpp"
#include "influencer/parallel.hpp"

namespace influencer {

/// Aggregate hop-distance statistics over ordered pairs u != v with a finite
/// directed distance. Unreachable pairs are excluded.
struct PathStatistics {
    std::uint64_t reachable_pairs = 0;
    std::uint64_t distance_sum = 0;
    std::uint32_t diameter = 0;
};

inline PathStatistics path_statistics(const DirectedGraph& g, unsigned threads = 1) {
    const std::size_t n = g.node_count();
    constexpr std::size_t block = 32;
    std::vector<PathStatistics> partial((n + block - 1) / block);

    for_each_block(n, block, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
        constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> dist(n, unseen);
        std::vector<Index> queue;
        queue.reserve(n);
        PathStatistics acc;
        for (std::size_t s = begin; s < end; ++s) {
            std::fill(dist.begin(), dist.end(), unseen);
            queue.clear();
            dist[s] = 0;
            queue.push_back(static_cast<Index>(s));
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Index v = queue[head];
                for (Index w : g.out_neighbors(v)) {
                    if (dist[w] != unseen) continue;
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                    acc.reachable_pairs += 1;
                    acc.distance_sum += dist[w];
                    acc.diameter = std::max(acc.diameter, dist[w]);
                }
            }
        }
        partial[b] = acc;
    });

    PathStatistics total;
    for (const auto& p : partial) {
        total.reachable_pairs += p.reachable_pairs;
        total.distance_sum += p.distance_sum;
        total.diameter = std::max(total.diameter, p.diameter);
    }
    return total;
}

namespace detail {

inline PathStatistics checked_path_statistics(const DirectedGraph& g, unsigned threads) {
    if (g.node_count() < 2) throw DataError("path statistics need at least 2 nodes");
    auto stats = path_statistics(g, threads);
    if (stats.reachable_pairs == 0) throw DataError("no reachable pairs");
    return stats;
}

} // namespace detail

inline double average_path_length(const DirectedGraph& g, unsigned threads = 1) {
    auto stats = detail::checked_path_statistics(g, threads);
    return static_cast<double>(stats.distance_sum) / static_cast<double>(stats.reachable_pairs);
}

inline std::uint32_t diameter(const DirectedGraph& g, unsigned threads = 1) {
    return detail::checked_path_statistics(g, threads).diameter;
}

/// Sorted neighbor lists of the undirected projection (direction dropped).
inline std::vector<std::vector<Index>> undirected_projection(const DirectedGraph& g) {
    std::vector<std::vector<Index>> adj(g.node_count());
    for (Index v = 0; v < g.node_count(); ++v) {
        auto out = g.out_neighbors(v);
        auto in = g.in_neighbors(v);
        adj[v].reserve(out.size() + in.size());
        std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(adj[v]));
    }
    return adj;
}

/// Local clustering coefficient of every node on the undirected projection.
/// Nodes with fewer than two neighbors get 0.
inline std::vector<double> local_clustering(const DirectedGraph& g) {
    auto adj = undirected_projection(g);
    std::vector<double> coeff(g.node_count(), 0.0);
    std::vector<Index> common;
    for (Index v = 0; v < g.node_count(); ++v) {
        const auto& nv = adj[v];
        const std::size_t k = nv.size();
        if (k < 2) continue;
        std::uint64_t links = 0; // each triangle through v counted twice
        for (Index u : nv) {
            common.clear();
            std::set_intersection(nv.begin(), nv.end(), adj[u].begin(), adj[u].end(), std::back_inserter(common));
            links += common.size();
        }
        coeff[v] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return coeff;
}

inline double average_clustering(const DirectedGraph& g) {
    if (g.empty()) throw DataError("average_clustering: graph is empty");
    double sum = 0.0;
    for (double c : local_clustering(g)) sum += c;
    return sum / static_cast<double>(g.node_count());
}

/// One row of the basic-statistics table.
struct NetworkSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double average_path_length = 0.0;
    double average_clustering = 0.0;
    std::uint32_t diameter = 0;
    std::size_t component_count = 0;

    friend bool operator==(const NetworkSummary&, const NetworkSummary&) = default;
};

inline NetworkSummary summarize(const DirectedGraph& g, unsigned threads = 1) {
    if (g.empty()) throw DataError("summarize: graph is empty");
    auto paths = detail::checked_path_statistics(g, threads);
    NetworkSummary s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.average_path_length = static_cast<double>(paths.distance_sum) / static_cast<double>(paths.reachable_pairs);
    s.average_clustering = average_clustering(g);
    s.diameter = paths.diameter;
    s.component_count = weakly_connected_components(g).size();
    return s;
}

/// Small-world index sigma = (C / C_random) / (L / L_random).
struct SmallWorldVerdict {
    double sigma = 0.0;
    double c_ratio = 0.0;
    double l_ratio = 0.0;
    bool is_small_world = false;
};

inline SmallWorldVerdict small_world_sigma(double clustering, double path_length, double baseline_clustering,
                                           double baseline_path_length) {
    if (!(baseline_clustering > 0.0) || !(baseline_path_length > 0.0)) {
        throw DataError("baseline degenerate: clustering and path length must be positive");
    }
    if (!(path_length > 0.0)) throw DataError("small_world_sigma: path length must be positive");
    SmallWorldVerdict v;
    v.c_ratio = clustering / baseline_clustering;
    v.l_ratio = path_length / baseline_path_length;
    v.sigma = v.c_ratio / v.l_ratio;
    v.is_small_world = v.sigma > 1.0;
    return v;
}

inline SmallWorldVerdict small_world_sigma(const NetworkSummary& actual, const NetworkSummary& baseline) {
    return small_world_sigma(actual.average_clustering, actual.average_path_length, baseline.average_clustering,
                             baseline.average_path_length);
}

// Serialization

inline constexpr const char* kSummaryCsvHeader =
    "network,nodes,edges,avg_path_length,avg_clustering,diameter,components";

inline void write_summary_csv_row(std::ostream& out, const std::string& network, const NetworkSummary& s) {
    out << network << ',' << s.node_count << ',' << s.edge_count << ',' << fixed6(s.average_path_length) << ','
        << fixed6(s.average_clustering) << ',' << s.diameter << ',' << s.component_count << '\n';
}

inline nlohmann::ordered_json to_json(const std::string& network, const NetworkSummary& s) {
    return {{"network", network},
            {"nodes", s.node_count},
            {"edges", s.edge_count},
            {"avg_path_length", s.average_path_length},
            {"avg_clustering", s.average_clustering},
            {"diameter", s.diameter},
            {"components", s.component_count}};
}

inline nlohmann::ordered_json to_json(const SmallWorldVerdict& v) {
    return {{"sigma", v.sigma}, {"c_ratio", v.c_ratio}, {"l_ratio", v.l_ratio}, {"is_small_world", v.is_small_world}};
}

} // namespace influencer
