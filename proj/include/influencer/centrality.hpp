#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "influencer/format.hpp"
#include "influencer/graph.hpp"
#include "influencer/parallel.hpp"

namespace influencer {

struct CentralityRow {
    NodeId node = 0;
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    double betweenness = 0.0;
    double eigenvector = 0.0;

    friend bool operator==(const CentralityRow&, const CentralityRow&) = default;
};

/// One row per graph node, in ascending id order.
struct CentralityTable {
    std::vector<CentralityRow> rows;

    const CentralityRow* find(NodeId node) const {
        auto it = std::lower_bound(rows.begin(), rows.end(), node,
                                   [](const CentralityRow& r, NodeId id) { return r.node < id; });
        return it != rows.end() && it->node == node ? &*it : nullptr;
    }

    const CentralityRow& at(NodeId node) const {
        if (auto* row = find(node)) return *row;
        throw DataError("no centrality row for node " + std::to_string(node));
    }
};

/// Table with only the degree columns filled in. In-degree is the follower
/// count, out-degree the number of accounts followed.
inline CentralityTable degree_table(const DirectedGraph& g) {
    CentralityTable t;
    t.rows.reserve(g.node_count());
    for (Index v = 0; v < g.node_count(); ++v) {
        t.rows.push_back({g.id(v), g.in_degree(v), g.out_degree(v), 0.0, 0.0});
    }
    return t;
}

/// Brandes betweenness over directed shortest paths, normalized by
/// (n-1)(n-2). Graphs with fewer than 3 nodes get all zeros.
///
/// Sources are processed in fixed blocks whose partial sums merge in block
/// order, so the result is bitwise identical for any thread count.
inline std::vector<double> betweenness_centrality(const DirectedGraph& g, unsigned threads = 1) {
    const std::size_t n = g.node_count();
    std::vector<double> score(n, 0.0);
    if (n < 3) return score;

    const std::size_t block = std::max<std::size_t>(16, (n + 63) / 64);
    std::vector<std::vector<double>> partial((n + block - 1) / block);

    for_each_block(n, block, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
        std::vector<double> acc(n, 0.0);
        std::vector<std::int64_t> dist(n);
        std::vector<double> sigma(n);
        std::vector<double> delta(n);
        std::vector<Index> order;
        order.reserve(n);

        for (std::size_t s = begin; s < end; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            order.clear();

            dist[s] = 0;
            sigma[s] = 1.0;
            order.push_back(static_cast<Index>(s));
            for (std::size_t head = 0; head < order.size(); ++head) {
                Index v = order[head];
                for (Index w : g.out_neighbors(v)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        order.push_back(w);
                    }
                    if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
                }
            }

            // Predecessors of w are exactly its in-neighbors one hop closer.
            for (std::size_t i = order.size(); i-- > 1;) {
                Index w = order[i];
                for (Index v : g.in_neighbors(w)) {
                    if (dist[v] >= 0 && dist[v] + 1 == dist[w]) {
                        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                    }
                }
                acc[w] += delta[w];
            }
        }
        partial[b] = std::move(acc);
    });

    for (const auto& p : partial) {
        for (std::size_t v = 0; v < n; ++v) score[v] += p[v];
    }
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (double& x : score) x *= scale;
    return score;
}

struct EigenvectorOptions {
    double tolerance = 1e-10;
    int max_iterations = 1000;
    /// Positive start vector; empty means uniform 1/sqrt(n).
    std::vector<double> start;
};

/// Dominant eigenvector of the influence operator (Ax)_v = sum of x_u over
/// followers u of v, unit Euclidean norm, all components >= 0.
///
/// Iterates x <- normalize(x + Ax). The shift by the identity has the same
/// dominant eigenvector but cannot oscillate on periodic graphs such as
/// bipartite mutual-follow structures. Converged when the largest
/// componentwise change drops below the tolerance.
inline std::vector<double> eigenvector_centrality(const DirectedGraph& g, const EigenvectorOptions& opts = {}) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("eigenvector_centrality: graph is empty");
    if (!(opts.tolerance > 0.0)) throw ContractError("eigenvector_centrality: tolerance must be positive");
    if (opts.max_iterations < 1) throw ContractError("eigenvector_centrality: max_iterations must be >= 1");

    auto normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double a : v) norm += a * a;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw DataError("eigenvector_centrality: iterate vanished");
        for (double& a : v) a /= norm;
    };

    std::vector<double> x;
    if (opts.start.empty()) {
        x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    } else {
        if (opts.start.size() != n) throw ContractError("eigenvector_centrality: start vector has wrong size");
        for (double a : opts.start) {
            if (!(a > 0.0)) throw ContractError("eigenvector_centrality: start vector must be positive");
        }
        x = opts.start;
        normalize(x);
    }

    std::vector<double> next(n);
    double change = 0.0;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        for (Index v = 0; v < n; ++v) {
            double sum = x[v];
            for (Index u : g.in_neighbors(v)) sum += x[u];
            next[v] = sum;
        }
        normalize(next);
        change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change = std::max(change, std::abs(next[v] - x[v]));
        x.swap(next);
        if (change < opts.tolerance) return x;
    }
    throw ConvergenceError("eigenvector_centrality: no convergence after " + std::to_string(opts.max_iterations) +
                               " iterations (last change " + std::to_string(change) + ")",
                           std::move(x), change);
}

/// Degree, betweenness and eigenvector columns together.
inline CentralityTable centrality_table(const DirectedGraph& g, const EigenvectorOptions& eig = {},
                                        unsigned threads = 1) {
    auto t = degree_table(g);
    auto btw = betweenness_centrality(g, threads);
    auto eigv = eigenvector_centrality(g, eig);
    for (std::size_t v = 0; v < t.rows.size(); ++v) {
        t.rows[v].betweenness = btw[v];
        t.rows[v].eigenvector = eigv[v];
    }
    return t;
}

enum class Measure { in_degree, betweenness, eigenvector };

inline Measure parse_measure(std::string_view name) {
    if (name == "in_degree") return Measure::in_degree;
    if (name == "betweenness") return Measure::betweenness;
    if (name == "eigenvector") return Measure::eigenvector;
    throw ContractError("unknown centrality measure '" + std::string(name) + "'");
}

inline std::string_view to_string(Measure m) {
    switch (m) {
    case Measure::in_degree: return "in_degree";
    case Measure::betweenness: return "betweenness";
    case Measure::eigenvector: return "eigenvector";
    }
    return "?";
}

inline double measure_value(const CentralityRow& row, Measure m) {
    switch (m) {
    case Measure::in_degree: return static_cast<double>(row.in_degree);
    case Measure::betweenness: return row.betweenness;
    case Measure::eigenvector: return row.eigenvector;
    }
    return 0.0;
}

/// The k highest nodes for a measure, descending, ties by smaller id.
inline std::vector<NodeId> top_k(const CentralityTable& t, Measure m, std::size_t k) {
    if (k < 1) throw ContractError("top_k: k must be >= 1");
    std::vector<const CentralityRow*> rows;
    rows.reserve(t.rows.size());
    for (const auto& r : t.rows) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [m](const CentralityRow* a, const CentralityRow* b) {
        double va = measure_value(*a, m), vb = measure_value(*b, m);
        if (va != vb) return va > vb;
        return a->node < b->node;
    });
    rows.resize(std::min(k, rows.size()));
    std::vector<NodeId> out;
    for (const auto* r : rows) out.push_back(r->node);
    return out;
}

// Serialization: rows by descending in-degree, then id.

inline std::vector<CentralityRow> report_order(const CentralityTable& t) {
    auto rows = t.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const CentralityRow& a, const CentralityRow& b) {
        if (a.in_degree != b.in_degree) return a.in_degree > b.in_degree;
        return a.node < b.node;
    });
    return rows;
}

inline void write_centrality_csv(std::ostream& out, const CentralityTable& t) {
    out << "node,in_degree,out_degree,betweenness,eigenvector\n";
    for (const auto& r : report_order(t)) {
        out << r.node << ',' << r.in_degree << ',' << r.out_degree << ',' << fixed6(r.betweenness) << ','
            << fixed6(r.eigenvector) << '\n';
    }
}

inline nlohmann::ordered_json to_json(const CentralityTable& t) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : report_order(t)) {
        arr.push_back({{"node", r.node},
                       {"in_degree", r.in_degree},
                       {"out_degree", r.out_degree},
                       {"betweenness", r.betweenness},
                       {"eigenvector", r.eigenvector}});
    }
    return arr;
}

} // namespace influencer
