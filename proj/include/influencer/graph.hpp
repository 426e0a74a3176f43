#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "influencer/error.hpp"

namespace influencer {

/// Original (user-facing) node identifier. Not required to be contiguous.
using NodeId = std::uint64_t;

/// Dense internal index in [0, node_count()).
using Index = std::uint32_t;

using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple graph over arbitrary non-negative ids.
///
/// An edge (i, j) in a directed graph means "i follows j". Undirected graphs
/// (random baselines) are stored as symmetric arc sets; edge_count() then
/// reports unordered pairs. Adjacency is held in CSR form with each neighbor
/// list sorted by index, and indices are ordered by ascending id, so iteration
/// order is deterministic everywhere.
class DirectedGraph {
public:
    DirectedGraph() = default;

    bool is_directed() const noexcept { return directed_; }
    bool empty() const noexcept { return ids_.empty(); }

    std::size_t node_count() const noexcept { return ids_.size(); }

    /// Number of stored arcs (an undirected edge contributes two).
    std::size_t arc_count() const noexcept { return out_targets_.size(); }

    std::size_t edge_count() const noexcept {
        return directed_ ? arc_count() : arc_count() / 2;
    }

    std::span<const NodeId> ids() const noexcept { return ids_; }
    NodeId id(Index v) const { return ids_[v]; }

    std::optional<Index> index_of(NodeId id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) return std::nullopt;
        return static_cast<Index>(it - ids_.begin());
    }

    bool contains(NodeId id) const { return index_of(id).has_value(); }

    std::span<const Index> out_neighbors(Index v) const {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    std::span<const Index> in_neighbors(Index v) const {
        return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
    }

    std::size_t out_degree(Index v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(Index v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    bool has_arc(Index from, Index to) const {
        auto nbrs = out_neighbors(from);
        return std::binary_search(nbrs.begin(), nbrs.end(), to);
    }

    /// Edge list in original ids, sorted by (i, j). Undirected graphs list
    /// each pair once with the smaller id first.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (Index v = 0; v < node_count(); ++v) {
            for (Index w : out_neighbors(v)) {
                if (!directed_ && w < v) continue;
                out.emplace_back(ids_[v], ids_[w]);
            }
        }
        return out;
    }

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    friend class GraphBuilder;

    bool directed_ = true;
    std::vector<NodeId> ids_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Index> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Index> in_sources_;
};

/// Accumulates nodes and edges, dropping self-loops and duplicates with a
/// counter for each.
class GraphBuilder {
public:
    explicit GraphBuilder(bool directed = true) : directed_(directed) {}

    enum class EdgeStatus { added, self_loop, duplicate };

    void add_node(NodeId id) { nodes_.insert(id); }

    EdgeStatus add_edge(NodeId from, NodeId to) {
        if (from == to) {
            ++self_loops_;
            return EdgeStatus::self_loop;
        }
        nodes_.insert(from);
        nodes_.insert(to);
        if (!directed_ && to < from) std::swap(from, to);
        if (!edges_.emplace(from, to).second) {
            ++duplicates_;
            return EdgeStatus::duplicate;
        }
        return EdgeStatus::added;
    }

    std::size_t self_loops() const noexcept { return self_loops_; }
    std::size_t duplicates() const noexcept { return duplicates_; }

    DirectedGraph build() const {
        DirectedGraph g;
        g.directed_ = directed_;
        g.ids_.assign(nodes_.begin(), nodes_.end());
        const std::size_t n = g.ids_.size();

        std::vector<std::pair<Index, Index>> arcs;
        arcs.reserve(directed_ ? edges_.size() : 2 * edges_.size());
        for (const auto& [from, to] : edges_) {
            Index a = *g.index_of(from);
            Index b = *g.index_of(to);
            arcs.emplace_back(a, b);
            if (!directed_) arcs.emplace_back(b, a);
        }

        auto fill_csr = [n](std::vector<std::pair<Index, Index>>& list, std::vector<std::size_t>& offsets,
                            std::vector<Index>& targets) {
            std::sort(list.begin(), list.end());
            offsets.assign(n + 1, 0);
            targets.clear();
            targets.reserve(list.size());
            for (const auto& [a, b] : list) {
                ++offsets[a + 1];
                targets.push_back(b);
            }
            std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        };

        fill_csr(arcs, g.out_offsets_, g.out_targets_);
        for (auto& arc : arcs) std::swap(arc.first, arc.second);
        fill_csr(arcs, g.in_offsets_, g.in_sources_);
        return g;
    }

private:
    bool directed_;
    std::set<NodeId> nodes_;
    std::set<Edge> edges_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

inline DirectedGraph make_graph(std::span<const Edge> edges, bool directed = true) {
    GraphBuilder builder(directed);
    for (const auto& [i, j] : edges) builder.add_edge(i, j);
    return builder.build();
}

inline DirectedGraph make_graph(std::initializer_list<Edge> edges, bool directed = true) {
    return make_graph(std::span<const Edge>(edges.begin(), edges.size()), directed);
}

/// Same nodes, every edge direction flipped.
inline DirectedGraph reverse(const DirectedGraph& g) {
    if (!g.is_directed()) throw ContractError("reverse: graph is undirected");
    GraphBuilder builder(true);
    for (NodeId id : g.ids()) builder.add_node(id);
    for (const auto& [i, j] : g.edges()) builder.add_edge(j, i);
    return builder.build();
}

/// Subgraph on `keep` with every edge whose endpoints are both kept.
inline DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const NodeId> keep) {
    std::vector<bool> kept(g.node_count(), false);
    GraphBuilder builder(g.is_directed());
    for (NodeId id : keep) {
        auto v = g.index_of(id);
        if (!v) throw DataError("induced_subgraph: unknown node id " + std::to_string(id));
        kept[*v] = true;
        builder.add_node(id);
    }
    for (Index v = 0; v < g.node_count(); ++v) {
        if (!kept[v]) continue;
        for (Index w : g.out_neighbors(v)) {
            if (kept[w]) builder.add_edge(g.id(v), g.id(w));
        }
    }
    return builder.build();
}

/// Weakly connected components, each sorted by id. Components are ordered by
/// size descending, ties by smallest member id.
struct ComponentPartition {
    std::vector<std::vector<NodeId>> components;

    std::size_t size() const noexcept { return components.size(); }
};

inline ComponentPartition weakly_connected_components(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<bool> seen(n, false);
    std::vector<Index> stack;
    ComponentPartition out;

    for (Index start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<NodeId> members;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            Index v = stack.back();
            stack.pop_back();
            members.push_back(g.id(v));
            for (auto nbrs : {g.out_neighbors(v), g.in_neighbors(v)}) {
                for (Index w : nbrs) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.components.push_back(std::move(members));
    }

    // Discovery order is by smallest member already; stable sort keeps it for ties.
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
}

/// Induced subgraph on the largest weakly connected component.
inline DirectedGraph largest_core(const DirectedGraph& g) {
    if (g.empty()) throw DataError("largest_core: graph is empty");
    auto parts = weakly_connected_components(g);
    return induced_subgraph(g, parts.components.front());
}

} // namespace influencer
