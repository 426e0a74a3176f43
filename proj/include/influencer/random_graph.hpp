#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "influencer/graph.hpp"

namespace influencer {

/// Seeded 64-bit Mersenne Twister with distribution code of our own, since
/// the standard library's distributions are not specified bit-for-bit.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ContractError("SeededRng::below: bound must be positive");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

enum class RandomModel { gnp, watts_strogatz };

inline RandomModel parse_random_model(std::string_view name) {
    if (name == "gnp") return RandomModel::gnp;
    if (name == "watts_strogatz" || name == "ws") return RandomModel::watts_strogatz;
    throw ContractError("unknown random graph model '" + std::string(name) + "'");
}

struct RandomGraphSpec {
    RandomModel model = RandomModel::gnp;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t k = 0; // watts_strogatz only
    std::uint64_t rng_seed = 0;
};

/// Undirected G(n, p) on nodes 0..n-1. Pairs are visited in lexicographic
/// order, one draw each.
inline DirectedGraph gnp_random(std::size_t n, double p, std::uint64_t rng_seed) {
    if (n < 2) throw ContractError("gnp_random: n must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw ContractError("gnp_random: p must lie in [0, 1]");
    SeededRng rng(rng_seed);
    GraphBuilder builder(false);
    for (std::size_t i = 0; i < n; ++i) builder.add_node(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.uniform01() < p) builder.add_edge(i, j);
        }
    }
    return builder.build();
}

/// Undirected Watts-Strogatz graph: ring lattice with each node joined to its
/// k nearest neighbors, then every lattice edge (u, u+j) rewired with
/// probability p_rewire to (u, w) for a uniform w that is neither u nor an
/// existing neighbor. Edge count stays n*k/2.
inline DirectedGraph watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t rng_seed) {
    if (k < 2 || k % 2 != 0 || k >= n) throw ContractError("watts_strogatz: k must be even with 2 <= k < n");
    if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) throw ContractError("watts_strogatz: p_rewire must lie in [0, 1]");

    std::vector<std::set<std::size_t>> adj(n);
    auto link = [&](std::size_t a, std::size_t b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k / 2; ++j) link(u, (u + j) % n);
    }

    SeededRng rng(rng_seed);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t v = (u + j) % n;
            if (rng.uniform01() >= p_rewire) continue;
            if (adj[u].size() >= n - 1) continue; // u already linked to everyone
            std::size_t w;
            do {
                w = static_cast<std::size_t>(rng.below(n));
            } while (w == u || adj[u].count(w) != 0);
            adj[u].erase(v);
            adj[v].erase(u);
            link(u, w);
        }
    }

    GraphBuilder builder(false);
    for (std::size_t u = 0; u < n; ++u) {
        builder.add_node(u);
        for (std::size_t w : adj[u]) {
            if (u < w) builder.add_edge(u, w);
        }
    }
    return builder.build();
}

inline DirectedGraph generate(const RandomGraphSpec& spec) {
    switch (spec.model) {
    case RandomModel::gnp: return gnp_random(spec.n, spec.p, spec.rng_seed);
    case RandomModel::watts_strogatz: return watts_strogatz(spec.n, spec.k, spec.p, spec.rng_seed);
    }
    throw ContractError("unknown random graph model");
}

} // namespace influencer
