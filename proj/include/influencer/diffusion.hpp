#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "influencer/format.hpp"
#include "influencer/graph.hpp"
#include "influencer/parallel.hpp"

namespace influencer {

struct DiffusionConfig {
    double theta = 0.1;
    int max_days = 15;
};

inline void validate(const DiffusionConfig& cfg) {
    if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0)) throw ContractError("theta must lie in [0, 1]");
    if (cfg.max_days < 1) throw ContractError("max_days must be >= 1");
}

/// Active-set sizes per day for one seed. Day 0 is the seed alone; the trace
/// always spans days 0..max_days and stays constant after the fixed point.
struct DiffusionTrace {
    NodeId seed = 0;
    double theta = 0.0;
    std::vector<std::size_t> active_counts;
    std::size_t saturation_day = 0;
    double proportion_reached = 0.0;
    std::size_t population = 0;

    friend bool operator==(const DiffusionTrace&, const DiffusionTrace&) = default;
};

inline constexpr std::uint32_t kNeverActivated = std::numeric_limits<std::uint32_t>::max();

struct DiffusionRun {
    DiffusionTrace trace;
    /// Day on which each node (by graph index) adopted, or kNeverActivated.
    std::vector<std::uint32_t> activation_day;
};

/// Linear threshold adoption on the follow graph `g`.
///
/// Influence runs against follow edges, so the simulation works on the
/// reversed graph: the influence in-neighbors of a user are the accounts it
/// follows. Each day, synchronously, an inactive user with at least one active
/// influence in-neighbor adopts when
///     active influence in-neighbors / influence in-neighbors >= theta.
/// Adoption is permanent.
inline DiffusionRun linear_threshold_simulate(const DirectedGraph& g, NodeId seed, const DiffusionConfig& cfg) {
    validate(cfg);
    if (!g.is_directed()) throw ContractError("linear threshold model needs a directed follow graph");
    auto seed_index = g.index_of(seed);
    if (!seed_index) throw DataError("unknown seed node " + std::to_string(seed));

    const DirectedGraph influence = reverse(g);
    const std::size_t n = influence.node_count();

    DiffusionRun run;
    run.activation_day.assign(n, kNeverActivated);
    std::vector<std::size_t> active_in(n, 0);
    std::vector<Index> frontier{*seed_index};
    std::vector<Index> touched;
    std::vector<Index> adopted;
    run.activation_day[*seed_index] = 0;

    auto& counts = run.trace.active_counts;
    counts.reserve(static_cast<std::size_t>(cfg.max_days) + 1);
    counts.push_back(1);

    for (int day = 1; day <= cfg.max_days; ++day) {
        touched.clear();
        for (Index u : frontier) {
            for (Index w : influence.out_neighbors(u)) {
                if (run.activation_day[w] != kNeverActivated) continue;
                ++active_in[w];
                touched.push_back(w);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

        adopted.clear();
        for (Index w : touched) {
            double fraction = static_cast<double>(active_in[w]) / static_cast<double>(influence.in_degree(w));
            if (fraction >= cfg.theta) adopted.push_back(w);
        }
        if (adopted.empty()) break;
        for (Index w : adopted) run.activation_day[w] = static_cast<std::uint32_t>(day);
        counts.push_back(counts.back() + adopted.size());
        frontier.swap(adopted);
    }
    while (counts.size() < static_cast<std::size_t>(cfg.max_days) + 1) counts.push_back(counts.back());

    auto& t = run.trace;
    t.seed = seed;
    t.theta = cfg.theta;
    t.population = n;
    t.proportion_reached = static_cast<double>(counts.back()) / static_cast<double>(n);
    t.saturation_day = static_cast<std::size_t>(std::find(counts.begin(), counts.end(), counts.back()) - counts.begin());
    return run;
}

inline DiffusionTrace linear_threshold_run(const DirectedGraph& g, NodeId seed, const DiffusionConfig& cfg) {
    return linear_threshold_simulate(g, seed, cfg).trace;
}

/// Percentage points of the population reached per day until saturation.
/// A seed-only fixed point (day 0) divides by 1.
inline double spreading_capacity(double proportion_reached, std::size_t saturation_day) {
    return 100.0 * proportion_reached / static_cast<double>(std::max<std::size_t>(saturation_day, 1));
}

inline double spreading_capacity(const DiffusionTrace& trace) {
    return spreading_capacity(trace.proportion_reached, trace.saturation_day);
}

inline const std::vector<double>& default_sweep_thetas() {
    static const std::vector<double> thetas{0.01, 0.05, 0.1, 0.2};
    return thetas;
}

inline std::vector<DiffusionTrace> threshold_sweep(const DirectedGraph& g, NodeId seed, const std::vector<double>& thetas,
                                                   int max_days, unsigned threads = 1) {
    if (thetas.empty()) throw ContractError("threshold_sweep: no thresholds given");
    for (double theta : thetas) validate(DiffusionConfig{theta, max_days});
    std::vector<DiffusionTrace> traces(thetas.size());
    for_each_block(thetas.size(), 1, threads, [&](std::size_t i, std::size_t, std::size_t) {
        traces[i] = linear_threshold_run(g, seed, {thetas[i], max_days});
    });
    return traces;
}

// Serialization

inline constexpr const char* kTraceCsvHeader = "seed,theta,day,active_count,proportion";

inline void write_trace_csv_rows(std::ostream& out, const DiffusionTrace& t) {
    for (std::size_t day = 0; day < t.active_counts.size(); ++day) {
        out << t.seed << ',' << fixed6(t.theta) << ',' << day << ',' << t.active_counts[day] << ','
            << fixed6(static_cast<double>(t.active_counts[day]) / static_cast<double>(t.population)) << '\n';
    }
}

inline void write_trace_csv(std::ostream& out, const std::vector<DiffusionTrace>& traces) {
    out << kTraceCsvHeader << '\n';
    for (const auto& t : traces) write_trace_csv_rows(out, t);
}

inline nlohmann::ordered_json to_json(const DiffusionTrace& t) {
    return {{"seed", t.seed},
            {"theta", t.theta},
            {"saturation_day", t.saturation_day},
            {"proportion_reached", t.proportion_reached},
            {"score", spreading_capacity(t)}};
}

} // namespace influencer
