#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "influencer/centrality.hpp"
#include "influencer/diffusion.hpp"
#include "influencer/edge_list.hpp"
#include "influencer/format.hpp"
#include "influencer/graph.hpp"
#include "influencer/parallel.hpp"

namespace influencer {

/// One candidate's centralities next to its diffusion outcome.
struct RankRecord {
    NodeId node = 0;
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    double eigenvector = 0.0;
    double betweenness = 0.0;
    std::size_t days_required = 0;
    double proportion_reached = 0.0;
    double score = 0.0;

    friend bool operator==(const RankRecord&, const RankRecord&) = default;
};

/// Score descending, then eigenvector, betweenness and in-degree descending,
/// then node id ascending.
inline bool rank_before(const RankRecord& a, const RankRecord& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.eigenvector != b.eigenvector) return a.eigenvector > b.eigenvector;
    if (a.betweenness != b.betweenness) return a.betweenness > b.betweenness;
    if (a.in_degree != b.in_degree) return a.in_degree > b.in_degree;
    return a.node < b.node;
}

/// Union of the top-k lists for in-degree, betweenness and eigenvector,
/// ascending by id.
inline std::vector<NodeId> select_candidates(const CentralityTable& t, std::size_t k = 10) {
    std::vector<NodeId> out;
    for (Measure m : {Measure::in_degree, Measure::betweenness, Measure::eigenvector}) {
        auto top = top_k(t, m, k);
        out.insert(out.end(), top.begin(), top.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Simulates every candidate as a lone seed and ranks by spreading capacity.
inline std::vector<RankRecord> rank_candidates(const DirectedGraph& g, std::span<const NodeId> candidates,
                                               const DiffusionConfig& cfg, const CentralityTable& t,
                                               unsigned threads = 1) {
    if (candidates.empty()) throw DataError("rank_candidates: empty candidate set");
    validate(cfg);
    for (NodeId c : candidates) {
        if (!g.contains(c)) throw DataError("rank_candidates: unknown node " + std::to_string(c));
    }

    std::vector<RankRecord> records(candidates.size());
    for_each_block(candidates.size(), 1, threads, [&](std::size_t i, std::size_t, std::size_t) {
        const auto& row = t.at(candidates[i]);
        auto trace = linear_threshold_run(g, candidates[i], cfg);
        records[i] = {row.node,        row.in_degree,         row.out_degree,
                      row.eigenvector, row.betweenness,       trace.saturation_day,
                      trace.proportion_reached, spreading_capacity(trace)};
    });
    std::sort(records.begin(), records.end(), rank_before);
    return records;
}

/// Sample Pearson correlation; nullopt when either column is constant.
inline std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ContractError("pearson: columns differ in length");
    if (x.size() < 2) return std::nullopt;
    auto constant = [](std::span<const double> v) {
        return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
    };
    if (constant(x) || constant(y)) return std::nullopt;

    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline constexpr std::array<const char*, 8> kRankColumns{
    "node", "in_degree", "out_degree", "eigenvector", "betweenness", "days_required", "proportion_reached", "score"};

inline std::array<double, 8> rank_fields(const RankRecord& r) {
    return {static_cast<double>(r.node),          static_cast<double>(r.in_degree),
            static_cast<double>(r.out_degree),    r.eigenvector,
            r.betweenness,                        static_cast<double>(r.days_required),
            r.proportion_reached,                 r.score};
}

/// Pearson coefficients between every pair of RankRecord columns. An empty
/// optional marks an undefined entry (constant column).
struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::optional<double>>> values;

    const std::optional<double>& at(std::string_view row, std::string_view col) const {
        auto idx = [&](std::string_view name) {
            auto it = std::find(labels.begin(), labels.end(), name);
            if (it == labels.end()) throw ContractError("unknown column '" + std::string(name) + "'");
            return static_cast<std::size_t>(it - labels.begin());
        };
        return values[idx(row)][idx(col)];
    }
};

inline CorrelationMatrix correlation_matrix(std::span<const RankRecord> records) {
    if (records.size() < 2) throw DataError("correlation_matrix: need at least 2 records");
    const std::size_t m = kRankColumns.size();
    std::vector<std::vector<double>> columns(m, std::vector<double>(records.size()));
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto f = rank_fields(records[i]);
        for (std::size_t c = 0; c < m; ++c) columns[c][i] = f[c];
    }

    CorrelationMatrix cm;
    cm.labels.assign(kRankColumns.begin(), kRankColumns.end());
    cm.values.assign(m, std::vector<std::optional<double>>(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a; b < m; ++b) {
            auto r = pearson(columns[a], columns[b]);
            if (a == b && r) r = 1.0;
            cm.values[a][b] = r;
            cm.values[b][a] = r;
        }
    }
    return cm;
}

struct Recommendation {
    NodeId node = 0;
    double score = 0.0;
    /// Whether the winner also has the largest value among the candidates.
    bool max_in_degree = false;
    bool max_betweenness = false;
    bool max_eigenvector = false;
    /// Number of candidates sharing the winning score (including the winner).
    std::size_t tied_on_score = 0;
};

/// Best record under rank_before, independent of input order.
inline Recommendation recommend(std::span<const RankRecord> records) {
    if (records.empty()) throw DataError("recommend: no records");
    const RankRecord* best = &records.front();
    for (const auto& r : records) {
        if (rank_before(r, *best)) best = &r;
    }
    Recommendation rec;
    rec.node = best->node;
    rec.score = best->score;
    rec.max_in_degree = rec.max_betweenness = rec.max_eigenvector = true;
    for (const auto& r : records) {
        rec.max_in_degree = rec.max_in_degree && r.in_degree <= best->in_degree;
        rec.max_betweenness = rec.max_betweenness && r.betweenness <= best->betweenness;
        rec.max_eigenvector = rec.max_eigenvector && r.eigenvector <= best->eigenvector;
        if (r.score == best->score) ++rec.tied_on_score;
    }
    return rec;
}

// Serialization

inline void write_rank_csv(std::ostream& out, std::span<const RankRecord> records) {
    out << "node,in_degree,out_degree,eigenvector,betweenness,days_required,proportion_reached,score\n";
    for (const auto& r : records) {
        out << r.node << ',' << r.in_degree << ',' << r.out_degree << ',' << fixed6(r.eigenvector) << ','
            << fixed6(r.betweenness) << ',' << r.days_required << ',' << fixed6(r.proportion_reached) << ','
            << fixed6(r.score) << '\n';
    }
}

inline nlohmann::ordered_json to_json(std::span<const RankRecord> records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"node", r.node},
                       {"in_degree", r.in_degree},
                       {"out_degree", r.out_degree},
                       {"eigenvector", r.eigenvector},
                       {"betweenness", r.betweenness},
                       {"days_required", r.days_required},
                       {"proportion_reached", r.proportion_reached},
                       {"score", r.score}});
    }
    return arr;
}

/// Reads the CSV produced by write_rank_csv (column order fixed).
inline std::vector<RankRecord> parse_rank_csv(std::istream& in) {
    std::vector<RankRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::stringstream row(line);
        for (std::string f; std::getline(row, f, ',');) fields.emplace_back(detail::trim(f));
        if (fields.size() != kRankColumns.size()) {
            throw ParseError(line_no, "expected " + std::to_string(kRankColumns.size()) + " fields");
        }
        if (records.empty() && fields[0] == "node") continue; // header
        try {
            std::size_t used = 0;
            auto integer = [&](const std::string& f) {
                auto v = std::stoull(f, &used);
                if (used != f.size()) throw std::invalid_argument(f);
                return static_cast<std::size_t>(v);
            };
            auto real = [&](const std::string& f) {
                auto v = std::stod(f, &used);
                if (used != f.size()) throw std::invalid_argument(f);
                return v;
            };
            records.push_back({integer(fields[0]), integer(fields[1]), integer(fields[2]), real(fields[3]),
                               real(fields[4]), integer(fields[5]), real(fields[6]), real(fields[7])});
        } catch (const std::logic_error&) {
            throw ParseError(line_no, "malformed rank row");
        }
    }
    return records;
}

inline constexpr const char* kUndefinedMarker = "NA";

inline void write_correlation_csv(std::ostream& out, const CorrelationMatrix& cm) {
    for (const auto& label : cm.labels) out << ',' << label;
    out << '\n';
    for (std::size_t a = 0; a < cm.labels.size(); ++a) {
        out << cm.labels[a];
        for (const auto& v : cm.values[a]) out << ',' << (v ? fixed6(*v) : kUndefinedMarker);
        out << '\n';
    }
}

inline nlohmann::ordered_json to_json(const CorrelationMatrix& cm) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < cm.labels.size(); ++a) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t b = 0; b < cm.labels.size(); ++b) {
            const auto& v = cm.values[a][b];
            row[cm.labels[b]] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        }
        obj[cm.labels[a]] = std::move(row);
    }
    return obj;
}

inline nlohmann::ordered_json to_json(const Recommendation& rec) {
    return {{"node", rec.node},
            {"score", rec.score},
            {"rationale",
             {{"max_in_degree", rec.max_in_degree},
              {"max_betweenness", rec.max_betweenness},
              {"max_eigenvector", rec.max_eigenvector},
              {"tied_on_score", rec.tied_on_score}}}};
}

} // namespace influencer
