#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "influencer/centrality.hpp"
#include "influencer/diffusion.hpp"
#include "influencer/edge_list.hpp"
#include "influencer/graph.hpp"
#include "influencer/metrics.hpp"
#include "influencer/rank.hpp"

namespace influencer {

enum class OutputFormat { csv, json };

inline OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ContractError("unknown output format '" + std::string(name) + "'");
}

/// Defaults reproduce the reference analysis: core only, theta 0.1,
/// 15 days, top 10 per measure, sweep over {0.01, 0.05, 0.1, 0.2}.
struct PipelineConfig {
    std::filesystem::path input_path;
    bool use_core = true;
    double theta = 0.1;
    int max_days = 15;
    std::size_t top_k = 10;
    std::vector<double> thetas_for_sweep = default_sweep_thetas();
    std::uint64_t rng_seed = 0;
    OutputFormat output_format = OutputFormat::csv;
    unsigned threads = 1;
    EigenvectorOptions eigenvector;
};

struct PipelineResult {
    ParsedEdgeList input;
    DirectedGraph analysed; // core or full network
    NetworkSummary network_summary;
    NetworkSummary core_summary;
    CentralityTable centrality;
    std::vector<NodeId> candidates;
    std::vector<RankRecord> ranking;
    CorrelationMatrix correlation;
    Recommendation recommendation;
    std::vector<DiffusionTrace> sweep;
};

inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
    PipelineResult r;
    r.input = read_edge_csv(cfg.input_path);
    const DirectedGraph& full = r.input.graph;
    if (full.empty()) throw DataError("input '" + cfg.input_path.string() + "' contains no edges");

    DirectedGraph core = largest_core(full);
    r.network_summary = summarize(full, cfg.threads);
    r.core_summary = summarize(core, cfg.threads);
    r.analysed = cfg.use_core ? std::move(core) : full;

    r.centrality = centrality_table(r.analysed, cfg.eigenvector, cfg.threads);
    r.candidates = select_candidates(r.centrality, cfg.top_k);
    r.ranking = rank_candidates(r.analysed, r.candidates, {cfg.theta, cfg.max_days}, r.centrality, cfg.threads);
    r.correlation = correlation_matrix(r.ranking);
    r.recommendation = recommend(r.ranking);
    r.sweep = threshold_sweep(r.analysed, r.recommendation.node, cfg.thetas_for_sweep, cfg.max_days, cfg.threads);
    return r;
}

/// Report documents keyed by file name. recommendation.json is always JSON.
inline std::map<std::string, std::string> render_reports(const PipelineResult& r, OutputFormat format) {
    std::map<std::string, std::string> files;
    auto json_text = [](const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; };

    if (format == OutputFormat::csv) {
        std::ostringstream summary, centrality, sweep, rank, corr;
        summary << kSummaryCsvHeader << '\n';
        write_summary_csv_row(summary, "network", r.network_summary);
        write_summary_csv_row(summary, "core", r.core_summary);
        write_centrality_csv(centrality, r.centrality);
        write_trace_csv(sweep, r.sweep);
        write_rank_csv(rank, r.ranking);
        write_correlation_csv(corr, r.correlation);
        files["summary.csv"] = summary.str();
        files["centrality.csv"] = centrality.str();
        files["sweep.csv"] = sweep.str();
        files["rank.csv"] = rank.str();
        files["correlation.csv"] = corr.str();
    } else {
        auto sweep = nlohmann::ordered_json::array();
        for (const auto& t : r.sweep) {
            auto entry = to_json(t);
            entry["active_counts"] = t.active_counts;
            sweep.push_back(std::move(entry));
        }
        files["summary.json"] =
            json_text(nlohmann::ordered_json::array({to_json("network", r.network_summary), to_json("core", r.core_summary)}));
        files["centrality.json"] = json_text(to_json(r.centrality));
        files["sweep.json"] = json_text(sweep);
        files["rank.json"] = json_text(to_json(std::span<const RankRecord>(r.ranking)));
        files["correlation.json"] = json_text(to_json(r.correlation));
    }
    files["recommendation.json"] = json_text(to_json(r.recommendation));
    return files;
}

/// Writes every report into `dir`, the recommendation last.
inline void write_reports(const std::map<std::string, std::string>& files, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name, std::ios::binary);
        out << text;
        if (!out) throw DataError("cannot write '" + (dir / name).string() + "'");
    };
    for (const auto& [name, text] : files) {
        if (name != "recommendation.json") write(name, text);
    }
    write("recommendation.json", files.at("recommendation.json"));
}

} // namespace influencer
