// Command-line front end: one subcommand per analysis stage plus `pipeline`.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "influencer/influencer.hpp"

namespace {

using namespace influencer;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNonConvergence = 3 };

/// Wraps stdout or a file chosen by --out.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw DataError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

struct GraphOptions {
    std::string input;
    bool full_network = false;
    unsigned threads = 1;

    void attach(CLI::App* app) {
        app->add_option("--input", input, "Edge-list CSV (header, then i,j rows)")->required();
        app->add_flag("--full-network", full_network, "Analyse the whole network instead of its largest core");
        app->add_option("--threads", threads, "Worker threads (0 = hardware)")->capture_default_str();
    }

    /// Loads the edge list and narrows it to the core unless --full-network.
    DirectedGraph load() const {
        auto parsed = read_edge_csv(input);
        if (parsed.self_loops_dropped)
            std::cerr << "warning: dropped " << parsed.self_loops_dropped << " self-loop row(s)\n";
        if (parsed.duplicates_dropped)
            std::cerr << "warning: dropped " << parsed.duplicates_dropped << " duplicate row(s)\n";
        if (parsed.graph.empty()) throw DataError("input '" + input + "' contains no edges");
        return full_network ? std::move(parsed.graph) : largest_core(parsed.graph);
    }
};

OutputFormat format_from(const std::string& name) { return parse_output_format(name); }

void warn_small(const DirectedGraph& g) {
    if (g.node_count() < 3) std::cerr << "warning: fewer than 3 nodes, betweenness reported as 0\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Influencer detection for directed follow networks"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::uint64_t rng_seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", out_path, "Output file (default stdout)");
    };

    // stats
    GraphOptions stats_graph;
    std::vector<double> baseline_ps;
    auto* stats = app.add_subcommand("stats", "Basic statistics for the network, its core and optional G(n,p) baselines");
    stats_graph.attach(stats);
    stats->add_option("--baseline-p", baseline_ps, "Edge probability of a G(n,p) baseline (repeatable)");
    stats->add_option("--seed", rng_seed, "Random seed for baselines")->capture_default_str();
    add_common(stats);

    // centrality
    GraphOptions cent_graph;
    double tol = 1e-10;
    int max_iter = 1000;
    auto* cent = app.add_subcommand("centrality", "Degree, betweenness and eigenvector centrality table");
    cent_graph.attach(cent);
    cent->add_option("--tol", tol, "Eigenvector convergence tolerance")->capture_default_str();
    cent->add_option("--max-iter", max_iter, "Eigenvector iteration cap")->capture_default_str();
    add_common(cent);

    // sweep
    GraphOptions sweep_graph;
    NodeId sweep_seed = 0;
    std::vector<double> thetas = default_sweep_thetas();
    int sweep_days = 15;
    auto* sweep = app.add_subcommand("sweep", "Linear threshold spreading from one seed over several thresholds");
    sweep_graph.attach(sweep);
    sweep->add_option("--node", sweep_seed, "Seed user")->required();
    sweep->add_option("--thetas", thetas, "Thresholds")->capture_default_str();
    sweep->add_option("--days", sweep_days, "Days to simulate")->capture_default_str();
    add_common(sweep);

    // rank
    GraphOptions rank_graph;
    double rank_theta = 0.1;
    int rank_days = 15;
    std::size_t rank_k = 10;
    auto* rank = app.add_subcommand("rank", "Rank top-k candidates by spreading capacity");
    rank_graph.attach(rank);
    rank->add_option("--theta", rank_theta, "Adoption threshold")->capture_default_str();
    rank->add_option("--days", rank_days, "Days to simulate")->capture_default_str();
    rank->add_option("--k", rank_k, "Top-k per centrality measure")->capture_default_str();
    add_common(rank);

    // correlate
    std::string rank_file;
    auto* correlate = app.add_subcommand("correlate", "Pearson correlation matrix of a rank table");
    correlate->add_option("--rank", rank_file, "Rank CSV as written by `rank`")->required();
    add_common(correlate);

    // baseline
    std::string model = "gnp";
    std::size_t base_n = 0, base_k = 0;
    double base_p = 0.0;
    bool base_summary = false;
    auto* baseline = app.add_subcommand("baseline", "Generate a seeded random baseline graph");
    baseline->add_option("--model", model, "gnp or watts_strogatz")->capture_default_str();
    baseline->add_option("--n", base_n, "Node count")->required();
    baseline->add_option("--p", base_p, "Edge (gnp) or rewiring (watts_strogatz) probability")->required();
    baseline->add_option("--k", base_k, "Lattice degree (watts_strogatz)");
    baseline->add_option("--seed", rng_seed, "Random seed")->capture_default_str();
    baseline->add_flag("--summary", base_summary, "Print the statistics row instead of the edge list");
    add_common(baseline);

    // export
    GraphOptions export_graph_opts;
    std::string export_format = "dot";
    auto* exp = app.add_subcommand("export", "Export the graph for external visualisation tools");
    export_graph_opts.attach(exp);
    exp->add_option("--as", export_format, "dot, graphml or csv")->capture_default_str();
    exp->add_option("--out", out_path, "Output file (default stdout)");

    // pipeline
    PipelineConfig pcfg;
    std::string input_path;
    std::string out_dir = "report";
    bool full_network = false;
    auto* pipeline = app.add_subcommand("pipeline", "Run every stage and write all reports plus the recommendation");
    pipeline->add_option("--input", input_path, "Edge-list CSV")->required();
    pipeline->add_option("--theta", pcfg.theta, "Adoption threshold for ranking")->capture_default_str();
    pipeline->add_option("--days", pcfg.max_days, "Days to simulate")->capture_default_str();
    pipeline->add_option("--k", pcfg.top_k, "Top-k per centrality measure")->capture_default_str();
    pipeline->add_option("--thetas", pcfg.thetas_for_sweep, "Thresholds for the sweep")->capture_default_str();
    pipeline->add_flag("--full-network", full_network, "Analyse the whole network instead of its largest core");
    pipeline->add_option("--seed", pcfg.rng_seed, "Random seed")->capture_default_str();
    pipeline->add_option("--threads", pcfg.threads, "Worker threads (0 = hardware)")->capture_default_str();
    pipeline->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    pipeline->add_option("--out", out_dir, "Report directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const OutputFormat fmt = format_from(format);

        if (*stats) {
            auto parsed = read_edge_csv(stats_graph.input);
            const DirectedGraph& full = parsed.graph;
            if (full.empty()) throw DataError("input '" + stats_graph.input + "' contains no edges");
            const auto network = summarize(full, stats_graph.threads);
            const auto core = summarize(largest_core(full), stats_graph.threads);

            std::vector<std::pair<std::string, NetworkSummary>> rows{{"network", network}, {"core", core}};
            std::vector<std::pair<std::string, SmallWorldVerdict>> verdicts;
            for (std::size_t i = 0; i < baseline_ps.size(); ++i) {
                auto name = "R_" + std::to_string(i + 1);
                auto base = summarize(gnp_random(full.node_count(), baseline_ps[i], rng_seed + i), stats_graph.threads);
                rows.emplace_back(name, base);
                verdicts.emplace_back(name, small_world_sigma(network, base));
            }

            Output out(out_path);
            if (fmt == OutputFormat::csv) {
                out.stream() << kSummaryCsvHeader << '\n';
                for (const auto& [name, s] : rows) write_summary_csv_row(out.stream(), name, s);
                for (const auto& [name, v] : verdicts) {
                    std::cerr << "network vs " << name << ": sigma=" << fixed6(v.sigma)
                              << (v.is_small_world ? " (small world)" : " (not small world)") << '\n';
                }
            } else {
                nlohmann::ordered_json j;
                j["summaries"] = nlohmann::ordered_json::array();
                for (const auto& [name, s] : rows) j["summaries"].push_back(to_json(name, s));
                j["small_world"] = nlohmann::ordered_json::object();
                for (const auto& [name, v] : verdicts) j["small_world"][name] = to_json(v);
                print_json(out.stream(), j);
            }
        } else if (*cent) {
            auto g = cent_graph.load();
            warn_small(g);
            auto table = centrality_table(g, {tol, max_iter, {}}, cent_graph.threads);
            Output out(out_path);
            if (fmt == OutputFormat::csv) write_centrality_csv(out.stream(), table);
            else print_json(out.stream(), to_json(table));
        } else if (*sweep) {
            auto g = sweep_graph.load();
            auto traces = threshold_sweep(g, sweep_seed, thetas, sweep_days, sweep_graph.threads);
            Output out(out_path);
            if (fmt == OutputFormat::csv) {
                write_trace_csv(out.stream(), traces);
            } else {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& t : traces) arr.push_back(to_json(t));
                print_json(out.stream(), arr);
            }
        } else if (*rank) {
            auto g = rank_graph.load();
            warn_small(g);
            auto table = centrality_table(g, {}, rank_graph.threads);
            auto records = rank_candidates(g, select_candidates(table, rank_k), {rank_theta, rank_days}, table,
                                           rank_graph.threads);
            Output out(out_path);
            if (fmt == OutputFormat::csv) write_rank_csv(out.stream(), records);
            else print_json(out.stream(), to_json(std::span<const RankRecord>(records)));
        } else if (*correlate) {
            std::ifstream in(rank_file);
            if (!in) throw DataError("cannot open rank table '" + rank_file + "'");
            auto records = parse_rank_csv(in);
            auto cm = correlation_matrix(records);
            Output out(out_path);
            if (fmt == OutputFormat::csv) write_correlation_csv(out.stream(), cm);
            else print_json(out.stream(), to_json(cm));
        } else if (*baseline) {
            RandomGraphSpec spec{parse_random_model(model), base_n, base_p, base_k, rng_seed};
            auto g = generate(spec);
            Output out(out_path);
            if (!base_summary) {
                write_edge_csv(out.stream(), g);
            } else if (fmt == OutputFormat::csv) {
                out.stream() << kSummaryCsvHeader << '\n';
                write_summary_csv_row(out.stream(), model, summarize(g));
            } else {
                print_json(out.stream(), to_json(model, summarize(g)));
            }
        } else if (*exp) {
            const auto as = parse_export_format(export_format);
            auto g = export_graph_opts.load();
            Output out(out_path);
            export_graph(out.stream(), g, as);
        } else if (*pipeline) {
            pcfg.input_path = input_path;
            pcfg.use_core = !full_network;
            pcfg.output_format = fmt;
            auto result = run_pipeline(pcfg);
            if (result.input.self_loops_dropped)
                std::cerr << "warning: dropped " << result.input.self_loops_dropped << " self-loop row(s)\n";
            if (result.input.duplicates_dropped)
                std::cerr << "warning: dropped " << result.input.duplicates_dropped << " duplicate row(s)\n";
            write_reports(render_reports(result, fmt), out_dir);
            std::cout << "recommended node " << result.recommendation.node << " (score "
                      << fixed6(result.recommendation.score) << ")\n";
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    }
    return kOk;
}
