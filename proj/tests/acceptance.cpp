// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "influencer/influencer.hpp"
#include "oracles.hpp"

using namespace influencer;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 1. Score arithmetic on the published (proportion, days) pairs.
Outcome score_arithmetic() {
    Outcome o;
    // the published proportions are six-decimal roundings of counts over a 610-node core
    const double a = spreading_capacity(363.0 / 610.0, 8);
    const double b = spreading_capacity(389.0 / 610.0, 11);
    o.require(std::abs(a - 7.438525) <= 1e-6, "(363/610, 8) gave " + fmt(a, 9));
    o.require(std::abs(b - 5.797317) <= 1e-6, "(389/610, 11) gave " + fmt(b, 9));
    if (o.pass) o.detail = "7.438525 and 5.797317 reproduced";
    return o;
}

// 2. Brandes equals explicit shortest-path enumeration.
Outcome betweenness_oracle() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> size(3, 12);
    std::uniform_real_distribution<double> density(0.1, 0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_digraph(rng, size(rng), density(rng));
        auto expect = oracle::betweenness(g);
        auto got = betweenness_centrality(g, 1 + trial % 4);
        for (std::size_t v = 0; v < got.size(); ++v) worst = std::max(worst, std::abs(got[v] - expect[v]));
    }
    o.require(worst <= 1e-9, "max deviation " + std::to_string(worst));
    if (o.pass) o.detail = "100 digraphs, max deviation " + std::to_string(worst);
    return o;
}

// 3. Eigenvector residual, sign and norm; uniform on symmetric graphs.
Outcome eigenvector_residual() {
    Outcome o;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> size(2, 30);
    std::uniform_real_distribution<double> density(0.02, 0.3);
    const EigenvectorOptions opts{1e-12, 100000, {}};
    double worst_residual = 0.0, worst_norm = 0.0, min_component = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_strongly_connected(rng, size(rng), density(rng));
        auto x = eigenvector_centrality(g, opts);
        double norm = 0.0;
        for (double v : x) {
            norm += v * v;
            min_component = std::min(min_component, v);
        }
        worst_norm = std::max(worst_norm, std::abs(std::sqrt(norm) - 1.0));
        worst_residual = std::max(worst_residual, oracle::eigen_residual(g, x));
    }
    o.require(worst_residual < 1e-8, "residual " + std::to_string(worst_residual));
    o.require(min_component >= 0.0, "negative component " + std::to_string(min_component));
    o.require(worst_norm <= 1e-12, "norm deviation " + std::to_string(worst_norm));

    double worst_uniform = 0.0;
    for (std::size_t n = 2; n <= 30; ++n) {
        for (const auto& g : {oracle::directed_cycle(n), oracle::complete_symmetric(n)}) {
            auto x = eigenvector_centrality(g);
            for (double v : x) worst_uniform = std::max(worst_uniform, std::abs(v - 1.0 / std::sqrt(double(n))));
        }
    }
    o.require(worst_uniform <= 1e-10, "uniform deviation " + std::to_string(worst_uniform));
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "max residual %.2e, norm dev %.2e, uniform dev %.2e", worst_residual, worst_norm,
                      worst_uniform);
        o.detail = buf;
    }
    return o;
}

// 4. Diffusion equals the naive oracle; active sets shrink as theta grows.
Outcome diffusion_oracle() {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> size(2, 50);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int days = 15;
    for (int trial = 0; trial < 200 && o.pass; ++trial) {
        const std::size_t n = size(rng);
        auto g = oracle::random_digraph(rng, n, (1.0 + 4.0 * unit(rng)) / double(n));
        const NodeId seed = std::uniform_int_distribution<NodeId>(0, n - 1)(rng);
        const double theta = trial % 10 == 0 ? 0.0 : unit(rng) * 0.6;
        const double higher = std::min(1.0, theta + unit(rng) * 0.4);

        auto history = oracle::linear_threshold(g, seed, theta, days);
        auto low = linear_threshold_simulate(g, seed, {theta, days});
        auto high = linear_threshold_simulate(g, seed, {higher, days});
        for (std::size_t day = 0; day <= static_cast<std::size_t>(days); ++day) {
            std::size_t count = 0;
            for (std::size_t v = 0; v < n; ++v) {
                const bool active_low = low.activation_day[v] <= day;
                const bool active_high = high.activation_day[v] <= day;
                o.require(active_low == history[day][v], "oracle mismatch in trial " + std::to_string(trial));
                o.require(!active_high || active_low, "monotonicity broken in trial " + std::to_string(trial));
                count += active_low;
            }
            o.require(count == low.trace.active_counts[day], "count mismatch in trial " + std::to_string(trial));
        }
    }
    if (o.pass) o.detail = "200 (graph, seed, theta) triples";
    return o;
}

// 5. Small-world index on the published table values.
Outcome small_world_arithmetic() {
    Outcome o;
    auto v = small_world_sigma(0.13, 4.69, 0.02, 2.48);
    o.require(std::abs(v.sigma - 3.437) <= 1e-3, "sigma " + fmt(v.sigma));
    o.require(v.is_small_world, "verdict not small-world");
    if (o.pass) o.detail = "sigma = " + fmt(v.sigma);
    return o;
}

// 6. Random baseline statistics.
Outcome baseline_statistics() {
    Outcome o;
    const std::size_t n = 874;
    const double p = 0.05;
    const double pairs = n * (n - 1) / 2.0;
    const int draws = 30;
    double sum = 0.0, min_apl = 1e9, max_apl = 0.0;
    for (int s = 0; s < draws; ++s) {
        auto g = gnp_random(n, p, 1000 + s);
        sum += static_cast<double>(g.edge_count());
        const double apl = average_path_length(g, 0);
        min_apl = std::min(min_apl, apl);
        max_apl = std::max(max_apl, apl);
    }
    const double mean = sum / draws;
    const double se = std::sqrt(pairs * p * (1 - p) / draws);
    const double sd = std::sqrt(pairs * p * (1 - p));
    o.require(std::abs(mean - pairs * p) <= 3 * se, "mean edge count " + fmt(mean, 2));
    o.require(std::abs(19059.0 - pairs * p) <= 3 * sd, "published 19059 outside 3 sd");
    o.require(min_apl >= 1.5 && max_apl <= 3.5, "path length range [" + fmt(min_apl) + ", " + fmt(max_apl) + "]");

    auto ws = watts_strogatz(500, 10, 0.05, 7);
    auto er = gnp_random(500, 10.0 / 499.0, 7);
    auto v = small_world_sigma(summarize(ws, 0), summarize(er, 0));
    o.require(v.sigma > 3.0, "watts_strogatz sigma " + fmt(v.sigma));
    if (o.pass) {
        o.detail = "mean edges " + fmt(mean, 2) + " (expect 19075.05 +/- " + fmt(3 * se, 1) + "), APL in [" +
                   fmt(min_apl, 3) + ", " + fmt(max_apl, 3) + "], WS sigma " + fmt(v.sigma, 2);
    }
    return o;
}

// 7. Path metrics equal Floyd-Warshall; clustering equals triangle counting.
Outcome metric_oracles() {
    Outcome o;
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> size(2, 10);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    int compared = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_digraph(rng, size(rng), density(rng));
        auto expect = oracle::path_oracle(g);
        auto clustering = local_clustering(g);
        auto tri = oracle::clustering(g);
        for (std::size_t v = 0; v < tri.size(); ++v)
            o.require(clustering[v] == tri[v], "clustering mismatch in trial " + std::to_string(trial));
        double mean = 0.0;
        for (double c : tri) mean += c;
        mean /= double(tri.size());
        o.require(std::abs(average_clustering(g) - mean) <= 1e-15, "average clustering in trial " + std::to_string(trial));

        if (expect.pairs == 0) {
            bool threw = false;
            try {
                average_path_length(g);
            } catch (const DataError&) {
                threw = true;
            }
            o.require(threw, "no-pair graph did not error");
            continue;
        }
        ++compared;
        o.require(average_path_length(g) == double(expect.sum) / double(expect.pairs),
                  "path length mismatch in trial " + std::to_string(trial));
        o.require(static_cast<int>(diameter(g)) == expect.diameter, "diameter mismatch in trial " + std::to_string(trial));
    }
    if (o.pass) o.detail = "100 digraphs (" + std::to_string(compared) + " with reachable pairs)";
    return o;
}

// 8. CLI pipeline is byte-stable across runs and thread counts; golden answer.
Outcome end_to_end_determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "influencer_acceptance";
    fs::remove_all(root);
    const std::string cli = INFLUENCER_CLI;
    const std::string input = std::string(INFLUENCER_TEST_DATA) + "/fixture12.csv";

    std::vector<std::pair<std::string, std::string>> runs{
        {"a", "--threads 1"}, {"b", "--threads 1"}, {"c", "--threads 4"}, {"d", "--threads 0"}};
    for (const auto& fmt_name : {"csv", "json"}) {
        std::vector<std::map<std::string, std::string>> outputs;
        for (const auto& [name, flags] : runs) {
            const fs::path dir = root / (std::string(fmt_name) + name);
            const std::string cmd = "\"" + cli + "\" pipeline --input \"" + input + "\" --format " + fmt_name + " " +
                                    flags + " --out \"" + dir.string() + "\" > /dev/null";
            const int rc = std::system(cmd.c_str());
            o.require(rc == 0, "pipeline exited with " + std::to_string(rc));
            std::map<std::string, std::string> files;
            if (fs::exists(dir))
                for (const auto& entry : fs::directory_iterator(dir))
                    files[entry.path().filename().string()] = slurp(entry.path());
            o.require(files.size() == 6, "expected 6 report files, got " + std::to_string(files.size()));
            outputs.push_back(std::move(files));
        }
        for (std::size_t i = 1; i < outputs.size(); ++i) o.require(outputs[i] == outputs[0], "reports differ between runs");
        if (!outputs.empty() && outputs[0].count("recommendation.json")) {
            o.require(outputs[0]["recommendation.json"] == slurp(std::string(INFLUENCER_TEST_GOLDEN) + "/recommendation.json"),
                      "recommendation differs from golden");
        }
    }

    const int missing = std::system(("\"" + cli + "\" pipeline --input /no/such/file.csv --out \"" +
                                     (root / "missing").string() + "\" 2> /dev/null")
                                        .c_str());
    o.require(missing != 0, "missing input did not fail");
    fs::remove_all(root);
    if (o.pass) o.detail = "8 runs byte-identical, recommendation = golden node 1";
    return o;
}

// 9. Correlation matrix properties.
Outcome correlation_properties() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> deg(0, 80), days(1, 15), count(3, 40);
    std::uniform_real_distribution<double> unit(0.0, 1.0), scale(0.1, 10.0), shift(-5.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RankRecord> records;
        const std::size_t m = count(rng);
        for (std::size_t i = 0; i < m; ++i) {
            RankRecord r{i * 3 + deg(rng) % 3, deg(rng), deg(rng), unit(rng), unit(rng) * 0.2, days(rng), unit(rng), 0.0};
            r.score = spreading_capacity(r.proportion_reached, r.days_required);
            records.push_back(r);
        }
        auto cm = correlation_matrix(records);
        const std::size_t k = cm.labels.size();
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                const auto& v = cm.values[a][b];
                o.require(v == cm.values[b][a], "asymmetric");
                if (!v) continue;
                o.require(*v >= -1.0 && *v <= 1.0, "entry outside [-1, 1]");
                if (a == b) o.require(*v == 1.0, "diagonal not 1");
            }
        }
        // rescale one column positively and compare its row
        const double s = scale(rng), c = shift(rng);
        auto scaled = records;
        for (auto& r : scaled) r.proportion_reached = s * r.proportion_reached + c;
        auto cm2 = correlation_matrix(scaled);
        for (std::size_t b = 0; b < k; ++b) {
            const auto& before = cm.values[6][b];
            const auto& after = cm2.values[6][b];
            o.require(before.has_value() == after.has_value(), "definedness changed under rescaling");
            if (before && after) worst = std::max(worst, std::abs(*before - *after));
        }
    }
    o.require(worst <= 1e-12, "affine deviation " + std::to_string(worst));
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "100 record sets, affine deviation %.2e", worst);
        o.detail = buf;
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1 score arithmetic", score_arithmetic},
        {"AC2 betweenness oracle", betweenness_oracle},
        {"AC3 eigenvector residual", eigenvector_residual},
        {"AC4 diffusion oracle + monotonicity", diffusion_oracle},
        {"AC5 small-world arithmetic", small_world_arithmetic},
        {"AC6 baseline statistics", baseline_statistics},
        {"AC7 metric oracles", metric_oracles},
        {"AC8 end-to-end determinism", end_to_end_determinism},
        {"AC9 correlation properties", correlation_properties},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %-38s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
