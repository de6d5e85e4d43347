// Batch front-end: runs a simulation campaign described by a config file
// and/or flags and emits machine-readable results.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrfhss/lrfhss.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// "results.csv" -> "results_nodes.csv" etc.
std::string with_suffix(const std::string& path, const std::string& suffix,
                        const std::string& ext) {
    const std::size_t dot = path.rfind('.');
    const std::size_t slash = path.rfind('/');
    const bool has_ext = dot != std::string::npos &&
                         (slash == std::string::npos || dot > slash);
    const std::string stem = has_ext ? path.substr(0, dot) : path;
    return stem + suffix + ext;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LR-FHSS uplink network simulator (batch campaigns)"};

    std::string config_path;
    std::vector<std::uint32_t> nodes;
    std::optional<std::uint32_t> iterations;
    std::optional<double> sim_time;
    std::optional<std::string> traffic_name;
    std::optional<std::string> receiver_name;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    bool per_node = false;
    bool trace = false;
    std::optional<std::string> output;
    std::optional<std::string> format_name;

    app.add_option("--config", config_path, "Campaign config file (key = value lines)")
        ->check(CLI::ExistingFile);
    app.add_option("--nodes", nodes,
                   "Simulated node count(s); a comma-separated list sweeps scenarios")
        ->delimiter(',');
    app.add_option("--iterations", iterations, "Iterations per scenario");
    app.add_option("--sim-time", sim_time, "Simulated horizon in seconds");
    app.add_option("--traffic", traffic_name,
                   "Traffic model: exponential|uniform|constant_drift|markov2");
    app.add_option("--receiver", receiver_name, "Receiver: baseline|acrda");
    app.add_option("--seed", seed, "Master seed (unsigned 64-bit)");
    app.add_option("--workers", workers, "Worker threads for the iteration campaign");
    app.add_flag("--per-node", per_node, "Also emit per-node tallies (needs --output)");
    app.add_flag("--trace", trace, "Also emit per-run fragment traces (needs --output)");
    app.add_option("--output", output, "Output path (default: results to stdout)");
    app.add_option("--format", format_name, "Output format: csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        lrfhss::ScenarioConfig cfg =
            config_path.empty() ? lrfhss::ScenarioConfig{}
                                : lrfhss::parse_config(read_file(config_path));

        // Flags override config file values.
        if (!nodes.empty()) cfg.nodes_sim = nodes;
        if (iterations) cfg.iterations = *iterations;
        if (sim_time) cfg.sim_time = *sim_time;
        if (traffic_name) {
            const auto k = lrfhss::parse_traffic_kind(*traffic_name);
            if (!k) throw lrfhss::ConfigError("--traffic: unknown model '" + *traffic_name + "'");
            cfg.traffic = *k;
        }
        if (receiver_name) {
            const auto r = lrfhss::parse_receiver_kind(*receiver_name);
            if (!r) {
                throw lrfhss::ConfigError("--receiver: unknown receiver '" + *receiver_name +
                                          "'");
            }
            cfg.receiver = *r;
        }
        if (seed) cfg.master_seed = *seed;
        if (output) cfg.output = *output;
        if (format_name) {
            const auto f = lrfhss::parse_output_format(*format_name);
            if (!f) throw lrfhss::ConfigError("--format: expected csv or json");
            cfg.format = *f;
        }
        lrfhss::validate_config(cfg);

        if (cfg.output.empty() && (per_node || trace)) {
            throw lrfhss::ConfigError("--per-node and --trace require --output");
        }

        lrfhss::CampaignOptions opts;
        opts.workers = workers;
        opts.per_node = per_node;
        opts.trace = trace;
        const lrfhss::CampaignResult result = lrfhss::run_campaign(cfg, opts);

        if (cfg.format == lrfhss::OutputFormat::json) {
            const std::string doc = lrfhss::to_json(result, per_node);
            if (cfg.output.empty()) {
                std::cout << doc;
            } else {
                write_file(cfg.output, doc);
            }
        } else {
            std::ostringstream rows;
            lrfhss::write_rows_csv(result.rows, rows);
            if (cfg.output.empty()) {
                std::cout << rows.str();
                std::ostringstream aggs;
                lrfhss::write_aggregates_csv(result.aggregates, aggs);
                std::cerr << aggs.str();
            } else {
                write_file(cfg.output, rows.str());
                std::ostringstream aggs;
                lrfhss::write_aggregates_csv(result.aggregates, aggs);
                write_file(with_suffix(cfg.output, "_aggregate", ".csv"), aggs.str());
                if (per_node) {
                    std::ostringstream nodes_csv;
                    lrfhss::write_nodes_csv(result.node_rows, nodes_csv);
                    write_file(with_suffix(cfg.output, "_nodes", ".csv"), nodes_csv.str());
                }
            }
        }
        if (trace) {
            for (const auto& [label, tr] : result.traces) {
                std::ostringstream tcsv;
                tr->write_csv(tcsv);
                write_file(with_suffix(cfg.output, "_trace_" + label, ".csv"), tcsv.str());
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
