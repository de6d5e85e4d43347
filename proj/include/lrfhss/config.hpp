#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrfhss/params.hpp"
#include "lrfhss/simulation.hpp"
#include "lrfhss/traffic.hpp"

namespace lrfhss {

enum class OutputFormat { csv, json };

constexpr std::string_view to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    return std::nullopt;
}

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complete campaign configuration. Defaults reproduce the reference
// scenario: DR8 (3 headers, CR 1/3), 20-byte payload, 24 h horizon,
// 100 iterations, T = 900 s, one 35-channel grid reported x8, ACRDA window
// 2 / step 0.5, markov2 p = 0.99998 / q = 0.15.
struct ScenarioConfig {
    std::vector<std::uint32_t> nodes_sim = {125};  // sweep list, one scenario each
    std::uint32_t grid_channels = 35;
    std::uint32_t grid_multiplier = 8;
    std::uint32_t header_copies = 3;
    CodingRate coding_rate = CodingRate::one_third;
    std::uint32_t payload_bytes = 20;
    double sim_time = 86'400.0;  // seconds
    std::uint32_t iterations = 100;
    double mean_interval = 900.0;  // seconds
    TrafficKind traffic = TrafficKind::exponential;
    std::optional<double> sigma;  // constant_drift; defaults to mean_interval / 100
    double markov_p = 0.99998;
    double markov_q = 0.15;
    ReceiverKind receiver = ReceiverKind::baseline;
    AcrdaParams acrda;
    std::uint32_t hop_min_separation = 0;  // 0 = adjacent-distinct only
    std::uint64_t master_seed = 1;
    std::string output;  // empty = stdout
    OutputFormat format = OutputFormat::csv;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] inline void fail(std::size_t line, std::string_view key, std::string_view what) {
    throw ConfigError("config line " + std::to_string(line) + ": key '" + std::string(key) +
                      "': " + std::string(what));
}

inline double parse_double(std::size_t line, std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) fail(line, key, "invalid number");
    return out;
}

inline std::uint64_t parse_u64(std::size_t line, std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) fail(line, key, "invalid integer");
    return out;
}

inline std::uint32_t parse_u32(std::size_t line, std::string_view key, std::string_view v) {
    const std::uint64_t out = parse_u64(line, key, v);
    if (out > 0xffffffffull) fail(line, key, "value out of range");
    return static_cast<std::uint32_t>(out);
}

inline std::vector<std::uint32_t> parse_u32_list(std::size_t line, std::string_view key,
                                                 std::string_view v) {
    std::vector<std::uint32_t> out;
    while (!v.empty()) {
        const std::size_t comma = v.find(',');
        const std::string_view item = trim(v.substr(0, comma));
        if (item.empty()) fail(line, key, "empty list element");
        out.push_back(parse_u32(line, key, item));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    if (out.empty()) fail(line, key, "empty list");
    return out;
}

}  // namespace detail

// Post-parse validation; also applied after CLI overrides.
inline void validate_config(const ScenarioConfig& cfg) {
    auto reject = [](std::string_view what) { throw ConfigError(std::string(what)); };
    if (cfg.nodes_sim.empty()) reject("nodes_sim: at least one value required");
    for (auto n : cfg.nodes_sim) {
        if (n == 0) reject("nodes_sim: values must be >= 1");
    }
    if (cfg.grid_channels != 35 && cfg.grid_channels != 86) {
        reject("grid_channels: must be 35 or 86");
    }
    if (cfg.grid_multiplier == 0) reject("grid_multiplier: must be >= 1");
    if (cfg.header_copies != 2 && cfg.header_copies != 3) {
        reject("header_copies: must be 2 or 3");
    }
    if (cfg.payload_bytes == 0 || cfg.payload_bytes > 255) {
        reject("payload_bytes: must be in [1, 255]");
    }
    if (!(cfg.sim_time > 0.0)) reject("sim_time: must be > 0");
    if (cfg.iterations == 0) reject("iterations: must be >= 1");
    if (!(cfg.mean_interval > 0.0)) reject("mean_interval: must be > 0");
    if (cfg.sigma && !(*cfg.sigma >= 0.0)) reject("sigma: must be >= 0");
    if (!(cfg.markov_p > 0.0 && cfg.markov_p < 1.0)) reject("markov_p: must be in (0, 1)");
    if (!(cfg.markov_q > 0.0 && cfg.markov_q <= 1.0)) reject("markov_q: must be in (0, 1]");
    if (!(cfg.acrda.window_norm >= 1.0)) reject("acrda_window: must be >= 1");
    if (!(cfg.acrda.step_norm > 0.0 && cfg.acrda.step_norm <= cfg.acrda.window_norm)) {
        reject("acrda_step: must be in (0, acrda_window]");
    }
    if (cfg.hop_min_separation != 0 && 2ull * cfg.hop_min_separation > cfg.grid_channels) {
        reject("hop_min_separation: too large for the channel grid");
    }
}

// Parses the flat `key = value` campaign format: one assignment per line,
// '#' starts a comment, unknown keys are rejected, later assignments win.
// nodes_sim accepts a comma-separated sweep list. An empty file yields the
// full default configuration.
inline ScenarioConfig parse_config(std::string_view text) {
    using namespace detail;
    ScenarioConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (nl == std::string_view::npos) {
            text = {};
        } else {
            text.remove_prefix(nl + 1);
        }
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, key, "missing key");
        if (value.empty()) fail(line_no, key, "missing value");

        if (key == "nodes_sim") {
            cfg.nodes_sim = parse_u32_list(line_no, key, value);
        } else if (key == "grid_channels") {
            cfg.grid_channels = parse_u32(line_no, key, value);
        } else if (key == "grid_multiplier") {
            cfg.grid_multiplier = parse_u32(line_no, key, value);
        } else if (key == "header_copies") {
            cfg.header_copies = parse_u32(line_no, key, value);
        } else if (key == "coding_rate") {
            const auto cr = parse_coding_rate(value);
            if (!cr) fail(line_no, key, "expected 1/3 or 2/3");
            cfg.coding_rate = *cr;
        } else if (key == "payload_bytes") {
            cfg.payload_bytes = parse_u32(line_no, key, value);
        } else if (key == "sim_time") {
            cfg.sim_time = parse_double(line_no, key, value);
        } else if (key == "iterations") {
            cfg.iterations = parse_u32(line_no, key, value);
        } else if (key == "mean_interval") {
            cfg.mean_interval = parse_double(line_no, key, value);
        } else if (key == "traffic") {
            const auto k = parse_traffic_kind(value);
            if (!k) fail(line_no, key, "expected exponential|uniform|constant_drift|markov2");
            cfg.traffic = *k;
        } else if (key == "sigma") {
            cfg.sigma = parse_double(line_no, key, value);
        } else if (key == "markov_p") {
            cfg.markov_p = parse_double(line_no, key, value);
        } else if (key == "markov_q") {
            cfg.markov_q = parse_double(line_no, key, value);
        } else if (key == "receiver") {
            const auto r = parse_receiver_kind(value);
            if (!r) fail(line_no, key, "expected baseline or acrda");
            cfg.receiver = *r;
        } else if (key == "acrda_window") {
            cfg.acrda.window_norm = parse_double(line_no, key, value);
        } else if (key == "acrda_step") {
            cfg.acrda.step_norm = parse_double(line_no, key, value);
        } else if (key == "hop_min_separation") {
            cfg.hop_min_separation = parse_u32(line_no, key, value);
        } else if (key == "master_seed") {
            cfg.master_seed = parse_u64(line_no, key, value);
        } else if (key == "output") {
            cfg.output = std::string(value);
        } else if (key == "format") {
            const auto f = parse_output_format(value);
            if (!f) fail(line_no, key, "expected csv or json");
            cfg.format = *f;
        } else {
            fail(line_no, key, "unknown key");
        }
    }
    validate_config(cfg);
    return cfg;
}

inline TrafficSpec traffic_spec(const ScenarioConfig& cfg) {
    TrafficSpec spec;
    spec.kind = cfg.traffic;
    spec.mean_interval = cfg.mean_interval;
    spec.sigma = cfg.sigma.value_or(cfg.mean_interval / 100.0);
    spec.markov_stay_idle = cfg.markov_p;
    spec.markov_exit_transmit = cfg.markov_q;
    return spec;
}

// One concrete scenario of the sweep, for the given simulated node count.
inline ScenarioParams make_scenario(const ScenarioConfig& cfg, std::uint32_t nodes) {
    ScenarioParams sc;
    sc.nodes_sim = nodes;
    sc.link.tx.header_copies = cfg.header_copies;
    sc.link.tx.coding_rate = cfg.coding_rate;
    sc.link.tx.payload_bytes = cfg.payload_bytes;
    sc.link.region.grid_channels = cfg.grid_channels;
    sc.link.region.grid_multiplier = cfg.grid_multiplier;
    sc.link.hop_min_separation = cfg.hop_min_separation == 0 ? 1 : cfg.hop_min_separation;
    sc.traffic = traffic_spec(cfg);
    sc.receiver = cfg.receiver;
    sc.acrda = cfg.acrda;
    sc.sim_time_seconds = cfg.sim_time;
    return sc;
}

}  // namespace lrfhss
