#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace lrfhss {

struct NodeTally {
    std::uint32_t node_id = 0;
    std::uint64_t transmitted = 0;
    std::uint64_t succeeded = 0;
};

// Outcome counts of one simulation run.
struct RunMetrics {
    std::uint32_t iteration = 0;
    std::uint64_t transmitted = 0;
    std::uint64_t succeeded = 0;
    double sim_time_seconds = 0.0;
    std::vector<NodeTally> per_node;
};

// Network average success: succeeded / transmitted. Undefined (absent, not
// zero) when the run carried no traffic.
inline std::optional<double> network_success(const RunMetrics& run) {
    if (run.transmitted == 0) return std::nullopt;
    return static_cast<double>(run.succeeded) / static_cast<double>(run.transmitted);
}

// Offered load in packets per second: transmitted (not decoded) packets
// over time, so the reported throughput tracks the configured arrival rate.
inline double throughput_pps(const RunMetrics& run) {
    return static_cast<double>(run.transmitted) / run.sim_time_seconds;
}

inline double goodput_pps(const RunMetrics& run) {
    return static_cast<double>(run.succeeded) / run.sim_time_seconds;
}

struct CdfPoint {
    double success_ratio = 0.0;
    double cumulative = 0.0;  // empirical CDF value i/n
};

// Pools per-node success ratios over all runs (one sample per node per run;
// nodes that never transmitted contribute nothing) and attaches empirical
// CDF values to the sorted samples.
inline std::vector<CdfPoint> node_success_cdf(const std::vector<RunMetrics>& runs) {
    std::vector<double> samples;
    for (const RunMetrics& run : runs) {
        for (const NodeTally& n : run.per_node) {
            if (n.transmitted == 0) continue;
            samples.push_back(static_cast<double>(n.succeeded) /
                              static_cast<double>(n.transmitted));
        }
    }
    std::sort(samples.begin(), samples.end());
    std::vector<CdfPoint> cdf;
    cdf.reserve(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        cdf.push_back(CdfPoint{samples[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

// Cross-iteration aggregate. Both averaging conventions are reported:
// mean_success averages per-run ratios, pooled_success is the ratio of
// pooled sums; they differ only through per-run traffic heterogeneity.
struct Aggregate {
    std::uint32_t n_sim = 0;
    std::uint32_t n_reported = 0;  // grid_multiplier * n_sim
    std::size_t iterations = 0;
    double mean_success = 0.0;
    double pooled_success = 0.0;
    double success_stddev = 0.0;  // sample stddev of per-run ratios
    double mean_throughput_pps = 0.0;
    double mean_goodput_pps = 0.0;
    std::vector<CdfPoint> cdf_samples;
};

inline double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline Aggregate aggregate(const std::vector<RunMetrics>& runs) {
    Aggregate agg;
    agg.iterations = runs.size();
    std::vector<double> ratios;
    std::uint64_t total_tx = 0;
    std::uint64_t total_ok = 0;
    double tp = 0.0;
    double gp = 0.0;
    for (const RunMetrics& run : runs) {
        if (auto s = network_success(run)) ratios.push_back(*s);
        total_tx += run.transmitted;
        total_ok += run.succeeded;
        tp += throughput_pps(run);
        gp += goodput_pps(run);
    }
    if (!ratios.empty()) {
        double sum = 0.0;
        for (double r : ratios) sum += r;
        agg.mean_success = sum / static_cast<double>(ratios.size());
        agg.success_stddev = sample_stddev(ratios);
    }
    if (total_tx > 0) {
        agg.pooled_success = static_cast<double>(total_ok) / static_cast<double>(total_tx);
    }
    if (!runs.empty()) {
        agg.mean_throughput_pps = tp / static_cast<double>(runs.size());
        agg.mean_goodput_pps = gp / static_cast<double>(runs.size());
    }
    agg.cdf_samples = node_success_cdf(runs);
    return agg;
}

}  // namespace lrfhss
