#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lrfhss/config.hpp"
#include "lrfhss/metrics.hpp"
#include "lrfhss/random.hpp"
#include "lrfhss/simulation.hpp"

namespace lrfhss {

// One output row per (scenario, iteration).
struct ResultRow {
    std::uint32_t scenario_id = 0;  // position in the sweep
    std::uint32_t iteration = 0;
    std::string receiver;
    std::string traffic;
    std::uint32_t n_sim = 0;
    std::uint32_t n_reported = 0;
    std::uint64_t transmitted = 0;
    std::uint64_t succeeded = 0;
    std::optional<double> success_rate;  // absent when nothing was transmitted
    double throughput_pps = 0.0;
    double goodput_pps = 0.0;
    std::uint64_t master_seed = 0;
};

struct NodeRow {
    std::uint32_t scenario_id = 0;
    std::uint32_t iteration = 0;
    std::uint32_t node_id = 0;
    std::uint64_t transmitted = 0;
    std::uint64_t succeeded = 0;
    std::optional<double> success_rate;
};

struct ScenarioAggregate {
    std::uint32_t scenario_id = 0;
    std::string receiver;
    std::string traffic;
    Aggregate agg;
};

struct CampaignResult {
    std::vector<ResultRow> rows;                 // sorted by (scenario_id, iteration)
    std::vector<ScenarioAggregate> aggregates;   // one per scenario
    std::vector<NodeRow> node_rows;              // filled when per_node is set
    // (label, trace) per run, label "s<scenario>_it<iteration>"
    std::vector<std::pair<std::string, std::shared_ptr<FragmentTrace>>> traces;
};

struct CampaignOptions {
    unsigned workers = 1;
    bool per_node = false;
    bool trace = false;
};

// Seed of one iteration. The scenario salt is the swept node count, not the
// sweep position, so dropping an entry from the sweep leaves every other
// scenario's results untouched.
inline std::uint64_t run_seed(std::uint64_t master_seed, std::uint32_t nodes_sim,
                              std::uint32_t iteration) {
    return derive_seed(derive_seed(master_seed, nodes_sim), iteration);
}

// Runs iterations x sweep, optionally on several worker threads. Each task
// owns an independent engine; results land in preassigned slots and rows
// are assembled in index order, so the output is identical for any worker
// count or scheduling.
inline CampaignResult run_campaign(const ScenarioConfig& cfg, const CampaignOptions& opts = {}) {
    validate_config(cfg);
    const std::size_t n_scenarios = cfg.nodes_sim.size();
    const std::size_t n_tasks = n_scenarios * cfg.iterations;
    std::vector<SimulationResult> slots(n_tasks);

    auto task = [&](std::size_t t) {
        const std::uint32_t scenario = static_cast<std::uint32_t>(t / cfg.iterations);
        const std::uint32_t iter = static_cast<std::uint32_t>(t % cfg.iterations);
        const ScenarioParams sc = make_scenario(cfg, cfg.nodes_sim[scenario]);
        const std::uint64_t seed = run_seed(cfg.master_seed, sc.nodes_sim, iter);
        slots[t] = run_simulation(sc, seed, opts.trace);
        slots[t].metrics.iteration = iter;
    };

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || n_tasks <= 1) {
        for (std::size_t t = 0; t < n_tasks; ++t) task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned count = static_cast<unsigned>(
            std::min<std::size_t>(workers, n_tasks));
        pool.reserve(count);
        for (unsigned w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < n_tasks; t = next.fetch_add(1)) {
                    task(t);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    CampaignResult out;
    out.rows.reserve(n_tasks);
    for (std::size_t s = 0; s < n_scenarios; ++s) {
        const std::uint32_t scenario_id = static_cast<std::uint32_t>(s);
        std::vector<RunMetrics> runs;
        runs.reserve(cfg.iterations);
        for (std::uint32_t it = 0; it < cfg.iterations; ++it) {
            const SimulationResult& r = slots[s * cfg.iterations + it];
            runs.push_back(r.metrics);

            ResultRow row;
            row.scenario_id = scenario_id;
            row.iteration = it;
            row.receiver = std::string(to_string(cfg.receiver));
            row.traffic = std::string(to_string(cfg.traffic));
            row.n_sim = cfg.nodes_sim[s];
            row.n_reported = cfg.nodes_sim[s] * cfg.grid_multiplier;
            row.transmitted = r.metrics.transmitted;
            row.succeeded = r.metrics.succeeded;
            row.success_rate = network_success(r.metrics);
            row.throughput_pps = throughput_pps(r.metrics);
            row.goodput_pps = goodput_pps(r.metrics);
            row.master_seed = cfg.master_seed;
            out.rows.push_back(std::move(row));

            if (opts.per_node) {
                for (const NodeTally& n : r.metrics.per_node) {
                    NodeRow nr;
                    nr.scenario_id = scenario_id;
                    nr.iteration = it;
                    nr.node_id = n.node_id;
                    nr.transmitted = n.transmitted;
                    nr.succeeded = n.succeeded;
                    if (n.transmitted > 0) {
                        nr.success_rate = static_cast<double>(n.succeeded) /
                                          static_cast<double>(n.transmitted);
                    }
                    out.node_rows.push_back(nr);
                }
            }
            if (opts.trace && r.trace) {
                out.traces.emplace_back(
                    "s" + std::to_string(scenario_id) + "_it" + std::to_string(it), r.trace);
            }
        }
        ScenarioAggregate sa;
        sa.scenario_id = scenario_id;
        sa.receiver = std::string(to_string(cfg.receiver));
        sa.traffic = std::string(to_string(cfg.traffic));
        sa.agg = aggregate(runs);
        sa.agg.n_sim = cfg.nodes_sim[s];
        sa.agg.n_reported = cfg.nodes_sim[s] * cfg.grid_multiplier;
        out.aggregates.push_back(std::move(sa));
    }
    return out;
}

}  // namespace lrfhss
