#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "lrfhss/acrda.hpp"
#include "lrfhss/engine.hpp"
#include "lrfhss/gateway.hpp"
#include "lrfhss/metrics.hpp"
#include "lrfhss/node.hpp"
#include "lrfhss/params.hpp"
#include "lrfhss/traffic.hpp"

namespace lrfhss {

enum class ReceiverKind { baseline, acrda };

constexpr std::string_view to_string(ReceiverKind r) {
    return r == ReceiverKind::baseline ? "baseline" : "acrda";
}

inline std::optional<ReceiverKind> parse_receiver_kind(std::string_view s) {
    if (s == "baseline") return ReceiverKind::baseline;
    if (s == "acrda") return ReceiverKind::acrda;
    return std::nullopt;
}

// Parameters of one concrete simulation run (a single point of a campaign).
struct ScenarioParams {
    std::uint32_t nodes_sim = 125;
    LinkParams link;
    TrafficSpec traffic;
    ReceiverKind receiver = ReceiverKind::baseline;
    AcrdaParams acrda;
    double sim_time_seconds = 86'400.0;
};

struct SimulationResult {
    RunMetrics metrics;
    std::vector<std::uint64_t> decoded_packet_ids;  // in decode order
    std::shared_ptr<FragmentTrace> trace;           // set when tracing was on
};

// Runs one seeded iteration: builds an engine, a gateway and nodes, lets the
// node processes (and, for ACRDA, the window process) run to the horizon,
// then flushes the receiver and collects the tallies. Node i draws from the
// stream (run_seed, i); the receiver draws nothing, so baseline and ACRDA
// runs with the same seed see identical transmissions.
inline SimulationResult run_simulation(const ScenarioParams& sc, std::uint64_t run_seed,
                                       bool enable_trace = false) {
    Engine engine;
    const SimTime horizon = SimTime::from_seconds(sc.sim_time_seconds);

    std::unique_ptr<Gateway> gateway;
    AcrdaGateway* acrda = nullptr;
    if (sc.receiver == ReceiverKind::acrda) {
        auto g = std::make_unique<AcrdaGateway>(sc.link.region.grid_channels, sc.acrda,
                                                packet_airtime(sc.link.tx, sc.link.region));
        acrda = g.get();
        gateway = std::move(g);
    } else {
        gateway = std::make_unique<Gateway>(sc.link.region.grid_channels);
    }
    gateway->register_nodes(sc.nodes_sim);
    if (enable_trace) gateway->enable_trace();

    std::vector<std::unique_ptr<Node>> nodes;
    nodes.reserve(sc.nodes_sim);
    for (std::uint32_t i = 0; i < sc.nodes_sim; ++i) {
        nodes.push_back(std::make_unique<Node>(i, make_traffic(sc.traffic),
                                               RandomStream(run_seed, i)));
        nodes.back()->start(engine, *gateway, sc.link);
    }
    if (acrda != nullptr) acrda->start_window_process(engine, horizon);

    engine.run_until(horizon);
    gateway->on_run_end(horizon);

    SimulationResult result;
    result.metrics.sim_time_seconds = sc.sim_time_seconds;
    const auto& stats = gateway->node_stats();
    result.metrics.per_node.reserve(stats.size());
    for (std::uint32_t i = 0; i < stats.size(); ++i) {
        result.metrics.per_node.push_back(NodeTally{i, stats[i].transmitted, stats[i].succeeded});
        result.metrics.transmitted += stats[i].transmitted;
        result.metrics.succeeded += stats[i].succeeded;
    }
    result.decoded_packet_ids = gateway->decoded_ids();
    result.trace = gateway->trace();
    return result;
}

}  // namespace lrfhss
