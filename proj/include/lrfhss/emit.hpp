#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrfhss/campaign.hpp"

namespace lrfhss {

// Ratios and rates are serialized with fixed 6-decimal formatting so output
// files are stable golden-test targets.
inline std::string fmt_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::string fmt_opt6(const std::optional<double>& v) {
    return v ? fmt_fixed6(*v) : std::string();
}

inline constexpr const char* kRowsCsvHeader =
    "scenario_id,iteration,receiver,traffic,n_sim,n_reported,transmitted,succeeded,"
    "success_rate,throughput_pps,goodput_pps,master_seed";

inline void write_rows_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
    os << kRowsCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        os << r.scenario_id << ',' << r.iteration << ',' << r.receiver << ',' << r.traffic
           << ',' << r.n_sim << ',' << r.n_reported << ',' << r.transmitted << ','
           << r.succeeded << ',' << fmt_opt6(r.success_rate) << ','
           << fmt_fixed6(r.throughput_pps) << ',' << fmt_fixed6(r.goodput_pps) << ','
           << r.master_seed << '\n';
    }
}

inline void write_nodes_csv(const std::vector<NodeRow>& rows, std::ostream& os) {
    os << "scenario_id,iteration,node_id,transmitted,succeeded,success_rate\n";
    for (const NodeRow& r : rows) {
        os << r.scenario_id << ',' << r.iteration << ',' << r.node_id << ',' << r.transmitted
           << ',' << r.succeeded << ',' << fmt_opt6(r.success_rate) << '\n';
    }
}

inline void write_aggregates_csv(const std::vector<ScenarioAggregate>& aggs, std::ostream& os) {
    os << "scenario_id,receiver,traffic,n_sim,n_reported,iterations,mean_success,"
          "pooled_success,success_stddev,mean_throughput_pps,mean_goodput_pps\n";
    for (const ScenarioAggregate& a : aggs) {
        os << a.scenario_id << ',' << a.receiver << ',' << a.traffic << ',' << a.agg.n_sim
           << ',' << a.agg.n_reported << ',' << a.agg.iterations << ','
           << fmt_fixed6(a.agg.mean_success) << ',' << fmt_fixed6(a.agg.pooled_success) << ','
           << fmt_fixed6(a.agg.success_stddev) << ','
           << fmt_fixed6(a.agg.mean_throughput_pps) << ','
           << fmt_fixed6(a.agg.mean_goodput_pps) << '\n';
    }
}

namespace detail {

// Ratio fields carry the same 6-decimal rounding as the CSV output.
inline double round6(double v) { return std::round(v * 1e6) / 1e6; }

inline nlohmann::ordered_json row_json(const ResultRow& r) {
    nlohmann::ordered_json j;
    j["scenario_id"] = r.scenario_id;
    j["iteration"] = r.iteration;
    j["receiver"] = r.receiver;
    j["traffic"] = r.traffic;
    j["n_sim"] = r.n_sim;
    j["n_reported"] = r.n_reported;
    j["transmitted"] = r.transmitted;
    j["succeeded"] = r.succeeded;
    if (r.success_rate) {
        j["success_rate"] = round6(*r.success_rate);
    } else {
        j["success_rate"] = nullptr;
    }
    j["throughput_pps"] = round6(r.throughput_pps);
    j["goodput_pps"] = round6(r.goodput_pps);
    j["master_seed"] = r.master_seed;
    return j;
}

inline nlohmann::ordered_json aggregate_json(const ScenarioAggregate& a) {
    nlohmann::ordered_json j;
    j["scenario_id"] = a.scenario_id;
    j["receiver"] = a.receiver;
    j["traffic"] = a.traffic;
    j["n_sim"] = a.agg.n_sim;
    j["n_reported"] = a.agg.n_reported;
    j["iterations"] = a.agg.iterations;
    j["mean_success"] = round6(a.agg.mean_success);
    j["pooled_success"] = round6(a.agg.pooled_success);
    j["success_stddev"] = round6(a.agg.success_stddev);
    j["mean_throughput_pps"] = round6(a.agg.mean_throughput_pps);
    j["mean_goodput_pps"] = round6(a.agg.mean_goodput_pps);
    return j;
}

}  // namespace detail

// JSON document mirroring the CSV fields: an array of row objects plus the
// per-scenario aggregates (and per-node rows when collected).
inline std::string to_json(const CampaignResult& result, bool include_nodes = false) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ResultRow& r : result.rows) doc["rows"].push_back(detail::row_json(r));
    doc["aggregates"] = nlohmann::ordered_json::array();
    for (const ScenarioAggregate& a : result.aggregates) {
        doc["aggregates"].push_back(detail::aggregate_json(a));
    }
    if (include_nodes) {
        doc["nodes"] = nlohmann::ordered_json::array();
        for (const NodeRow& r : result.node_rows) {
            nlohmann::ordered_json j;
            j["scenario_id"] = r.scenario_id;
            j["iteration"] = r.iteration;
            j["node_id"] = r.node_id;
            j["transmitted"] = r.transmitted;
            j["succeeded"] = r.succeeded;
            if (r.success_rate) {
                j["success_rate"] = detail::round6(*r.success_rate);
            } else {
                j["success_rate"] = nullptr;
            }
            doc["nodes"].push_back(j);
        }
    }
    return doc.dump(2) + "\n";
}

}  // namespace lrfhss
