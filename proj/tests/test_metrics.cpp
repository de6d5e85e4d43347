#include <catch2/catch_amalgamated.hpp>

#include "lrfhss/metrics.hpp"

using namespace lrfhss;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

RunMetrics run_of(std::uint64_t tx, std::uint64_t ok, double secs = 3600.0) {
    RunMetrics r;
    r.transmitted = tx;
    r.succeeded = ok;
    r.sim_time_seconds = secs;
    return r;
}

}  // namespace

TEST_CASE("network success ratio and the zero-traffic guard") {
    REQUIRE(network_success(run_of(100, 80)) == 0.8);
    REQUIRE(network_success(run_of(100, 0)) == 0.0);
    REQUIRE_FALSE(network_success(run_of(0, 0)).has_value());
}

TEST_CASE("throughput is offered load; goodput decoded load") {
    const RunMetrics r = run_of(100, 50, 3600.0);
    REQUIRE_THAT(throughput_pps(r), WithinRel(0.0277778, 1e-4));
    REQUIRE_THAT(goodput_pps(r), WithinRel(0.0138889, 1e-4));
    REQUIRE(throughput_pps(run_of(0, 0)) == 0.0);
}

TEST_CASE("per-node CDF pools, sorts and excludes silent nodes") {
    RunMetrics r1;
    r1.sim_time_seconds = 1.0;
    r1.per_node = {{0, 2, 2}, {1, 2, 1}, {2, 0, 0}};
    RunMetrics r2;
    r2.sim_time_seconds = 1.0;
    r2.per_node = {{0, 4, 2}};
    const auto cdf = node_success_cdf({r1, r2});
    REQUIRE(cdf.size() == 3);  // the silent node contributes nothing
    REQUIRE(cdf[0].success_ratio == 0.5);
    REQUIRE_THAT(cdf[0].cumulative, WithinRel(1.0 / 3.0, 1e-12));
    REQUIRE(cdf[1].success_ratio == 0.5);
    REQUIRE_THAT(cdf[1].cumulative, WithinRel(2.0 / 3.0, 1e-12));
    REQUIRE(cdf[2].success_ratio == 1.0);
    REQUIRE(cdf[2].cumulative == 1.0);
}

TEST_CASE("degenerate CDF when every node is perfect") {
    RunMetrics r;
    r.per_node = {{0, 3, 3}, {1, 5, 5}};
    const auto cdf = node_success_cdf({r});
    for (const auto& p : cdf) REQUIRE(p.success_ratio == 1.0);
}

TEST_CASE("aggregate means and sample stddev") {
    const auto single = aggregate({run_of(100, 80)});
    REQUIRE(single.mean_success == 0.8);
    REQUIRE(single.success_stddev == 0.0);

    const auto two = aggregate({run_of(100, 80), run_of(100, 60)});
    REQUIRE_THAT(two.mean_success, WithinRel(0.7, 1e-12));
    REQUIRE_THAT(two.success_stddev, WithinAbs(0.1414, 2e-4));
    REQUIRE_THAT(two.pooled_success, WithinRel(0.7, 1e-12));

    const auto same = aggregate({run_of(50, 25), run_of(50, 25)});
    REQUIRE_THAT(same.mean_throughput_pps, WithinRel(50.0 / 3600.0, 1e-12));
}

TEST_CASE("pooled success is the weighted identity, not the mean of ratios") {
    // one heavy run at 0.5, one light run at 1.0
    const auto agg = aggregate({run_of(1000, 500), run_of(10, 10)});
    REQUIRE_THAT(agg.mean_success, WithinRel(0.75, 1e-12));
    REQUIRE_THAT(agg.pooled_success, WithinRel(510.0 / 1010.0, 1e-12));
}
