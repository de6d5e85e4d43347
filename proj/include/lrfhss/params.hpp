#pragma once

#include <cstdint>

#include "lrfhss/coding.hpp"
#include "lrfhss/sim_time.hpp"

namespace lrfhss {

// EU regional channel grid and element durations.
// One transmission hops within a single grid of 35 or 86 physical channels
// of 488 Hz; 8 such grids exist, so reported device counts are the simulated
// count times grid_multiplier.
struct RegionalParams {
    std::uint32_t grid_channels = 35;
    SimTime header_duration = SimTime::from_us(233'472);
    SimTime fragment_duration = SimTime::from_us(102'400);
    std::uint32_t channel_bandwidth_hz = 488;  // informational
    std::uint32_t grid_multiplier = 8;         // reporting only
};

// Per-transmission parameters. The DR8 defaults: 3 header copies, CR 1/3.
struct TransmissionParams {
    std::uint32_t header_copies = 3;
    CodingRate coding_rate = CodingRate::one_third;
    std::uint32_t payload_bytes = 20;
};

// Total time on air of one packet: headers then payload fragments,
// transmitted back to back.
inline SimTime packet_airtime(const TransmissionParams& tx, const RegionalParams& region) {
    const std::uint64_t f = fragment_count(tx.payload_bytes, tx.coding_rate);
    return SimTime{tx.header_copies * region.header_duration.ticks +
                   f * region.fragment_duration.ticks};
}

// Read-only per-run protocol context shared by all nodes.
// hop_min_separation is the minimum index distance between consecutive hop
// channels; 1 means only the mandatory adjacent-element distinctness.
struct LinkParams {
    TransmissionParams tx;
    RegionalParams region;
    std::uint32_t hop_min_separation = 1;
};

// ACRDA receiver geometry, normalized to one packet airtime.
struct AcrdaParams {
    double window_norm = 2.0;  // window length, >= 1 so a whole packet fits
    double step_norm = 0.5;    // window advance per pass, in (0, window_norm]
};

}  // namespace lrfhss
