#pragma once

// Shared helpers for unit and acceptance tests: hand-built packets and a
// scripted transmission driver that pushes them through a gateway on an
// engine, mirroring the node transmit routine's element timing.

#include <cstdint>
#include <memory>
#include <vector>

#include "lrfhss/engine.hpp"
#include "lrfhss/gateway.hpp"
#include "lrfhss/packet.hpp"
#include "lrfhss/params.hpp"

namespace test_support {

// Packet with a forced hop sequence; element kinds and durations follow the
// transmission parameters as usual.
inline std::shared_ptr<lrfhss::Packet> make_scripted_packet(
    std::uint32_t node_id, std::uint64_t packet_id, const std::vector<std::uint32_t>& channels,
    const lrfhss::TransmissionParams& tx, const lrfhss::RegionalParams& region) {
    auto pkt = std::make_shared<lrfhss::Packet>();
    pkt->packet_id = packet_id;
    pkt->node_id = node_id;
    pkt->header_copies = tx.header_copies;
    pkt->fragment_total = lrfhss::fragment_count(tx.payload_bytes, tx.coding_rate);
    pkt->decode_min_fragments =
        lrfhss::decode_threshold(pkt->fragment_total, tx.coding_rate);
    const std::uint32_t total = pkt->header_copies + pkt->fragment_total;
    for (std::uint32_t i = 0; i < total; ++i) {
        lrfhss::Fragment f;
        f.kind = i < tx.header_copies ? lrfhss::ElementKind::header
                                      : lrfhss::ElementKind::payload;
        f.index = i;
        f.duration = f.kind == lrfhss::ElementKind::header ? region.header_duration
                                                           : region.fragment_duration;
        f.packet_id = packet_id;
        f.channel = channels.at(i % channels.size());
        pkt->elements.push_back(std::move(f));
    }
    return pkt;
}

// Schedules every element's start and end at the back-to-back times the node
// routine would produce.
inline void script_transmission(lrfhss::Engine& engine, lrfhss::Gateway& gateway,
                                const std::shared_ptr<lrfhss::Packet>& pkt,
                                lrfhss::SimTime start) {
    lrfhss::SimTime at = start;
    for (std::uint32_t i = 0; i < pkt->elements.size(); ++i) {
        const lrfhss::SimTime end = at + pkt->elements[i].duration;
        engine.schedule(at, [&gateway, pkt, i, &engine] {
            gateway.on_fragment_start(pkt, i, engine.now());
        });
        engine.schedule(end, [&gateway, pkt, i, &engine] {
            gateway.on_fragment_end(pkt, i, engine.now());
        });
        at = end;
    }
}

}  // namespace test_support
