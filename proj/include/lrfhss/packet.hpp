#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <string_view>
#include <tuple>
#include <vector>

#include "lrfhss/params.hpp"
#include "lrfhss/random.hpp"
#include "lrfhss/sim_time.hpp"

namespace lrfhss {

enum class ElementKind { header, payload };

enum class FragmentStatus { pending, on_air, clean, collided };

constexpr std::string_view to_string(ElementKind k) {
    return k == ElementKind::header ? "header" : "payload";
}

constexpr std::string_view to_string(FragmentStatus s) {
    switch (s) {
        case FragmentStatus::pending: return "pending";
        case FragmentStatus::on_air: return "on_air";
        case FragmentStatus::clean: return "clean";
        case FragmentStatus::collided: return "collided";
    }
    return "?";
}

// Identity of one transmitted element, stable for a whole run.
struct FragmentId {
    std::uint64_t packet_id = 0;
    std::uint32_t element = 0;

    friend constexpr bool operator==(const FragmentId&, const FragmentId&) = default;
    friend constexpr bool operator<(const FragmentId& a, const FragmentId& b) {
        return std::tie(a.packet_id, a.element) < std::tie(b.packet_id, b.element);
    }
};

// One on-air element: a header copy or a payload fragment.
// Occupies the half-open interval [start, start + duration) on `channel`;
// intervals that merely touch do not collide.
struct Fragment {
    ElementKind kind = ElementKind::payload;
    std::uint32_t index = 0;  // position within the owning packet
    std::uint32_t channel = 0;
    SimTime start{};  // set when transmission begins
    SimTime duration{};
    std::uint64_t packet_id = 0;
    FragmentStatus status = FragmentStatus::pending;
    std::vector<FragmentId> colliders;  // every element that overlapped this one

    SimTime end() const { return start + duration; }
    FragmentId id() const { return {packet_id, index}; }
};

enum class PacketOutcome { undecided, success, failure };

// One LR-FHSS packet: header_copies header replicas followed by
// fragment_total payload fragments, each on its own hop channel.
struct Packet {
    std::uint64_t packet_id = 0;
    std::uint32_t node_id = 0;
    std::uint32_t header_copies = 0;
    std::uint32_t fragment_total = 0;     // payload fragment count f
    std::uint32_t decode_min_fragments = 0;  // ceil(f * CR)
    std::vector<Fragment> elements;       // headers first, then fragments
    std::uint32_t cursor = 0;             // next element to transmit
    PacketOutcome outcome = PacketOutcome::undecided;

    SimTime start_time() const { return elements.front().start; }
    SimTime end_time() const { return elements.back().end(); }
};

// Builds a packet with a fresh hop sequence drawn from `rng`: channels are
// uniform i.i.d. over [0, grid_channels), redrawing until consecutive
// elements are at least `hop_min_separation` apart (>= 1 enforces the
// mandatory adjacent-channel distinctness).
inline std::shared_ptr<Packet> build_packet(const TransmissionParams& tx,
                                            const RegionalParams& region, RandomStream& rng,
                                            std::uint32_t node_id, std::uint64_t packet_id,
                                            std::uint32_t hop_min_separation = 1) {
    auto pkt = std::make_shared<Packet>();
    pkt->packet_id = packet_id;
    pkt->node_id = node_id;
    pkt->header_copies = tx.header_copies;
    pkt->fragment_total = fragment_count(tx.payload_bytes, tx.coding_rate);
    pkt->decode_min_fragments = decode_threshold(pkt->fragment_total, tx.coding_rate);

    const std::uint32_t total = pkt->header_copies + pkt->fragment_total;
    const std::uint32_t sep = hop_min_separation == 0 ? 1 : hop_min_separation;
    pkt->elements.reserve(total);

    std::uint32_t prev_channel = 0;
    for (std::uint32_t i = 0; i < total; ++i) {
        Fragment f;
        f.kind = i < tx.header_copies ? ElementKind::header : ElementKind::payload;
        f.index = i;
        f.duration = f.kind == ElementKind::header ? region.header_duration
                                                   : region.fragment_duration;
        f.packet_id = packet_id;
        std::uint32_t ch = 0;
        do {
            ch = static_cast<std::uint32_t>(rng.next_below(region.grid_channels));
        } while (i > 0 &&
                 static_cast<std::uint32_t>(
                     std::abs(static_cast<std::int64_t>(ch) -
                              static_cast<std::int64_t>(prev_channel))) < sep);
        f.channel = ch;
        prev_channel = ch;
        pkt->elements.push_back(std::move(f));
    }
    return pkt;
}

}  // namespace lrfhss
