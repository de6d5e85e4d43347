#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lrfhss/packet.hpp"
#include "lrfhss/sim_time.hpp"
#include "lrfhss/trace.hpp"

namespace lrfhss {

struct NodeStats {
    std::uint64_t transmitted = 0;
    std::uint64_t succeeded = 0;
};

// Baseline decode rule: at least one clean header and at least
// ceil(f * CR) clean payload fragments.
inline bool baseline_decodable(const Packet& pkt) {
    std::uint32_t clean_headers = 0;
    std::uint32_t clean_fragments = 0;
    for (const Fragment& f : pkt.elements) {
        if (f.status != FragmentStatus::clean) continue;
        if (f.kind == ElementKind::header) {
            ++clean_headers;
        } else {
            ++clean_fragments;
        }
    }
    return clean_headers >= 1 && clean_fragments >= pkt.decode_min_fragments;
}

// Baseline gateway: tracks on-air fragments per channel, marks every
// same-channel time overlap as a mutual collision (no capture effect), and
// decodes each packet the moment its last element ends. All end devices are
// in coverage; there is no physical-layer model beyond collisions.
class Gateway {
public:
    explicit Gateway(std::uint32_t grid_channels) : active_(grid_channels) {}
    virtual ~Gateway() = default;

    void register_nodes(std::uint32_t count) { stats_.resize(count); }

    void enable_trace() { trace_ = std::make_shared<FragmentTrace>(); }
    std::shared_ptr<FragmentTrace> trace() const { return trace_; }

    // Fragment enters the air. Every active fragment on the same channel
    // whose interval is still open at `now` collides with it, mutually.
    // Fragments occupy half-open intervals, so an element ending exactly at
    // `now` does not collide with one starting at `now`.
    void on_fragment_start(const std::shared_ptr<Packet>& pkt, std::uint32_t element,
                           SimTime now) {
        Fragment& f = pkt->elements[element];
        f.start = now;
        f.status = FragmentStatus::on_air;
        auto& channel = active_.at(f.channel);
        for (Fragment* g : channel) {
            if (g->end() > now) {
                g->colliders.push_back(f.id());
                f.colliders.push_back(g->id());
            }
        }
        channel.push_back(&f);
        if (trace_) trace_->record_start(pkt, element);
    }

    // Fragment leaves the air; its collision state is final. Ending the
    // packet's last element triggers the decode path.
    void on_fragment_end(const std::shared_ptr<Packet>& pkt, std::uint32_t element,
                         SimTime now) {
        Fragment& f = pkt->elements[element];
        auto& channel = active_.at(f.channel);
        auto it = std::find(channel.begin(), channel.end(), &f);
        if (it == channel.end()) {
            throw std::logic_error("on_fragment_end: fragment is not active");
        }
        channel.erase(it);
        f.status = f.colliders.empty() ? FragmentStatus::clean : FragmentStatus::collided;
        if (element + 1 == pkt->elements.size()) {
            // Only packets that finish before the horizon are tallied at all.
            ++stats_.at(pkt->node_id).transmitted;
            on_packet_complete(pkt, now);
        }
    }

    // End-of-run hook; the baseline receiver has nothing pending.
    virtual void on_run_end(SimTime /*horizon*/) {}

    const std::vector<NodeStats>& node_stats() const { return stats_; }

    // Ids of decoded packets, in decode order.
    const std::vector<std::uint64_t>& decoded_ids() const { return decoded_; }

protected:
    virtual void on_packet_complete(const std::shared_ptr<Packet>& pkt, SimTime /*now*/) {
        const bool ok = baseline_decodable(*pkt);
        pkt->outcome = ok ? PacketOutcome::success : PacketOutcome::failure;
        if (ok) record_decode(pkt->packet_id, pkt->node_id);
    }

    void record_decode(std::uint64_t packet_id, std::uint32_t node_id) {
        ++stats_.at(node_id).succeeded;
        decoded_.push_back(packet_id);
    }

private:
    std::vector<std::vector<Fragment*>> active_;  // on-air fragments per channel
    std::vector<NodeStats> stats_;
    std::vector<std::uint64_t> decoded_;
    std::shared_ptr<FragmentTrace> trace_;
};

}  // namespace lrfhss
