#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <unordered_set>
#include <vector>

#include "lrfhss/engine.hpp"
#include "lrfhss/gateway.hpp"
#include "lrfhss/packet.hpp"
#include "lrfhss/params.hpp"

namespace lrfhss {

// One fully received packet waiting in the ACRDA memory buffer.
struct BufferedPacket {
    std::shared_ptr<Packet> packet;
    SimTime start{};
    SimTime end{};
};

// A fragment is usable for decoding once every element that collided with
// it belongs to a decoded packet (perfect cancellation); clean fragments
// are trivially usable.
inline bool fragment_recoverable(const Fragment& f,
                                 const std::unordered_set<std::uint64_t>& decoded) {
    for (const FragmentId& c : f.colliders) {
        if (!decoded.contains(c.packet_id)) return false;
    }
    return true;
}

inline bool sic_decodable(const Packet& pkt,
                          const std::unordered_set<std::uint64_t>& decoded) {
    std::uint32_t usable_headers = 0;
    std::uint32_t usable_fragments = 0;
    for (const Fragment& f : pkt.elements) {
        if (!fragment_recoverable(f, decoded)) continue;
        if (f.kind == ElementKind::header) {
            ++usable_headers;
        } else {
            ++usable_fragments;
        }
    }
    return usable_headers >= 1 && usable_fragments >= pkt.decode_min_fragments;
}

// Iterative interference cancellation over one window.
//
// Fixed point: decode every undecoded packet whose airtime lies entirely in
// [window_begin, window_end] and whose usable headers/fragments clear the
// decode rule; each newly decoded packet's fragments immediately become
// cancelable interference. Decodability only grows as `decoded` grows, so
// the result is the monotone closure and is independent of scan order.
// Returns the newly decoded packet ids; `decoded` is updated in place.
inline std::vector<std::uint64_t> sic_decode_window(
    const std::deque<BufferedPacket>& buffer, SimTime window_begin, SimTime window_end,
    std::unordered_set<std::uint64_t>& decoded) {
    std::vector<std::uint64_t> newly;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const BufferedPacket& bp : buffer) {
            if (bp.start < window_begin || bp.end > window_end) continue;
            if (decoded.contains(bp.packet->packet_id)) continue;
            if (sic_decodable(*bp.packet, decoded)) {
                decoded.insert(bp.packet->packet_id);
                newly.push_back(bp.packet->packet_id);
                changed = true;
            }
        }
    }
    return newly;
}

// ACRDA receiver: collision tracking as in the baseline gateway, but packets
// are buffered on completion and decoded by a periodic sliding-window
// process. A packet's outcome becomes final only when its airtime has fully
// exited the window; packets never decoded by then fail permanently.
class AcrdaGateway final : public Gateway {
public:
    AcrdaGateway(std::uint32_t grid_channels, const AcrdaParams& params, SimTime packet_airtime)
        : Gateway(grid_channels),
          window_len_(scale_time(packet_airtime, params.window_norm)),
          step_(scale_time(packet_airtime, params.step_norm)) {}

    SimTime window_length() const { return window_len_; }
    SimTime window_step() const { return step_; }
    std::size_t buffered() const { return buffer_.size(); }
    const std::unordered_set<std::uint64_t>& decoded_set() const { return decoded_lookup_; }

    // Registers the window procedure as an independent process: one pass at
    // every multiple of the window step up to the horizon.
    void start_window_process(Engine& engine, SimTime horizon) {
        schedule_pass(engine, step_, horizon);
    }

    // Final flush: one last pass ending at the horizon, then every packet
    // still buffered is finalized with whatever was decoded.
    void on_run_end(SimTime horizon) override {
        window_pass(horizon);
        finalize_and_purge(kSimTimeMax);
    }

    // Finalizes every buffered packet whose interval ended before `before`:
    // success iff it was decoded, failure otherwise (no later recovery), and
    // its fragments leave the buffer. Returns the number finalized.
    std::uint64_t finalize_and_purge(SimTime before) {
        std::uint64_t finalized = 0;
        while (!buffer_.empty() && buffer_.front().end < before) {
            const BufferedPacket& bp = buffer_.front();
            const bool ok = decoded_lookup_.contains(bp.packet->packet_id);
            bp.packet->outcome = ok ? PacketOutcome::success : PacketOutcome::failure;
            if (ok) record_decode(bp.packet->packet_id, bp.packet->node_id);
            buffer_.pop_front();
            ++finalized;
        }
        return finalized;
    }

    // Runs cancellation over the window ending at `window_end`, then
    // finalizes everything that has slid out of it.
    void window_pass(SimTime window_end) {
        const SimTime begin =
            window_end.ticks > window_len_.ticks ? window_end - window_len_ : SimTime{0};
        sic_decode_window(buffer_, begin, window_end, decoded_lookup_);
        finalize_and_purge(begin);
    }

protected:
    // Completed packets wait in the memory buffer; decoding happens in the
    // window process. Completion order is end-time order, so the buffer
    // stays sorted by end.
    void on_packet_complete(const std::shared_ptr<Packet>& pkt, SimTime /*now*/) override {
        buffer_.push_back(BufferedPacket{pkt, pkt->start_time(), pkt->end_time()});
    }

private:
    void schedule_pass(Engine& engine, SimTime at, SimTime horizon) {
        if (at > horizon) return;
        engine.schedule(at, [this, &engine, at, horizon] {
            window_pass(at);
            schedule_pass(engine, at + step_, horizon);
        });
    }

    SimTime window_len_;
    SimTime step_;
    std::deque<BufferedPacket> buffer_;
    std::unordered_set<std::uint64_t> decoded_lookup_;
};

}  // namespace lrfhss
