#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "lrfhss/engine.hpp"
#include "lrfhss/gateway.hpp"
#include "lrfhss/packet.hpp"
#include "lrfhss/params.hpp"
#include "lrfhss/random.hpp"
#include "lrfhss/traffic.hpp"

namespace lrfhss {

// One end device. The transmission routine loops until the horizon: wait
// the traffic interval (anchored at the end of the previous transmission),
// build a packet, then hop through its elements back to back, reporting
// every element start and end to the gateway. Scheduled events capture only
// the node pointer; the node owns the in-flight packet.
class Node {
public:
    Node(std::uint32_t node_id, std::unique_ptr<TrafficModel> traffic, RandomStream rng)
        : node_id_(node_id), traffic_(std::move(traffic)), rng_(std::move(rng)) {}

    void start(Engine& engine, Gateway& gateway, const LinkParams& link) {
        engine_ = &engine;
        gateway_ = &gateway;
        link_ = &link;
        const SimTime at =
            engine_->now() + SimTime::from_seconds(traffic_->first_interval(rng_));
        engine_->schedule(at, [this] { begin_packet(); });
    }

    std::uint32_t node_id() const { return node_id_; }
    RandomStream& rng() { return rng_; }
    TrafficModel& traffic() { return *traffic_; }

private:
    void schedule_next_arrival() {
        const double interval_s = traffic_->next_interval(rng_);
        const SimTime at = engine_->now() + SimTime::from_seconds(interval_s);
        engine_->schedule(at, [this] { begin_packet(); });
    }

    void begin_packet() {
        const std::uint64_t packet_id =
            (static_cast<std::uint64_t>(node_id_) << 24) | ++packet_seq_;
        current_ = build_packet(link_->tx, link_->region, rng_, node_id_, packet_id,
                                link_->hop_min_separation);
        start_element();
    }

    void start_element() {
        const Fragment& f = current_->elements[current_->cursor];
        gateway_->on_fragment_start(current_, current_->cursor, engine_->now());
        engine_->schedule(engine_->now() + f.duration, [this] { end_element(); });
    }

    void end_element() {
        gateway_->on_fragment_end(current_, current_->cursor, engine_->now());
        if (++current_->cursor < current_->elements.size()) {
            start_element();  // next element starts the instant this one ends
        } else {
            current_.reset();
            schedule_next_arrival();
        }
    }

    std::uint32_t node_id_;
    std::unique_ptr<TrafficModel> traffic_;
    RandomStream rng_;
    Engine* engine_ = nullptr;
    Gateway* gateway_ = nullptr;
    const LinkParams* link_ = nullptr;
    std::shared_ptr<Packet> current_;
    std::uint64_t packet_seq_ = 0;
};

}  // namespace lrfhss
