#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "lrfhss/packet.hpp"

namespace lrfhss {

// Optional per-fragment log. Entries reference the live packets, so the
// dump always reflects the final fragment state; elements still on air at
// the horizon appear with status on_air and their nominal end time, which
// is what an external collision sweep needs.
class FragmentTrace {
public:
    struct Entry {
        std::shared_ptr<const Packet> packet;
        std::uint32_t element = 0;

        const Fragment& fragment() const { return packet->elements[element]; }
    };

    void record_start(const std::shared_ptr<const Packet>& pkt, std::uint32_t element) {
        entries_.push_back(Entry{pkt, element});
    }

    const std::vector<Entry>& entries() const { return entries_; }

    // One record per transmitted fragment, in transmission-start order.
    void write_csv(std::ostream& os) const {
        os << "packet_id,node_id,kind,channel,start,end,status\n";
        for (const Entry& e : entries_) {
            const Fragment& f = e.fragment();
            os << f.packet_id << ',' << e.packet->node_id << ',' << to_string(f.kind) << ','
               << f.channel << ',' << f.start.ticks << ',' << f.end().ticks << ','
               << to_string(f.status) << '\n';
        }
    }

private:
    std::vector<Entry> entries_;
};

}  // namespace lrfhss
