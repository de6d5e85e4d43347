#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lrfhss/sim_time.hpp"

namespace lrfhss {

using Action = std::function<void()>;

// Deterministic discrete-event core.
//
// Events fire in (fire_time, insertion sequence) order; simultaneous events
// dispatch FIFO, so a run replays identically given the same seed and
// configuration. One Engine instance is strictly single-threaded; parallel
// campaigns run one independent Engine per iteration.
class Engine {
public:
    SimTime now() const { return now_; }
    std::size_t pending() const { return queue_.size(); }

    // Schedules `action` to fire at `at`. Scheduling before the current
    // clock is a causality violation.
    std::uint64_t schedule(SimTime at, Action action) {
        if (at < now_) {
            throw std::logic_error("causality violation: schedule at t=" +
                                   std::to_string(at.ticks) + " with clock at t=" +
                                   std::to_string(now_.ticks));
        }
        const std::uint64_t seq = next_seq_++;
        queue_.push(Entry{at, seq, std::move(action)});
        return seq;
    }

    // Dispatches every event with fire_time <= end (inclusive horizon), then
    // advances the clock to `end`. Events beyond `end` stay queued. Returns
    // the number of events fired.
    std::uint64_t run_until(SimTime end) {
        if (end < now_) {
            throw std::logic_error("causality violation: run_until into the past");
        }
        std::uint64_t fired = 0;
        while (!queue_.empty() && queue_.top().at <= end) {
            Entry e = queue_.top();
            queue_.pop();
            now_ = e.at;
            e.action();
            ++fired;
        }
        now_ = end;
        return fired;
    }

private:
    struct Entry {
        SimTime at;
        std::uint64_t seq = 0;
        Action action;
    };

    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            return std::tie(a.at, a.seq) > std::tie(b.at, b.seq);
        }
    };

    SimTime now_{};
    std::uint64_t next_seq_ = 0;
    std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
};

}  // namespace lrfhss
