#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace lrfhss {

// Simulation time in integer microsecond ticks.
//
// Both LR-FHSS element durations (233.472 ms headers, 102.4 ms payload
// fragments) are whole microseconds, so every start/end instant in a run is
// exact and event ordering never depends on floating-point rounding.
struct SimTime {
    std::uint64_t ticks = 0;  // microseconds since simulation start

    static constexpr SimTime from_us(std::uint64_t us) { return SimTime{us}; }

    // Converts seconds to ticks, rounding to the nearest microsecond.
    // Negative inputs clamp to zero.
    static SimTime from_seconds(double s) {
        if (!(s > 0.0)) return SimTime{0};
        return SimTime{static_cast<std::uint64_t>(std::llround(s * 1e6))};
    }

    constexpr double seconds() const { return static_cast<double>(ticks) * 1e-6; }

    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(SimTime o) const { return SimTime{ticks + o.ticks}; }
    constexpr SimTime operator-(SimTime o) const { return SimTime{ticks - o.ticks}; }
    SimTime& operator+=(SimTime o) {
        ticks += o.ticks;
        return *this;
    }
};

// t * factor, rounded to the nearest tick. Used for the window geometry,
// which is specified as multiples of one packet airtime.
inline SimTime scale_time(SimTime t, double factor) {
    return SimTime{static_cast<std::uint64_t>(std::llround(static_cast<double>(t.ticks) * factor))};
}

inline constexpr SimTime kSimTimeMax{~std::uint64_t{0}};

}  // namespace lrfhss
