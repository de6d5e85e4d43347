#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>

namespace lrfhss {

// One SplitMix64 step: advance `x` by the golden-ratio increment and return
// the avalanche-mixed output. Serves as the seed-derivation primitive.
inline constexpr std::uint64_t splitmix64_next(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic child-seed derivation: the SplitMix64 finalizer applied to
// (seed XOR salt). Campaign code chains this to derive one run seed per
// (master seed, scenario, iteration), and each node stream is derived from
// the run seed and the node id.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ salt;
    return splitmix64_next(x);
}

// Seeded pseudo-random stream, reproducible bit-for-bit across platforms.
//
// State derivation is fixed: x0 = master_seed XOR stream_id, then the four
// xoshiro256** state words are the first four SplitMix64 outputs from x0.
// The generator and every distribution below use only integer arithmetic
// plus IEEE-754 double operations, never std::<random> distributions (whose
// output is implementation-defined), so identical (master_seed, stream_id)
// reproduces the identical draw sequence everywhere.
class RandomStream {
public:
    RandomStream() : RandomStream(0, 0) {}

    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id) : stream_id_(stream_id) {
        std::uint64_t x = master_seed ^ stream_id;
        for (auto& w : state_) w = splitmix64_next(x);
    }

    std::uint64_t stream_id() const { return stream_id_; }

    // xoshiro256** by Blackman & Vigna (public domain).
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double next_open_unit() { return 1.0 - next_unit(); }

    // Uniform integer on [0, n). Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
        std::uint64_t v = next_u64();
        while (v < min) v = next_u64();
        return v % n;
    }

    // Exponential with the given mean, via inverse CDF.
    double next_exponential(double mean) { return -mean * std::log(next_open_unit()); }

    // Standard normal via Box-Muller. Draws two uniforms per call and keeps
    // no cached spare, so the draw count per call is fixed.
    double next_normal() {
        const double u = next_open_unit();
        const double v = next_unit();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
    }

private:
    static constexpr double kPi = 3.14159265358979323846;

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
    std::uint64_t stream_id_ = 0;
};

}  // namespace lrfhss
