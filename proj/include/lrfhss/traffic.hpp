#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "lrfhss/random.hpp"

namespace lrfhss {

enum class TrafficKind { exponential, uniform, constant_drift, markov2 };

constexpr std::string_view to_string(TrafficKind k) {
    switch (k) {
        case TrafficKind::exponential: return "exponential";
        case TrafficKind::uniform: return "uniform";
        case TrafficKind::constant_drift: return "constant_drift";
        case TrafficKind::markov2: return "markov2";
    }
    return "?";
}

inline std::optional<TrafficKind> parse_traffic_kind(std::string_view s) {
    if (s == "exponential") return TrafficKind::exponential;
    if (s == "uniform") return TrafficKind::uniform;
    if (s == "constant_drift") return TrafficKind::constant_drift;
    if (s == "markov2") return TrafficKind::markov2;
    return std::nullopt;
}

// Inter-arrival generator. Intervals are in seconds and are measured from
// the end of the previous transmission to the start of the next, so a node
// never overlaps itself. Every model keeps a long-run mean of
// mean_interval() seconds.
//
// first_interval() is the wait from t = 0 to the first transmission. It is
// drawn from the model's equilibrium delay distribution, so packet counts
// over finite horizons are unbiased from the start (a plain interval here
// would underscount by (1 - sigma^2/T^2)/2 packets per run, several percent
// of a short horizon for the near-constant models). Exponential arrivals
// are memoryless, so the regular draw already is the equilibrium delay.
class TrafficModel {
public:
    virtual ~TrafficModel() = default;
    virtual TrafficKind kind() const = 0;
    virtual double next_interval(RandomStream& rng) = 0;
    virtual double first_interval(RandomStream& rng) { return next_interval(rng); }
    virtual double mean_interval() const = 0;
};

// Poisson arrivals: interval = -T ln(U), U uniform on (0, 1].
class ExponentialTraffic final : public TrafficModel {
public:
    explicit ExponentialTraffic(double mean) : mean_(mean) {}

    static double from_unit(double mean, double u) { return -mean * std::log(u); }

    TrafficKind kind() const override { return TrafficKind::exponential; }
    double next_interval(RandomStream& rng) override {
        return from_unit(mean_, rng.next_open_unit());
    }
    double mean_interval() const override { return mean_; }

private:
    double mean_;
};

// Uniform on (0, 2T): interval = 2T U, preserving mean T.
class UniformTraffic final : public TrafficModel {
public:
    explicit UniformTraffic(double mean) : mean_(mean) {}

    static double from_unit(double mean, double u) { return 2.0 * mean * u; }

    TrafficKind kind() const override { return TrafficKind::uniform; }
    double next_interval(RandomStream& rng) override {
        return from_unit(mean_, rng.next_unit());
    }
    // Equilibrium delay for U(0, 2T) intervals: inverse CDF of
    // (1 - F(x)) / T, which is 2T (1 - sqrt(1 - u)).
    double first_interval(RandomStream& rng) override {
        return 2.0 * mean_ * (1.0 - std::sqrt(1.0 - rng.next_unit()));
    }
    double mean_interval() const override { return mean_; }

private:
    double mean_;
};

// Constant interval with a small Gaussian drift: max(0, T + sigma Z).
class ConstantDriftTraffic final : public TrafficModel {
public:
    ConstantDriftTraffic(double mean, double sigma) : mean_(mean), sigma_(sigma) {}

    TrafficKind kind() const override { return TrafficKind::constant_drift; }
    double next_interval(RandomStream& rng) override {
        return std::max(0.0, mean_ + sigma_ * rng.next_normal());
    }
    // Near-constant intervals: the equilibrium delay is a uniform phase
    // within one interval.
    double first_interval(RandomStream& rng) override {
        return rng.next_unit() * next_interval(rng);
    }
    double mean_interval() const override { return mean_; }
    double sigma() const { return sigma_; }

private:
    double mean_;
    double sigma_;
};

// Steady-state probability of the transmitting state of the two-state
// chain: (p - 1) / (p - q - 1), where p is the probability of staying idle
// and q the probability of leaving the transmitting state.
inline double markov_steady_state(double stay_idle_prob, double exit_transmit_prob) {
    const double den = stay_idle_prob - exit_transmit_prob - 1.0;
    assert(den != 0.0);
    return (stay_idle_prob - 1.0) / den;
}

// Two-state Markov bursty traffic.
//
// The chain advances in steps of S = T * pi1 seconds, where pi1 is the
// steady-state probability of the transmitting state; every step spent in
// that state is one transmission. Instead of walking the chain step by
// step, sojourns are sampled in closed form: from a transmitting step the
// gap to the next one is 1 step with probability (1 - q), otherwise
// 1 + K steps with K geometric (success probability 1 - p). The mean gap is
// 1 / pi1 steps, so the mean interval is exactly T.
//
// With q << p a node emits long runs of S-second intervals separated by
// long idle stretches, i.e. bursts of back-to-back messages.
class MarkovTraffic final : public TrafficModel {
public:
    MarkovTraffic(double mean, double stay_idle_prob, double exit_transmit_prob)
        : mean_(mean), p_(stay_idle_prob), q_(exit_transmit_prob) {
        if (!(p_ > 0.0 && p_ < 1.0) || !(q_ > 0.0 && q_ <= 1.0)) {
            throw std::invalid_argument("markov2: require 0 < p < 1 and 0 < q <= 1");
        }
        pi1_ = markov_steady_state(p_, q_);
        step_seconds_ = mean_ * pi1_;
        log_p_ = std::log(p_);
    }

    TrafficKind kind() const override { return TrafficKind::markov2; }

    double next_interval(RandomStream& rng) override {
        if (!started_) {
            started_ = true;
            // Initial state drawn from the stationary distribution, so the
            // process is stationary from t = 0. Starting idle, the wait to
            // the first transmitting step is geometric in whole steps.
            if (rng.next_unit() >= pi1_) {
                return step_seconds_ * static_cast<double>(idle_run_steps(rng));
            }
            // Starting in the transmitting state: fall through and sample a
            // regular gap, as if a transmission had just occurred.
        }
        if (rng.next_unit() < q_) {
            return step_seconds_ * static_cast<double>(1 + idle_run_steps(rng));
        }
        return step_seconds_;
    }

    double mean_interval() const override { return mean_; }

    double steady_state_p1() const { return pi1_; }
    double step_seconds() const { return step_seconds_; }
    double mean_gap_steps() const { return 1.0 / pi1_; }
    // Analytic mean of emitted intervals; equals mean_interval() identically.
    double expected_mean_interval() const { return step_seconds_ * mean_gap_steps(); }

private:
    // Length of one idle sojourn in steps: K >= 1 with
    // P(K = k) = (1 - p) p^(k-1), sampled by inverse CDF.
    std::uint64_t idle_run_steps(RandomStream& rng) const {
        const double u = rng.next_open_unit();
        return 1 + static_cast<std::uint64_t>(std::floor(std::log(u) / log_p_));
    }

    double mean_;
    double p_;
    double q_;
    double pi1_ = 0.0;
    double step_seconds_ = 0.0;
    double log_p_ = 0.0;
    bool started_ = false;
};

// Everything needed to instantiate one node's traffic model.
struct TrafficSpec {
    TrafficKind kind = TrafficKind::exponential;
    double mean_interval = 900.0;
    double sigma = 9.0;  // constant_drift only; default T / 100
    double markov_stay_idle = 0.99998;
    double markov_exit_transmit = 0.15;
};

inline std::unique_ptr<TrafficModel> make_traffic(const TrafficSpec& spec) {
    switch (spec.kind) {
        case TrafficKind::exponential:
            return std::make_unique<ExponentialTraffic>(spec.mean_interval);
        case TrafficKind::uniform:
            return std::make_unique<UniformTraffic>(spec.mean_interval);
        case TrafficKind::constant_drift:
            return std::make_unique<ConstantDriftTraffic>(spec.mean_interval, spec.sigma);
        case TrafficKind::markov2:
            return std::make_unique<MarkovTraffic>(spec.mean_interval, spec.markov_stay_idle,
                                                   spec.markov_exit_transmit);
    }
    throw std::invalid_argument("unknown traffic kind");
}

}  // namespace lrfhss
