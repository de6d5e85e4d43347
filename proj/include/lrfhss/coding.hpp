#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace lrfhss {

// LR-FHSS convolutional coding rate. Kept as an enum so the exact rational
// value is available for integer arithmetic.
enum class CodingRate { one_third, two_thirds };

constexpr std::uint32_t cr_numerator(CodingRate cr) {
    return cr == CodingRate::one_third ? 1u : 2u;
}
constexpr std::uint32_t cr_denominator(CodingRate) { return 3u; }

constexpr double cr_value(CodingRate cr) {
    return static_cast<double>(cr_numerator(cr)) / cr_denominator(cr);
}

constexpr std::string_view to_string(CodingRate cr) {
    return cr == CodingRate::one_third ? "1/3" : "2/3";
}

inline std::optional<CodingRate> parse_coding_rate(std::string_view s) {
    if (s == "1/3") return CodingRate::one_third;
    if (s == "2/3") return CodingRate::two_thirds;
    return std::nullopt;
}

// Number of payload fragments for a payload of `payload_bytes` bytes:
// ceil((b + 3) / (6 * CR)), evaluated in exact integer arithmetic.
constexpr std::uint32_t fragment_count(std::uint32_t payload_bytes, CodingRate cr) {
    if (payload_bytes == 0) {
        throw std::invalid_argument("fragment_count: payload_bytes must be >= 1");
    }
    const std::uint64_t num =
        static_cast<std::uint64_t>(payload_bytes + 3) * cr_denominator(cr);
    const std::uint64_t den = 6ull * cr_numerator(cr);
    return static_cast<std::uint32_t>((num + den - 1) / den);
}

// Minimum clean payload fragments needed to decode: ceil(f * CR).
constexpr std::uint32_t decode_threshold(std::uint32_t fragment_total, CodingRate cr) {
    if (fragment_total == 0) {
        throw std::invalid_argument("decode_threshold: fragment_total must be >= 1");
    }
    const std::uint64_t num =
        static_cast<std::uint64_t>(fragment_total) * cr_numerator(cr);
    const std::uint64_t den = cr_denominator(cr);
    return static_cast<std::uint32_t>((num + den - 1) / den);
}

}  // namespace lrfhss
