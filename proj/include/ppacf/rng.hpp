#pragma once

#include <cstdint>
#include <limits>

namespace ppacf {

/// SplitMix64: tiny seedable engine used for counter-based Monte-Carlo
/// substreams. Satisfies UniformRandomBitGenerator, so it works with the
/// standard <random> distributions.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Derives an independent substream seed from (seed, stream, index).
/// Results depend only on the arguments, so draws keyed by index are
/// reproducible under any scheduling order.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) {
    std::uint64_t h = detail::mix64(seed ^ (0x9E3779B97F4A7C15ULL + stream));
    return detail::mix64(h ^ (0xD1B54A32D192ED03ULL + index));
}

/// Stream ids partitioning the seed space of one run.
namespace streams {
inline constexpr std::uint64_t latent = 1;
inline constexpr std::uint64_t pattern = 2;
inline constexpr std::uint64_t quadform = 3;
inline constexpr std::uint64_t replicate = 4;
inline constexpr std::uint64_t bounds = 5;
}  // namespace streams

}  // namespace ppacf
