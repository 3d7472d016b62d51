#pragma once

#include <cstdint>

namespace recsum {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over the standard
/// library engines because its output and our bounded mapping below are pinned
/// bit-for-bit, so verify reports are byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] by modulo reduction. The tiny modulo bias is
    /// irrelevant here (ranges are single digits); determinism is what counts.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace recsum
