#pragma once

#include <cstdint>

namespace rtchan {

/// Deterministic generator shared by both channel endpoints.
///
/// SplitMix64: the state advances by the golden-gamma increment and the
/// output is finalized with two xor-shift-multiply rounds. Unit draws keep
/// the top 53 bits, so every draw is an exact double in [0, 1). The draw
/// sequence is a pure function of the seed on every platform, which is what
/// keeps transmitter and receiver synchronized.
class Prng {
public:
    /// Every access consumes exactly this many unit draws on both sides:
    /// u1 selects the URL (the receiver discards it), u2 feeds the frame
    /// baseline and the error / bad-code waits. One uniform rule, no
    /// branch-dependent desync.
    static constexpr int DRAWS_PER_ACCESS = 2;

    Prng() = default;
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    /// Uniform draw in [0, 1) with 53 significant bits.
    double next_unit() {
        ++draws_;
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unit draws consumed so far, for draw-discipline accounting.
    std::uint64_t draws() const { return draws_; }

private:
    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    std::uint64_t draws_ = 0;
};

}  // namespace rtchan
