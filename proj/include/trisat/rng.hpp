#pragma once

#include <cstdint>

namespace trisat {

/// One splitmix64 step applied to x (Steele, Lea, Flood constants).
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xorshift64*: state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
/// output state * 0x2545F4914F6CDD1D.
class XorShift64Star {
public:
    /// A zero state is replaced by the splitmix64 image of 0.
    explicit constexpr XorShift64Star(std::uint64_t state) : state_(state != 0 ? state : splitmix64(0)) {}

    /// Stream for trial `trial` of a run seeded with `seed`.
    static constexpr XorShift64Star for_trial(std::uint64_t seed, std::uint64_t trial)
    {
        return XorShift64Star(splitmix64(splitmix64(seed) ^ trial));
    }

    constexpr std::uint64_t next()
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    constexpr std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace trisat
