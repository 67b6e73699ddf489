#pragma once

#include <cmath>
#include <cstdint>

namespace hstrn {

// Counter-based random stream. A stream is keyed by (seed, counter); trial i
// of a run always sees the same draw sequence no matter how the trial range
// is partitioned across workers. The generator is SplitMix64 on a state
// derived from the key by double avalanche mixing.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t counter) noexcept {
        std::uint64_t h = mix(seed);
        h ^= mix(counter + 0x9e3779b97f4a7c15ull);
        state_ = mix(h);
    }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform on the open interval (0,1); never returns 0 or 1, so log() of
    // the result is always finite.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Box-Muller without caching the second deviate: two uniforms per call,
    // which keeps the draw sequence a pure function of the call sequence.
    double normal() noexcept {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double exponential(double rate) noexcept {
        return -std::log(uniform()) / rate;
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace hstrn
