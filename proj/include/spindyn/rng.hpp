#pragma once

// Seeded, platform-independent randomness with splittable substreams.
//
// Every random draw in the library flows through xoshiro256++ (Blackman &
// Vigna 2019) seeded via the splitmix64 finalizer, so a (seed, purpose,
// index) triple pins the entire stream on any platform. Distribution
// transforms (uniform doubles, Box-Muller normals) are implemented here
// rather than taken from <random>, whose algorithms are
// implementation-defined.

#include <array>
#include <cmath>
#include <cstdint>

namespace spindyn {

// Substream purposes. One substream per kind of draw keeps runs
// reproducible when individual pieces are regenerated in isolation.
inline constexpr std::uint64_t kStreamNetwork = 1;      // star coupling draws
inline constexpr std::uint64_t kStreamPhases = 2;       // initial-state phases
inline constexpr std::uint64_t kStreamRealization = 3;  // per-realization seeds

// splitmix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hash a (master, purpose, index) triple into a substream seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                                    std::uint64_t index) {
    std::uint64_t z = splitmix64(master);
    z = splitmix64(z ^ (0x9e3779b97f4a7c15ULL * (purpose + 1)));
    z = splitmix64(z ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return z;
}

// Identifies a replayable substream together with the number of draws taken
// from it. Rebuilding the stream from (seed, purpose, index) and drawing
// `count` values regenerates the exact sequence.
struct PhaseRecord {
    std::uint64_t seed = 0;
    std::uint64_t purpose = 0;
    std::uint64_t index = 0;
    std::uint64_t count = 0;
};

// xoshiro256++ with splitmix64 state expansion.
class SplitStream {
  public:
    static SplitStream derive(std::uint64_t master, std::uint64_t purpose,
                              std::uint64_t index = 0) {
        SplitStream g;
        std::uint64_t s = derive_seed(master, purpose, index);
        for (auto& word : g.state_) {
            s = splitmix64(s);
            word = s;
        }
        g.record_ = PhaseRecord{master, purpose, index, 0};
        return g;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        ++record_.count;
        return result;
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform angle in [0, 2π).
    double angle() { return 2.0 * kPi * uniform01(); }

    // Normal(0, sigma^2) via Box-Muller; always consumes two uniforms so the
    // draw count stays a function of the number of calls.
    double normal(double sigma) {
        const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
        const double u2 = uniform01();
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // Draw count bookkeeping for manifests.
    PhaseRecord record() const { return record_; }
    std::uint64_t draws() const { return record_.count; }

  private:
    static constexpr double kPi = 3.14159265358979323846;

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    PhaseRecord record_{};
};

} // namespace spindyn
