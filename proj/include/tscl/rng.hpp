#pragma once

#include <cstdint>

namespace tscl {

/// Deterministic xoshiro256** generator seeded via splitmix64.
///
/// Every run derives its randomness from a single session seed; teacher,
/// student and harness each get an independent child stream so that any
/// component can be replayed in isolation. All distributions are implemented
/// by hand so output is reproducible across platforms and standard-library
/// versions.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform double in [a, b).
    double uniform(double a, double b);

    /// Uniform integer in [0, n). Requires n >= 1.
    int uniform_int(int n);

    /// True with probability p.
    bool bernoulli(double p);

    /// Box-Muller draw.
    double gaussian(double mean = 0.0, double stddev = 1.0);

    /// Independent child stream keyed by (root seed, stream_id).
    Rng stream(uint64_t stream_id) const;

    uint64_t seed() const { return seed_; }

    /// Seed derivation used for child streams; exposed so callers can
    /// hand a derived seed to components that own their own Rng.
    static uint64_t derive_seed(uint64_t root_seed, uint64_t stream_id);

private:
    uint64_t seed_;
    uint64_t state_[4];
};

namespace rng_streams {
// Conventional stream ids used by the harness.
inline constexpr uint64_t kTeacher = 1;
inline constexpr uint64_t kStudent = 2;
inline constexpr uint64_t kHarness = 3;
}  // namespace rng_streams

}  // namespace tscl
