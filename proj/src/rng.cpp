#include "tscl/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tscl {

namespace {

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(uint64_t seed) : seed_(seed) {
    uint64_t x = seed;
    for (auto& s : state_) {
        s = splitmix64(x);
    }
}

uint64_t Rng::next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) {
    return a + uniform() * (b - a);
}

int Rng::uniform_int(int n) {
    if (n < 1) {
        throw std::domain_error("Rng::uniform_int: n must be >= 1");
    }
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t bound = UINT64_MAX - UINT64_MAX % un;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return static_cast<int>(x % un);
}

bool Rng::bernoulli(double p) {
    return uniform() < p;
}

double Rng::gaussian(double mean, double stddev) {
    // 1 - uniform() lies in (0, 1], keeping the log argument positive.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    return mean + stddev * r * std::cos(theta);
}

Rng Rng::stream(uint64_t stream_id) const {
    return Rng(derive_seed(seed_, stream_id));
}

uint64_t Rng::derive_seed(uint64_t root_seed, uint64_t stream_id) {
    uint64_t x = root_seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    return splitmix64(x);
}

}  // namespace tscl
