#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

// Deterministic, splittable random streams. Every worker owns an independent
// stream keyed by (seed, stream id), so results are reproducible for a fixed
// assignment regardless of thread count or platform. Samplers are hand-rolled
// because std::<distribution> output is implementation-defined.

namespace telsim {

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
        for (auto& word : state_) word = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    // xoshiro256** step.
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Knuth multiplication method; adequate for the per-pulse means used here.
    int poisson(double mean) {
        if (mean < 0.0) throw std::invalid_argument("poisson mean must be >= 0");
        if (mean == 0.0) return 0;
        const double limit = std::exp(-mean);
        double prod = 1.0;
        int n = -1;
        do {
            ++n;
            prod *= uniform();
        } while (prod > limit);
        return n;
    }

    // Bose-Einstein (single-mode thermal) photon number with the given mean:
    // P(n) = mean^n / (1 + mean)^(n+1), a geometric law.
    int thermal(double mean) {
        if (mean < 0.0) throw std::invalid_argument("thermal mean must be >= 0");
        if (mean == 0.0) return 0;
        const double u = uniform();
        return static_cast<int>(std::floor(std::log1p(-u) / std::log(mean / (1.0 + mean))));
    }

    // Direct Bernoulli sum; n stays small (photon counts per pulse).
    int binomial(int n, double p) {
        int k = 0;
        for (int i = 0; i < n; ++i) k += bernoulli(p) ? 1 : 0;
        return k;
    }

    // Categorical draw from unnormalized nonnegative weights.
    int categorical(const double* weights, int count, double total) {
        double u = uniform() * total;
        for (int i = 0; i < count; ++i) {
            u -= weights[i];
            if (u < 0.0) return i;
        }
        return count - 1;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace telsim
