#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tsetlin {

// Source of randomness consumed during training. All distributions are built
// from raw 64-bit draws; std::*_distribution is implementation-defined and
// would break bit-for-bit reproducibility across standard libraries.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual std::uint64_t next_u64() = 0;

    // Uniform in [0, 1) with 53 bits of precision. One draw.
    virtual double next_unit();

    // True with probability p. Always consumes exactly one draw, even for
    // p <= 0 or p >= 1, so the stream position never depends on the
    // probabilities along the way.
    bool bernoulli(double p);

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling, so the
    // result is unbiased; may consume more than one draw.
    std::uint64_t below(std::uint64_t bound);
};

// Mersenne Twister behind the RandomSource interface. mt19937_64 output is
// pinned by the standard, so seeded runs replay exactly on any platform.
class Rng final : public RandomSource {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Decorrelated seed for substream `index` of a run (one per class machine).
// splitmix64 finalizer of run_seed + index.
std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t index);

// In-place Fisher-Yates shuffle driven by `rng`.
template <typename T, typename Alloc>
void shuffle(std::vector<T, Alloc>& v, RandomSource& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace tsetlin
