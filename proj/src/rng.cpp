#include "tsetlin/rng.hpp"

#include <stdexcept>

namespace tsetlin {

double RandomSource::next_unit() {
    // Top 53 bits scaled by 2^-53; the standard trick for a dense uniform
    // double in [0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RandomSource::bernoulli(double p) {
    return next_unit() < p;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: bound must be >= 1");
    if (bound == 1) {
        next_u64();  // keep the one-draw-minimum contract
        return 0;
    }
    // Reject draws from the tail that cannot be mapped evenly onto [0, bound).
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t index) {
    // splitmix64 finalizer; adjacent indices land far apart in seed space.
    std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace tsetlin
