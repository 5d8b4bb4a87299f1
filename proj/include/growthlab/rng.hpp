// rng.hpp — deterministic pseudorandom stream with derived replica seeds.
#pragma once

#include <cstdint>
#include <random>

namespace growthlab {

// splitmix64 finalizer; also used as the replica seed-derivation hash.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Wraps std::mt19937_64 (bit-exact across platforms by the standard) and
// supplies uniform draws directly; std::uniform_*_distribution output is
// implementation-defined and would break cross-toolchain reproducibility.
class GrowthRng {
public:
    explicit GrowthRng(std::uint64_t seed) : engine_(seed) {}

    // Replica k of a run with master seed s draws from
    // splitmix64(s ^ (k+1)*0x9E3779B97F4A7C15).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replica) {
        return splitmix64(master ^ ((replica + 1) * 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform real in [0,1) with 53 random mantissa bits.
    double next_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound >= 1; rejection avoids modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = engine_();
        while (x < reject_below) x = engine_();
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace growthlab
