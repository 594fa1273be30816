#pragma once

#include "excycles/bigint.hpp"

#include <cstdint>

namespace excycles {

/// Deterministic 64-bit generator: xoshiro256** seeded through splitmix64.
/// A fixed (seed, worker_id, call sequence) always reproduces the same
/// stream on every platform; nothing here depends on libstdc++
/// distributions. split(id) derives an independent stream for worker id.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix64(x);
    }

    std::uint64_t seed() const { return seed_; }

    SeededRng split(std::uint64_t worker_id) const {
        std::uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ull * (worker_id + 1));
        return SeededRng(splitmix64(x));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Unbiased uniform value in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ull >> __builtin_clzll((bound - 1) | 1);
        while (true) {
            std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

    bool coin() { return next_u64() >> 63; }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform BigInt in [0, bound), rejection on the bit width.
    BigInt below_big(const BigInt& bound) {
        std::size_t bits = bound.bit_length();
        if (bits <= 1) return BigInt();
        if (bits <= 63) return BigInt::from_u64(below(bound.to_u64()));
        while (true) {
            BigInt v;
            std::size_t full = bits / 64, rem = bits % 64;
            for (std::size_t i = 0; i < full; ++i)
                v = (v << 64) + BigInt::from_u64(next_u64());
            if (rem) v = (v << static_cast<unsigned>(rem)) + BigInt::from_u64(next_u64() >> (64 - rem));
            if (v < bound) return v;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t s_[4];

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace excycles
