#pragma once

#include <cstdint>

namespace riwalk {

// splitmix64 finalizer; full 64-bit avalanche.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Self-contained generator so that sampling is reproducible across
// platforms and standard libraries. One instance per worker; independent
// streams are derived with derive_stream().
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, n). Multiply-high reduction; bias is O(n / 2^64).
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

// Key an independent stream off (seed, salt), e.g. salt = anchor index.
inline uint64_t derive_stream(uint64_t seed, uint64_t salt) {
    return mix64(seed ^ mix64(salt + 0x6a09e667f3bcc909ULL));
}

} // namespace riwalk
