#pragma once

// Seedable deterministic randomness.  Bytes are peeled off successive
// mt19937_64 outputs (low byte first) rather than going through
// std::uniform_int_distribution, whose output is not pinned down by the
// standard; the byte stream here is identical on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "scc/gf256.hpp"

namespace scc {

class ByteRng {
public:
    explicit ByteRng(uint64_t seed) : gen_(seed) {}

    uint8_t next_byte() {
        if (have_ == 0) {
            word_ = gen_();
            have_ = 8;
        }
        uint8_t b = static_cast<uint8_t>(word_ & 0xFF);
        word_ >>= 8;
        --have_;
        return b;
    }

    Gf next_gf() { return Gf(next_byte()); }

    std::vector<Gf> gf_vector(size_t n) {
        std::vector<Gf> v(n);
        for (auto& x : v) x = next_gf();
        return v;
    }

    uint64_t next_u64() {
        have_ = 0;  // discard any buffered bytes; keeps the stream well defined
        return gen_();
    }

    // Uniform draw from [0, bound) by rejection on masked bits.
    uint64_t uniform(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 gen_;
    uint64_t word_ = 0;
    int have_ = 0;
};

// Stable seed derivation for sub-streams (per-epoch keys, per-worker
// sampling); splitmix64 finalizer over the pair.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace scc
