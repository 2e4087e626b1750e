#pragma once

// Cache placement: every user k caches, for every file, the shares whose
// holder subset contains k, plus one key per (t+1)-subset containing k.
// Shares and keys live in global tables; caches hold references, so the
// leakage analysis sees one variable per symbol no matter how many caches
// or transmissions touch it.

#include <cstdint>
#include <utility>
#include <vector>

#include "scc/params.hpp"
#include "scc/sharing.hpp"

namespace scc {

struct KeyRegistry {
    // [(t+1)-subset colex rank] -> share_len uniform symbols
    std::vector<std::vector<Gf>> keys;
};

struct CacheContents {
    int user = 0;
    std::vector<std::pair<int, int>> shares;  // (file, holders_rank), sorted
    std::vector<int> keys;                    // (t+1)-subset ranks, sorted

    bool has_share(int file, int holders_rank) const;
    bool has_key(int subset_rank) const;
};

struct Placement {
    SystemParams params;
    FileLibrary library;
    ShareTable shares;
    KeyRegistry keys;
    std::vector<CacheContents> caches;  // one per user, index k-1
    uint64_t seed = 0;
};

// Encodes every file with fresh randomness from the seeded generator,
// draws all keys, and fills all K caches.  Deterministic given the seed.
Placement build_placement(FileLibrary library, const SystemParams& params, uint64_t seed);

// Redraws every key for a new delivery epoch (sub-seeded from the placement
// seed and the epoch number); shares and caches are untouched.
void refresh_keys(Placement& placement, uint64_t epoch);

struct MemoryReport {
    struct PerUser {
        int user = 0;
        long long share_symbols = 0;
        long long key_symbols = 0;
        long long total_symbols = 0;
        bool ok = false;  // total == M*F exactly
    };
    std::vector<PerUser> per_user;
    long long expected_total = 0;  // M*F in symbols
    bool all_ok = false;
};

MemoryReport memory_report(const std::vector<CacheContents>& caches, const SystemParams& params);

}  // namespace scc
