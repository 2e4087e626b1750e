#pragma once

// Global instance parameters and the server's file library.
//
// A system instance is (files N, users K, replication t): each file is cut
// into shares replicated to t-subsets of users, and the cache size works out
// to M = N*t/(K-t) + 1 files.  Valid replication is 1..K-2.

#include <optional>
#include <vector>

#include "scc/gf256.hpp"
#include "scc/rational.hpp"
#include "scc/rng.hpp"

namespace scc {

struct SystemParams {
    int files = 0;        // N
    int users = 0;        // K
    int replication = 0;  // t: every share is cached by exactly this many users

    long long file_len = 0;    // F, symbols per file
    int shares_per_file = 0;   // binom(K, t)
    int privacy_threshold = 0; // z = binom(K-1, t-1): that many shares reveal nothing
    int data_blocks = 0;       // shares_per_file - z == binom(K-1, t)
    long long share_len = 0;   // F_s = file_len / data_blocks
    Rational cache_files;      // M = N*t/(K-t) + 1, cache size in units of files

    // Builds and validates an instance.  When file_len is omitted the
    // smallest valid size (one symbol per share block) is used; when given
    // it must be a multiple of data_blocks.
    static SystemParams make(int files, int users, int replication,
                             std::optional<long long> file_len = std::nullopt);

    // Rounds a requested length up to the next multiple of data_blocks.
    static SystemParams make_padded(int files, int users, int replication,
                                    long long min_file_len);

    long long group_count() const;  // binom(K, t+1): transmission slots
};

struct FileLibrary {
    std::vector<std::vector<Gf>> files;  // N entries of file_len symbols each

    static FileLibrary random(const SystemParams& params, ByteRng& rng);

    // Throws unless the shape matches params exactly.
    void validate(const SystemParams& params) const;
};

}  // namespace scc
