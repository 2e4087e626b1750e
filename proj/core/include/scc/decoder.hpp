#pragma once

// Per-user decoding.  A user sees only its own cache and the broadcast; the
// CacheView enforces that by refusing to hand out anything the cache does
// not hold, so a decoder bug that reaches for foreign material throws
// instead of silently reading the global tables.

#include <vector>

#include "scc/delivery.hpp"
#include "scc/placement.hpp"

namespace scc {

class CacheView {
  public:
    CacheView(const Placement& placement, int user);

    int user() const { return cache_->user; }

    bool has_share(int file, int holders_rank) const;
    bool has_key(int subset_rank) const;

    // Throw std::out_of_range when the cache does not hold the item.
    const std::vector<Gf>& share_payload(int file, int holders_rank) const;
    const std::vector<Gf>& key_payload(int subset_rank) const;

  private:
    const Placement* placement_;
    const CacheContents* cache_;
};

struct DecodeResult {
    int user = 0;
    int file = 0;                             // the demand d_user
    std::vector<Gf> payload;                  // file_len symbols
    std::vector<std::vector<Gf>> shares;      // all shares of that file, by holder rank
    long long recovered_from_broadcast = 0;   // shares not found in the cache
};

// Recovers user's demanded file from its cache plus the transmission set.
// For the common-demands scheme the skipped transmissions are rebuilt from
// the transmitted ones before use.
DecodeResult decode_user(int user, const TransmissionSet& tx, const Placement& placement);

}  // namespace scc
