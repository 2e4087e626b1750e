#include "scc/decoder.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "scc/demands.hpp"

namespace scc {

CacheView::CacheView(const Placement& placement, int user)
    : placement_(&placement), cache_(nullptr) {
    if (user < 1 || user > placement.params.users) {
        throw std::out_of_range("CacheView: user " + std::to_string(user) + " out of range");
    }
    cache_ = &placement.caches[user - 1];
}

bool CacheView::has_share(int file, int holders_rank) const {
    return cache_->has_share(file, holders_rank);
}

bool CacheView::has_key(int subset_rank) const {
    return cache_->has_key(subset_rank);
}

const std::vector<Gf>& CacheView::share_payload(int file, int holders_rank) const {
    if (!has_share(file, holders_rank)) {
        throw std::out_of_range("cache of user " + std::to_string(cache_->user) +
                                " does not hold share (" + std::to_string(file) + ", rank " +
                                std::to_string(holders_rank) + ")");
    }
    return placement_->shares.share(file, holders_rank).payload;
}

const std::vector<Gf>& CacheView::key_payload(int subset_rank) const {
    if (!has_key(subset_rank)) {
        throw std::out_of_range("cache of user " + std::to_string(cache_->user) +
                                " does not hold key for subset rank " +
                                std::to_string(subset_rank));
    }
    return placement_->keys.keys[subset_rank];
}

namespace {

// Peels one share of the user's demanded file out of Y_A for A = T + {user}:
// subtract the key when present, then every summand the cache holds.
std::vector<Gf> peel_share(const CacheView& cache, const UserSubset& group,
                           const std::vector<Gf>& group_payload, bool keyed,
                           const DemandVector& d) {
    const int user = cache.user();
    std::vector<Gf> out = group_payload;
    if (keyed) {
        const auto& key = cache.key_payload(static_cast<int>(colex_rank(group)));
        for (size_t p = 0; p < out.size(); ++p) out[p] += key[p];
    }
    for (int x : group.members()) {
        if (x == user) continue;
        const auto holders = group.without(x);
        const auto& cached = cache.share_payload(d[x - 1], static_cast<int>(colex_rank(holders)));
        for (size_t p = 0; p < out.size(); ++p) out[p] += cached[p];
    }
    return out;
}

}  // namespace

DecodeResult decode_user(int user, const TransmissionSet& tx, const Placement& placement) {
    const SystemParams& params = placement.params;
    const CacheView cache(placement, user);
    const int file = tx.d[user - 1];

    DecodeResult result;
    result.user = user;
    result.file = file;
    result.shares.resize(static_cast<size_t>(params.shares_per_file));

    std::optional<DemandAnalysis> analysis;
    if (tx.scheme == Scheme::common) analysis = analyze_demands(tx.d);

    const auto holder_sets = enumerate_subsets(params.users, params.replication);
    for (size_t rank = 0; rank < holder_sets.size(); ++rank) {
        const UserSubset& holders = holder_sets[rank];
        if (cache.has_share(file, static_cast<int>(rank))) {
            result.shares[rank] = cache.share_payload(file, static_cast<int>(rank));
            continue;
        }
        const UserSubset group = holders.with(user);
        const int group_rank = static_cast<int>(colex_rank(group));
        std::vector<Gf> recovered;
        if (const Transmission* t = tx.find(group_rank)) {
            recovered = peel_share(cache, group, t->payload, t->keyed, tx.d);
        } else {
            if (tx.scheme != Scheme::common) {
                throw std::runtime_error("decode_user: missing transmission for " +
                                         to_set_string(group));
            }
            const auto rebuilt = recover_saved(group, tx, *analysis);
            recovered = peel_share(cache, group, rebuilt, false, tx.d);
        }
        assert(recovered == placement.shares.share(file, static_cast<int>(rank)).payload);
        result.shares[rank] = std::move(recovered);
        ++result.recovered_from_broadcast;
    }

    result.payload = reconstruct_file(result.shares, params);
    return result;
}

}  // namespace scc
