#include "scc/delivery.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::keys: return "keys";
        case Scheme::keyless: return "keyless";
        case Scheme::common: return "common";
    }
    throw std::logic_error("scheme_name: bad scheme");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "keys") return Scheme::keys;
    if (name == "keyless") return Scheme::keyless;
    if (name == "common") return Scheme::common;
    throw std::invalid_argument("unknown scheme '" + name + "' (expected keys|keyless|common)");
}

const Transmission* TransmissionSet::find(int subset_rank) const {
    if (subset_rank < 0 || subset_rank >= static_cast<int>(slot_of_rank.size())) return nullptr;
    int slot = slot_of_rank[subset_rank];
    return slot < 0 ? nullptr : &txs[slot];
}

long long TransmissionSet::keyed_count() const {
    return std::count_if(txs.begin(), txs.end(), [](const Transmission& t) { return t.keyed; });
}

long long TransmissionSet::keyless_count() const {
    return static_cast<long long>(txs.size()) - keyed_count();
}

namespace {

Transmission build_transmission(int subset_rank, const UserSubset& subset, bool keyed,
                                const DemandVector& d, const Placement& placement) {
    const SystemParams& params = placement.params;
    Transmission tx;
    tx.subset_rank = subset_rank;
    tx.subset = subset;
    tx.keyed = keyed;
    tx.payload.assign(static_cast<size_t>(params.share_len), gf_zero);
    if (keyed) {
        const auto& key = placement.keys.keys[subset_rank];
        for (size_t p = 0; p < tx.payload.size(); ++p) tx.payload[p] += key[p];
    }
    for (int x : subset.members()) {
        ShareLabel label{d[x - 1], static_cast<int>(colex_rank(subset.without(x)))};
        const Share& share = placement.shares.share(label.file, label.holders_rank);
        for (size_t p = 0; p < tx.payload.size(); ++p) tx.payload[p] += share.payload[p];
        tx.summands.push_back(label);
    }
    return tx;
}

TransmissionSet generate(Scheme scheme, const DemandVector& d, const Placement& placement) {
    const SystemParams& params = placement.params;
    validate_demands(d, params.files, params.users);

    TransmissionSet out;
    out.scheme = scheme;
    out.d = d;

    std::optional<DemandAnalysis> analysis;
    if (scheme == Scheme::common) analysis = analyze_demands(d);

    const auto groups = enumerate_subsets(params.users, params.replication + 1);
    out.slot_of_rank.assign(groups.size(), -1);
    for (size_t rank = 0; rank < groups.size(); ++rank) {
        const UserSubset& subset = groups[rank];
        bool emit = true;
        bool keyed = scheme == Scheme::keys;
        if (scheme == Scheme::common) {
            const bool t1 = profile_is_t1(demand_profile(subset, d), params.replication);
            if (t1) {
                keyed = true;
            } else {
                keyed = false;
                const bool touches_leaders = std::any_of(
                    subset.members().begin(), subset.members().end(),
                    [&](int u) { return analysis->is_leader(u); });
                emit = touches_leaders;
            }
        }
        if (emit) {
            out.slot_of_rank[rank] = static_cast<int>(out.txs.size());
            out.txs.push_back(
                build_transmission(static_cast<int>(rank), subset, keyed, d, placement));
        } else {
            out.saved_ranks.push_back(static_cast<int>(rank));
        }
    }
    return out;
}

}  // namespace

TransmissionSet transmissions_keys(const DemandVector& d, const Placement& placement) {
    return generate(Scheme::keys, d, placement);
}

TransmissionSet transmissions_keyless(const DemandVector& d, const Placement& placement) {
    return generate(Scheme::keyless, d, placement);
}

TransmissionSet transmissions_common(const DemandVector& d, const Placement& placement) {
    return generate(Scheme::common, d, placement);
}

std::vector<Gf> recover_saved(const UserSubset& subset, const TransmissionSet& tx,
                              const DemandAnalysis& analysis) {
    const DemandVector& d = analysis.d;
    const int group_size = subset.size();
    const int users = static_cast<int>(d.size());
    const auto target_demands = demand_multiset(subset, d);

    std::vector<Gf> acc;
    const auto groups = enumerate_subsets(users, group_size);
    for (size_t rank = 0; rank < groups.size(); ++rank) {
        const UserSubset& candidate = groups[rank];
        const bool touches_leaders = std::any_of(candidate.members().begin(),
                                                 candidate.members().end(),
                                                 [&](int u) { return analysis.is_leader(u); });
        if (!touches_leaders) continue;
        if (demand_multiset(candidate, d) != target_demands) continue;
        bool extras_in_leaders = true;
        for (int u : candidate.members()) {
            if (!subset.contains(u) && !analysis.is_leader(u)) {
                extras_in_leaders = false;
                break;
            }
        }
        if (!extras_in_leaders) continue;

        const Transmission* t = tx.find(static_cast<int>(rank));
        if (t == nullptr) {
            throw std::runtime_error("recover_saved: required transmission for " +
                                     to_set_string(candidate) + " is absent");
        }
        if (t->keyed) {
            throw std::runtime_error("recover_saved: required transmission for " +
                                     to_set_string(candidate) + " is keyed");
        }
        if (acc.empty()) acc.assign(t->payload.size(), gf_zero);
        for (size_t p = 0; p < acc.size(); ++p) acc[p] += t->payload[p];
    }
    if (acc.empty()) {
        throw std::runtime_error("recover_saved: no transmissions matched " +
                                 to_set_string(subset));
    }
    return acc;
}

}  // namespace scc
