#pragma once

// Delivery phase: the three transmission schemes.
//
//   keys     - one keyed payload per (t+1)-subset (the baseline).
//   keyless  - the same payloads without the keys; not secretive for every
//              demand vector, but its redundancy enables savings.
//   common   - keys exactly on the (t,1)-profile subsets, plain payloads on
//              the remaining leader-touching subsets, nothing for the rest;
//              the skipped payloads are recoverable by the redundancy
//              identity implemented in recover_saved.
//
// Transmissions are emitted in colex order of their subsets, keyed and
// keyless interleaved in that one order.

#include <optional>
#include <string>
#include <vector>

#include "scc/demands.hpp"
#include "scc/placement.hpp"

namespace scc {

enum class Scheme { keys, keyless, common };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct ShareLabel {
    int file = 0;          // n
    int holders_rank = 0;  // colex rank of the t-subset

    auto operator<=>(const ShareLabel&) const = default;
};

struct Transmission {
    int subset_rank = 0;   // colex rank of the (t+1)-subset
    UserSubset subset;
    bool keyed = false;
    std::vector<ShareLabel> summands;  // S_{d_x}^{A\x} for x in A, ascending x
    std::vector<Gf> payload;           // field sum of the summands (+ key)
};

struct TransmissionSet {
    Scheme scheme = Scheme::keys;
    DemandVector d;
    std::vector<Transmission> txs;      // colex order of emitted subsets
    std::vector<int> saved_ranks;       // subsets with no transmission (common only)

    // Position of the transmission for a subset rank, or -1 if saved/absent.
    std::vector<int> slot_of_rank;

    const Transmission* find(int subset_rank) const;
    long long keyed_count() const;
    long long keyless_count() const;
};

TransmissionSet transmissions_keys(const DemandVector& d, const Placement& placement);
TransmissionSet transmissions_keyless(const DemandVector& d, const Placement& placement);
TransmissionSet transmissions_common(const DemandVector& d, const Placement& placement);

// Rebuilds the payload of a saved subset as the field sum of the emitted
// transmissions Y_B with B meeting the leader set, carrying the same demand
// multiset as the saved subset, and with B minus the subset inside the
// leaders.  Throws if any required transmission is keyed or absent.
std::vector<Gf> recover_saved(const UserSubset& subset, const TransmissionSet& tx,
                              const DemandAnalysis& analysis);

}  // namespace scc
