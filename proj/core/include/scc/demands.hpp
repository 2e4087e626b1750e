#pragma once

// Demand-side bookkeeping: leaders, per-user demand classes, non-leader
// classes, and demand profiles of user subsets.

#include <vector>

#include "scc/subsets.hpp"

namespace scc {

// One file index in 1..N per user; entry k-1 is user k's demand.
using DemandVector = std::vector<int>;

void validate_demands(const DemandVector& d, int files, int users);

// Descending multiplicities of the demands inside a subset, e.g. (2,1) for
// two users on one file and one on another.
using DemandProfile = std::vector<int>;

struct DemandAnalysis {
    DemandVector d;
    int unique_count = 0;            // N_e: number of distinct demanded files

    // One leader per distinct demand: the lowest-index user demanding it.
    // Ascending; the choice is a free parameter of the schemes and this
    // fixed rule keeps every output deterministic.
    std::vector<int> leaders;

    // same_demand[k-1]: all users with the same demand as user k (incl. k).
    std::vector<std::vector<int>> same_demand;

    // nonleader_classes[i]: the users sharing leaders[i]'s demand, minus the
    // leader.  Classes may be empty; together they partition the non-leaders.
    std::vector<std::vector<int>> nonleader_classes;

    int nonempty_class_count = 0;    // b

    bool is_leader(int user) const;
};

DemandAnalysis analyze_demands(const DemandVector& d);

DemandProfile demand_profile(const UserSubset& subset, const DemandVector& d);

// Profile equal to {t, 1} as a multiset; for t = 1 this is any subset with
// exactly two distinct demands, with no special case needed.
bool profile_is_t1(const DemandProfile& profile, int replication);

// Demands inside the subset as a sorted multiset, for the "equal demand
// vectors up to permutation" comparisons of the redundancy identity.
std::vector<int> demand_multiset(const UserSubset& subset, const DemandVector& d);

}  // namespace scc
