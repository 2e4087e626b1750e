#include "scc/demands.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scc {

void validate_demands(const DemandVector& d, int files, int users) {
    if (static_cast<int>(d.size()) != users) {
        throw std::invalid_argument("demands: need one entry per user");
    }
    for (int v : d) {
        if (v < 1 || v > files) throw std::invalid_argument("demands: file index out of range");
    }
}

bool DemandAnalysis::is_leader(int user) const {
    return std::binary_search(leaders.begin(), leaders.end(), user);
}

DemandAnalysis analyze_demands(const DemandVector& d) {
    const int users = static_cast<int>(d.size());
    if (users == 0) throw std::invalid_argument("demands: empty vector");
    for (int v : d) {
        if (v < 1) throw std::invalid_argument("demands: file indices are 1-based");
    }

    DemandAnalysis a;
    a.d = d;

    std::map<int, std::vector<int>> by_file;  // file -> users demanding it, ascending
    for (int k = 1; k <= users; ++k) by_file[d[k - 1]].push_back(k);
    a.unique_count = static_cast<int>(by_file.size());

    for (auto& [file, members] : by_file) a.leaders.push_back(members.front());
    std::sort(a.leaders.begin(), a.leaders.end());

    a.same_demand.resize(users);
    for (int k = 1; k <= users; ++k) a.same_demand[k - 1] = by_file[d[k - 1]];

    // classes aligned with the (ascending) leaders
    for (int leader : a.leaders) {
        std::vector<int> cls;
        for (int u : by_file[d[leader - 1]]) {
            if (u != leader) cls.push_back(u);
        }
        if (!cls.empty()) ++a.nonempty_class_count;
        a.nonleader_classes.push_back(std::move(cls));
    }
    return a;
}

DemandProfile demand_profile(const UserSubset& subset, const DemandVector& d) {
    if (subset.empty()) throw std::invalid_argument("demand_profile: empty subset");
    std::map<int, int> counts;
    for (int u : subset.members()) {
        if (u > static_cast<int>(d.size())) {
            throw std::invalid_argument("demand_profile: user outside demand vector");
        }
        ++counts[d[u - 1]];
    }
    DemandProfile profile;
    for (const auto& [file, c] : counts) profile.push_back(c);
    std::sort(profile.rbegin(), profile.rend());
    return profile;
}

bool profile_is_t1(const DemandProfile& profile, int replication) {
    if (profile.size() != 2) return false;
    return profile[0] == replication && profile[1] == 1;
}

std::vector<int> demand_multiset(const UserSubset& subset, const DemandVector& d) {
    std::vector<int> out;
    out.reserve(subset.members().size());
    for (int u : subset.members()) out.push_back(d[u - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace scc
