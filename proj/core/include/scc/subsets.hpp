#pragma once

// Canonical labeling of user subsets.  Every share, key and transmission in
// the system is indexed by an r-subset of [K]; the single canonical order
// used everywhere is colexicographic, which gives O(r) rank/unrank with no
// precomputed tables.  User indices are 1-based.

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace scc {

// Binomial coefficient with the convention binom(n, m) = 0 for m > n.
// Throws std::overflow_error instead of wrapping, std::invalid_argument on
// negative arguments.
long long binom(long long n, long long m);

class UserSubset {
public:
    UserSubset() = default;
    // Members are sorted; duplicates or indices < 1 are rejected.
    explicit UserSubset(std::vector<int> members);
    UserSubset(std::initializer_list<int> members);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int user) const;
    const std::vector<int>& members() const { return members_; }

    UserSubset without(int user) const;
    UserSubset with(int user) const;

    auto operator<=>(const UserSubset&) const = default;

private:
    std::vector<int> members_;  // strictly increasing, all >= 1
};

// Colexicographic rank of a subset among all subsets of its size.
long long colex_rank(const UserSubset& s);

// Inverse of colex_rank for r-subsets.
UserSubset colex_subset(long long rank, int r);

// All binom(K, r) r-subsets of [K] in colexicographic order.  r > K yields
// an empty list (matching the binom convention); r < 1 is an error.
std::vector<UserSubset> enumerate_subsets(int users, int r);

// "{1,2,3}" -- the serialized form used in reports.
std::string to_set_string(const UserSubset& s);

}  // namespace scc
