#include "scc/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

long long binom(long long n, long long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("binom: negative argument");
    if (m > n) return 0;
    m = std::min(m, n - m);
    long long r = 1;
    for (long long i = 1; i <= m; ++i) {
        long long p;
        if (__builtin_mul_overflow(r, n - m + i, &p)) {
            throw std::overflow_error("binom: result does not fit in long long");
        }
        r = p / i;  // exact: r is binom(n-m+i, i) after this step
    }
    return r;
}

UserSubset::UserSubset(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1) throw std::invalid_argument("UserSubset: indices are 1-based");
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw std::invalid_argument("UserSubset: duplicate member");
        }
    }
}

UserSubset::UserSubset(std::initializer_list<int> members)
    : UserSubset(std::vector<int>(members)) {}

bool UserSubset::contains(int user) const {
    return std::binary_search(members_.begin(), members_.end(), user);
}

UserSubset UserSubset::without(int user) const {
    std::vector<int> m;
    m.reserve(members_.size());
    for (int u : members_) {
        if (u != user) m.push_back(u);
    }
    if (m.size() == members_.size()) throw std::invalid_argument("UserSubset: not a member");
    UserSubset out;
    out.members_ = std::move(m);
    return out;
}

UserSubset UserSubset::with(int user) const {
    if (contains(user)) throw std::invalid_argument("UserSubset: already a member");
    std::vector<int> m = members_;
    m.insert(std::upper_bound(m.begin(), m.end(), user), user);
    UserSubset out;
    out.members_ = std::move(m);
    return out;
}

long long colex_rank(const UserSubset& s) {
    long long rank = 0;
    const auto& m = s.members();
    for (size_t i = 0; i < m.size(); ++i) {
        rank += binom(m[i] - 1, static_cast<long long>(i) + 1);
    }
    return rank;
}

UserSubset colex_subset(long long rank, int r) {
    if (r < 1) throw std::invalid_argument("colex_subset: size must be positive");
    if (rank < 0) throw std::invalid_argument("colex_subset: negative rank");
    std::vector<int> members(r);
    long long rem = rank;
    for (int i = r; i >= 1; --i) {
        // largest a with binom(a-1, i) <= rem
        int a = i;
        while (binom(a, i) <= rem) ++a;
        members[i - 1] = a;
        rem -= binom(a - 1, i);
    }
    return UserSubset(std::move(members));
}

std::vector<UserSubset> enumerate_subsets(int users, int r) {
    if (r < 1) throw std::invalid_argument("enumerate_subsets: size must be positive");
    std::vector<UserSubset> out;
    if (r > users) return out;
    out.reserve(static_cast<size_t>(binom(users, r)));
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(UserSubset(cur));
        // colex successor: bump the leftmost member that has headroom, reset
        // everything before it to {1, ..., i}
        int i = 0;
        while (i < r) {
            int limit = (i + 1 < r) ? cur[i + 1] - 1 : users;
            if (cur[i] < limit) break;
            ++i;
        }
        if (i == r) break;
        ++cur[i];
        for (int j = 0; j < i; ++j) cur[j] = j + 1;
    }
    return out;
}

std::string to_set_string(const UserSubset& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.members().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(s.members()[i]);
    }
    out += "}";
    return out;
}

}  // namespace scc
