#include "scc/leakage.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

VarLayout::VarLayout(const SystemParams& params) : params_(params) {
    const size_t file_block = static_cast<size_t>(params.files) *
                              static_cast<size_t>(params.file_len);
    const size_t rand_block = static_cast<size_t>(params.files) *
                              static_cast<size_t>(params.privacy_threshold) *
                              static_cast<size_t>(params.share_len);
    const size_t key_block = static_cast<size_t>(params.group_count()) *
                             static_cast<size_t>(params.share_len);
    rand_off_ = file_block;
    key_off_ = file_block + rand_block;
    total_ = key_off_ + key_block;
}

size_t VarLayout::file_col(int file, long long symbol) const {
    return static_cast<size_t>(file - 1) * params_.file_len + symbol;
}

size_t VarLayout::rand_col(int file, int coefficient, long long position) const {
    return rand_off_ +
           (static_cast<size_t>(file - 1) * params_.privacy_threshold + coefficient) *
               params_.share_len +
           position;
}

size_t VarLayout::key_col(int subset_rank, long long position) const {
    return key_off_ + static_cast<size_t>(subset_rank) * params_.share_len + position;
}

std::pair<size_t, size_t> VarLayout::file_span(int file) const {
    const size_t begin = file_col(file, 0);
    return {begin, begin + static_cast<size_t>(params_.file_len)};
}

std::vector<Gf> share_row(const VarLayout& layout, const Share& share, long long position) {
    std::vector<Gf> row(layout.columns(), gf_zero);
    for (size_t i = 0; i < share.rand_coef.size(); ++i) {
        row[layout.rand_col(share.file, static_cast<int>(i), position)] = share.rand_coef[i];
    }
    const long long share_len = layout.params().share_len;
    for (size_t b = 0; b < share.block_coef.size(); ++b) {
        row[layout.file_col(share.file, static_cast<long long>(b) * share_len + position)] =
            share.block_coef[b];
    }
    return row;
}

namespace {

void add_cache_rows(ObservationSystem& sys, const Placement& placement) {
    const SystemParams& params = placement.params;
    const CacheContents& cache = placement.caches[sys.user - 1];
    for (const auto& [file, rank] : cache.shares) {
        const Share& share = placement.shares.share(file, rank);
        for (long long p = 0; p < params.share_len; ++p) {
            sys.rows.append_row(share_row(sys.layout, share, p));
            sys.observed.push_back(share.payload[p]);
        }
    }
    for (int rank : cache.keys) {
        for (long long p = 0; p < params.share_len; ++p) {
            std::vector<Gf> row(sys.layout.columns(), gf_zero);
            row[sys.layout.key_col(rank, p)] = gf_one;
            sys.rows.append_row(row);
            sys.observed.push_back(placement.keys.keys[rank][p]);
        }
    }
}

void add_transmission_rows(ObservationSystem& sys, const TransmissionSet& tx,
                           const Placement& placement) {
    const SystemParams& params = placement.params;
    for (const Transmission& t : tx.txs) {
        for (long long p = 0; p < params.share_len; ++p) {
            std::vector<Gf> row(sys.layout.columns(), gf_zero);
            for (const ShareLabel& label : t.summands) {
                const Share& share = placement.shares.share(label.file, label.holders_rank);
                const auto part = share_row(sys.layout, share, p);
                for (size_t c = 0; c < row.size(); ++c) row[c] += part[c];
            }
            if (t.keyed) row[sys.layout.key_col(t.subset_rank, p)] += gf_one;
            sys.rows.append_row(row);
            sys.observed.push_back(t.payload[p]);
        }
    }
}

}  // namespace

ObservationSystem build_observation(int user, const Placement& placement) {
    if (user < 1 || user > placement.params.users) {
        throw std::out_of_range("build_observation: user out of range");
    }
    ObservationSystem sys{user, VarLayout(placement.params),
                          Matrix(0, VarLayout(placement.params).columns()), {}};
    add_cache_rows(sys, placement);
    return sys;
}

ObservationSystem build_observation(int user, const TransmissionSet& tx,
                                    const Placement& placement) {
    ObservationSystem sys = build_observation(user, placement);
    add_transmission_rows(sys, tx, placement);
    return sys;
}

std::vector<Gf> variable_assignment(const Placement& placement) {
    const SystemParams& params = placement.params;
    const VarLayout layout(params);
    std::vector<Gf> v(layout.columns(), gf_zero);
    for (int n = 1; n <= params.files; ++n) {
        const auto& file = placement.library.files[n - 1];
        for (long long i = 0; i < params.file_len; ++i) v[layout.file_col(n, i)] = file[i];
        const auto& rnd = placement.shares.randomness[n - 1];
        for (int c = 0; c < params.privacy_threshold; ++c) {
            for (long long p = 0; p < params.share_len; ++p) {
                v[layout.rand_col(n, c, p)] = rnd[static_cast<size_t>(c) * params.share_len + p];
            }
        }
    }
    for (size_t rank = 0; rank < placement.keys.keys.size(); ++rank) {
        for (long long p = 0; p < params.share_len; ++p) {
            v[layout.key_col(static_cast<int>(rank), p)] = placement.keys.keys[rank][p];
        }
    }
    return v;
}

Gf apply_row(std::span<const Gf> row, std::span<const Gf> assignment) {
    Gf acc = gf_zero;
    for (size_t c = 0; c < row.size(); ++c) acc += row[c] * assignment[c];
    return acc;
}

long long mi_rank_gap(const ObservationSystem& sys, int demanded_file) {
    const int files = sys.layout.params().files;
    RowBasis full(sys.layout.columns());
    RowBasis kept(sys.layout.columns());
    std::vector<Gf> masked;
    for (size_t r = 0; r < sys.rows.rows(); ++r) {
        const auto row = sys.rows.row(r);
        full.insert(row);
        masked.assign(row.begin(), row.end());
        for (int n = 1; n <= files; ++n) {
            if (n == demanded_file) continue;
            const auto [begin, end] = sys.layout.file_span(n);
            std::fill(masked.begin() + begin, masked.begin() + end, gf_zero);
        }
        kept.insert(masked);
    }
    return static_cast<long long>(full.rank()) - static_cast<long long>(kept.rank());
}

bool is_secure(const ObservationSystem& sys, const DemandVector& d, const Placement& placement) {
    return leaked_shares(sys, d, placement).leaked.empty();
}

LeakReport leaked_shares(const ObservationSystem& sys, const DemandVector& d,
                         const Placement& placement) {
    const SystemParams& params = placement.params;
    LeakReport report;
    report.user = sys.user;

    RowBasis basis(sys.layout.columns());
    for (size_t r = 0; r < sys.rows.rows(); ++r) basis.insert(sys.rows.row(r));

    const int demanded = d[sys.user - 1];
    for (int n = 1; n <= params.files; ++n) {
        if (n == demanded) continue;
        for (long long rank = 0; rank < params.shares_per_file; ++rank) {
            const Share& share = placement.shares.share(n, static_cast<int>(rank));
            if (share.holders.contains(sys.user)) continue;
            long long hits = 0;
            for (long long p = 0; p < params.share_len; ++p) {
                if (basis.contains(share_row(sys.layout, share, p))) ++hits;
            }
            if (hits == params.share_len) {
                report.leaked.push_back({n, static_cast<int>(rank)});
            } else if (hits > 0) {
                report.partial.push_back({n, static_cast<int>(rank)});
            }
        }
    }
    return report;
}

LeakReport analyze_user(int user, const TransmissionSet& tx, const Placement& placement) {
    const ObservationSystem sys = build_observation(user, tx, placement);
    LeakReport report = leaked_shares(sys, tx.d, placement);
    report.secure = report.leaked.empty();
    report.mi_gap = mi_rank_gap(sys, tx.d[user - 1]);
    const DemandAnalysis analysis = analyze_demands(tx.d);
    report.predicted = lemma3_count(user, analysis, placement.params.replication);
    return report;
}

bool theorem1_predicate(int file, const UserSubset& holders, int user,
                        const DemandAnalysis& analysis) {
    const DemandVector& d = analysis.d;
    const int t = holders.size();

    // C1: user outside the holder set, and someone demands `file`, which is
    // not what the user demands.
    if (holders.contains(user)) return false;
    if (file == d[user - 1]) return false;
    const auto x1 = std::find(d.begin(), d.end(), file);
    if (x1 == d.end()) return false;
    const int x1_user = static_cast<int>(x1 - d.begin()) + 1;

    // C2: the holders all demand one file.
    if (demand_profile(holders, d) != DemandProfile{t}) return false;
    if (d[holders.members().front() - 1] == file) return false;  // X1 profile (t+1)

    // C3: adding the demander of `file` gives profile (t,1).
    if (!profile_is_t1(demand_profile(holders.with(x1_user), d), t)) return false;

    // C4: the user shares the holders' demand.
    const auto& cls = analysis.same_demand[holders.members().front() - 1];
    return std::binary_search(cls.begin(), cls.end(), user);
}

long long lemma3_count(int user, const DemandAnalysis& analysis, int replication) {
    const long long class_size =
        static_cast<long long>(analysis.same_demand[user - 1].size());
    return binom(class_size - 1, replication) * (analysis.unique_count - 1);
}

}  // namespace scc
