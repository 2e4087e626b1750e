#include "scc/placement.hpp"

#include <algorithm>
#include <stdexcept>

#include "scc/rng.hpp"

namespace scc {

bool CacheContents::has_share(int file, int holders_rank) const {
    return std::binary_search(shares.begin(), shares.end(), std::make_pair(file, holders_rank));
}

bool CacheContents::has_key(int subset_rank) const {
    return std::binary_search(keys.begin(), keys.end(), subset_rank);
}

Placement build_placement(FileLibrary library, const SystemParams& params, uint64_t seed) {
    library.validate(params);

    Placement pl;
    pl.params = params;
    pl.seed = seed;
    ByteRng rng(seed);

    const auto t_subsets = enumerate_subsets(params.users, params.replication);
    const long long rand_len = static_cast<long long>(params.privacy_threshold) * params.share_len;

    pl.shares.by_file.resize(params.files);
    pl.shares.randomness.resize(params.files);
    for (int n = 1; n <= params.files; ++n) {
        auto randomness = rng.gf_vector(static_cast<size_t>(rand_len));
        auto payloads = encode_file(library.files[n - 1], params, randomness);
        auto& row = pl.shares.by_file[n - 1];
        row.reserve(t_subsets.size());
        for (size_t j = 0; j < t_subsets.size(); ++j) {
            Share s;
            s.file = n;
            s.holders_rank = static_cast<int>(j);
            s.holders = t_subsets[j];
            s.payload = std::move(payloads[j]);
            std::tie(s.rand_coef, s.block_coef) = share_coefficients(params, s.holders_rank);
            row.push_back(std::move(s));
        }
        pl.shares.randomness[n - 1] = std::move(randomness);
    }

    const long long groups = params.group_count();
    pl.keys.keys.reserve(static_cast<size_t>(groups));
    for (long long a = 0; a < groups; ++a) {
        pl.keys.keys.push_back(rng.gf_vector(static_cast<size_t>(params.share_len)));
    }

    const auto key_subsets = enumerate_subsets(params.users, params.replication + 1);
    pl.caches.resize(params.users);
    for (int k = 1; k <= params.users; ++k) {
        CacheContents& z = pl.caches[k - 1];
        z.user = k;
        for (int n = 1; n <= params.files; ++n) {
            for (size_t j = 0; j < t_subsets.size(); ++j) {
                if (t_subsets[j].contains(k)) z.shares.emplace_back(n, static_cast<int>(j));
            }
        }
        for (size_t a = 0; a < key_subsets.size(); ++a) {
            if (key_subsets[a].contains(k)) z.keys.push_back(static_cast<int>(a));
        }
        std::sort(z.shares.begin(), z.shares.end());
        std::sort(z.keys.begin(), z.keys.end());
    }

    pl.library = std::move(library);
    return pl;
}

void refresh_keys(Placement& placement, uint64_t epoch) {
    ByteRng rng(derive_seed(placement.seed, epoch));
    for (auto& key : placement.keys.keys) {
        for (auto& sym : key) sym = rng.next_gf();
    }
}

MemoryReport memory_report(const std::vector<CacheContents>& caches, const SystemParams& params) {
    MemoryReport report;
    // M*F in symbols; exact because F = binom(K-1,t)*F_s absorbs the K-t denominator
    Rational expected = params.cache_files * Rational(params.file_len);
    if (expected.den() != 1) {
        throw std::logic_error("memory_report: M*F is not an integer symbol count");
    }
    report.expected_total = expected.num();
    report.all_ok = true;
    for (const auto& z : caches) {
        MemoryReport::PerUser row;
        row.user = z.user;
        row.share_symbols = static_cast<long long>(z.shares.size()) * params.share_len;
        row.key_symbols = static_cast<long long>(z.keys.size()) * params.share_len;
        row.total_symbols = row.share_symbols + row.key_symbols;
        row.ok = row.total_symbols == report.expected_total;
        report.all_ok = report.all_ok && row.ok;
        report.per_user.push_back(row);
    }
    return report;
}

}  // namespace scc
