#include "scc/params.hpp"

#include <stdexcept>
#include <string>

#include "scc/subsets.hpp"

namespace scc {

SystemParams SystemParams::make(int files, int users, int replication,
                                std::optional<long long> file_len) {
    if (files < 1) throw std::invalid_argument("params: need at least one file");
    if (users < 3) throw std::invalid_argument("params: need at least three users");
    if (replication < 1 || replication > users - 2) {
        throw std::invalid_argument("params: replication must be in 1..K-2 (got t=" +
                                    std::to_string(replication) + ", K=" +
                                    std::to_string(users) + ")");
    }
    SystemParams p;
    p.files = files;
    p.users = users;
    p.replication = replication;
    long long n_shares = binom(users, replication);
    if (n_shares > 255) {
        throw std::invalid_argument("params: binom(K,t) = " + std::to_string(n_shares) +
                                    " exceeds the 255 distinct evaluation points of GF(2^8)");
    }
    p.shares_per_file = static_cast<int>(n_shares);
    p.privacy_threshold = static_cast<int>(binom(users - 1, replication - 1));
    p.data_blocks = p.shares_per_file - p.privacy_threshold;
    // Pascal: binom(K,t) - binom(K-1,t-1) = binom(K-1,t)
    if (p.data_blocks != binom(users - 1, replication)) {
        throw std::logic_error("params: block-count identity violated");
    }
    p.file_len = file_len.value_or(p.data_blocks);
    if (p.file_len < p.data_blocks || p.file_len % p.data_blocks != 0) {
        throw std::invalid_argument("params: file length must be a positive multiple of " +
                                    std::to_string(p.data_blocks));
    }
    p.share_len = p.file_len / p.data_blocks;
    p.cache_files = Rational(static_cast<long long>(files) * replication, users - replication) +
                    Rational(1);
    return p;
}

SystemParams SystemParams::make_padded(int files, int users, int replication,
                                       long long min_file_len) {
    SystemParams base = make(files, users, replication);
    long long blocks = (min_file_len + base.data_blocks - 1) / base.data_blocks;
    if (blocks < 1) blocks = 1;
    return make(files, users, replication, blocks * base.data_blocks);
}

long long SystemParams::group_count() const {
    return binom(users, replication + 1);
}

FileLibrary FileLibrary::random(const SystemParams& params, ByteRng& rng) {
    FileLibrary lib;
    lib.files.reserve(params.files);
    for (int n = 0; n < params.files; ++n) {
        lib.files.push_back(rng.gf_vector(static_cast<size_t>(params.file_len)));
    }
    return lib;
}

void FileLibrary::validate(const SystemParams& params) const {
    if (static_cast<int>(files.size()) != params.files) {
        throw std::invalid_argument("library: wrong file count");
    }
    for (const auto& f : files) {
        if (static_cast<long long>(f.size()) != params.file_len) {
            throw std::invalid_argument("library: wrong file length");
        }
    }
}

}  // namespace scc
