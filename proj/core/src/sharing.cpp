#include "scc/sharing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "scc/matrix.hpp"

namespace scc {

Gf share_point(int holders_rank) {
    return Gf(static_cast<uint8_t>(holders_rank + 1));
}

std::pair<std::vector<Gf>, std::vector<Gf>> share_coefficients(const SystemParams& params,
                                                               int holders_rank) {
    const Gf a = share_point(holders_rank);
    std::vector<Gf> rand_coef(params.privacy_threshold);
    std::vector<Gf> block_coef(params.data_blocks);
    for (int i = 0; i < params.privacy_threshold; ++i) {
        rand_coef[i] = power(a, static_cast<unsigned>(i));
    }
    for (int b = 0; b < params.data_blocks; ++b) {
        block_coef[b] = power(a, static_cast<unsigned>(params.privacy_threshold + b));
    }
    return {std::move(rand_coef), std::move(block_coef)};
}

std::vector<std::vector<Gf>> encode_file(std::span<const Gf> file, const SystemParams& params,
                                         std::span<const Gf> randomness) {
    const long long fs = params.share_len;
    const int z = params.privacy_threshold;
    if (static_cast<long long>(file.size()) != params.file_len) {
        throw std::invalid_argument("encode_file: wrong file length");
    }
    if (static_cast<long long>(randomness.size()) != static_cast<long long>(z) * fs) {
        throw std::invalid_argument("encode_file: randomness must have z*share_len symbols");
    }
    std::vector<std::vector<Gf>> payloads(params.shares_per_file);
    for (int j = 0; j < params.shares_per_file; ++j) {
        auto [rand_coef, block_coef] = share_coefficients(params, j);
        std::vector<Gf> payload(static_cast<size_t>(fs), gf_zero);
        for (long long p = 0; p < fs; ++p) {
            Gf acc = gf_zero;
            for (int i = 0; i < z; ++i) {
                acc += rand_coef[i] * randomness[static_cast<size_t>(i) * fs + p];
            }
            for (int b = 0; b < params.data_blocks; ++b) {
                acc += block_coef[b] * file[static_cast<size_t>(b) * fs + p];
            }
            payload[static_cast<size_t>(p)] = acc;
        }
        payloads[j] = std::move(payload);
    }
    return payloads;
}

std::vector<Gf> reconstruct_file(const std::vector<std::vector<Gf>>& payloads,
                                 const SystemParams& params) {
    const int n = params.shares_per_file;
    const long long fs = params.share_len;
    if (static_cast<int>(payloads.size()) != n) {
        throw std::invalid_argument("reconstruct_file: all shares are required");
    }
    for (const auto& p : payloads) {
        if (static_cast<long long>(p.size()) != fs) {
            throw std::invalid_argument("reconstruct_file: wrong share length");
        }
    }
    // full Vandermonde evaluation map, invertible for distinct points
    Matrix vand(n, n);
    for (int j = 0; j < n; ++j) {
        const Gf a = share_point(j);
        for (int c = 0; c < n; ++c) {
            vand.at(j, c) = power(a, static_cast<unsigned>(c));
        }
    }
    std::vector<Gf> file(static_cast<size_t>(params.file_len), gf_zero);
    std::vector<Gf> rhs(static_cast<size_t>(n));
    for (long long p = 0; p < fs; ++p) {
        for (int j = 0; j < n; ++j) rhs[j] = payloads[j][static_cast<size_t>(p)];
        auto coeffs = solve(vand, rhs);
        if (!coeffs) throw std::logic_error("reconstruct_file: evaluation map not invertible");
        for (int b = 0; b < params.data_blocks; ++b) {
            file[static_cast<size_t>(b) * fs + p] = (*coeffs)[params.privacy_threshold + b];
        }
    }
    return file;
}

bool secrecy_certificate(const SystemParams& params, std::span<const int> share_ranks) {
    const int z = params.privacy_threshold;
    if (static_cast<int>(share_ranks.size()) != z) {
        throw std::invalid_argument("secrecy_certificate: exactly z share indices required");
    }
    std::set<int> seen;
    for (int r : share_ranks) {
        if (r < 0 || r >= params.shares_per_file) {
            throw std::invalid_argument("secrecy_certificate: share index out of range");
        }
        if (!seen.insert(r).second) {
            throw std::invalid_argument("secrecy_certificate: duplicate share index");
        }
    }
    Matrix block(static_cast<size_t>(z), static_cast<size_t>(z));
    for (int r = 0; r < z; ++r) {
        const Gf a = share_point(share_ranks[r]);
        for (int i = 0; i < z; ++i) {
            block.at(r, i) = power(a, static_cast<unsigned>(i));
        }
    }
    return rank(block) == static_cast<size_t>(z);
}

}  // namespace scc
