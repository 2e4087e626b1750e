#include <doctest.h>

#include "oracles.hpp"
#include "scc/rng.hpp"
#include "scc/sharing.hpp"

using namespace scc;

namespace {

std::vector<Gf> random_symbols(ByteRng& rng, long long n) {
    return rng.gf_vector(static_cast<size_t>(n));
}

}  // namespace

TEST_CASE("share points are distinct nonzero field elements") {
    for (int rank = 0; rank < 200; ++rank) {
        CHECK(share_point(rank).byte() == rank + 1);
    }
}

TEST_CASE("share coefficients are powers of the evaluation point") {
    const SystemParams params = SystemParams::make(4, 4, 2);
    for (int rank = 0; rank < params.shares_per_file; ++rank) {
        auto [rand_coef, block_coef] = share_coefficients(params, rank);
        REQUIRE(static_cast<int>(rand_coef.size()) == params.privacy_threshold);
        REQUIRE(static_cast<int>(block_coef.size()) == params.data_blocks);
        const uint8_t pt = uint8_t(rank + 1);
        for (size_t i = 0; i < rand_coef.size(); ++i) {
            CHECK(rand_coef[i].byte() == oracle::gf_pow(pt, unsigned(i)));
        }
        for (size_t b = 0; b < block_coef.size(); ++b) {
            CHECK(block_coef[b].byte() ==
                  oracle::gf_pow(pt, unsigned(params.privacy_threshold + b)));
        }
    }
}

TEST_CASE("encode evaluates the provenance coefficients") {
    const SystemParams params = SystemParams::make(3, 4, 2, 6);  // F_s = 2
    ByteRng rng(42);
    const auto file = random_symbols(rng, params.file_len);
    const auto randomness = random_symbols(rng, params.privacy_threshold * params.share_len);
    const auto payloads = encode_file(file, params, randomness);
    REQUIRE(static_cast<int>(payloads.size()) == params.shares_per_file);

    for (int rank = 0; rank < params.shares_per_file; ++rank) {
        auto [rand_coef, block_coef] = share_coefficients(params, rank);
        for (long long p = 0; p < params.share_len; ++p) {
            Gf want = gf_zero;
            for (size_t i = 0; i < rand_coef.size(); ++i) {
                want += rand_coef[i] * randomness[i * params.share_len + p];
            }
            for (size_t b = 0; b < block_coef.size(); ++b) {
                want += block_coef[b] * file[b * params.share_len + p];
            }
            CHECK(payloads[rank][p] == want);
        }
    }
}

TEST_CASE("reconstruction round trip over several instances") {
    struct Case {
        int files, users, replication;
        long long file_len;
    };
    for (Case c : {Case{2, 4, 1, 0}, Case{4, 4, 2, 0}, Case{4, 4, 2, 9},
                   Case{5, 5, 2, 0}, Case{5, 5, 3, 0}, Case{3, 6, 4, 0}}) {
        const SystemParams params =
            c.file_len ? SystemParams::make(c.files, c.users, c.replication, c.file_len)
                       : SystemParams::make(c.files, c.users, c.replication);
        ByteRng rng(derive_seed(99, uint64_t(c.users * 100 + c.replication)));
        for (int trial = 0; trial < 25; ++trial) {
            const auto file = random_symbols(rng, params.file_len);
            const auto randomness =
                random_symbols(rng, params.privacy_threshold * params.share_len);
            CHECK(reconstruct_file(encode_file(file, params, randomness), params) == file);
        }
    }
}

TEST_CASE("encoding is linear in file and randomness jointly") {
    const SystemParams params = SystemParams::make(4, 4, 2);
    ByteRng rng(7);
    const auto f1 = random_symbols(rng, params.file_len);
    const auto f2 = random_symbols(rng, params.file_len);
    const auto r1 = random_symbols(rng, params.privacy_threshold * params.share_len);
    const auto r2 = random_symbols(rng, params.privacy_threshold * params.share_len);

    std::vector<Gf> fsum(f1.size()), rsum(r1.size());
    for (size_t i = 0; i < f1.size(); ++i) fsum[i] = f1[i] + f2[i];
    for (size_t i = 0; i < r1.size(); ++i) rsum[i] = r1[i] + r2[i];

    const auto e1 = encode_file(f1, params, r1);
    const auto e2 = encode_file(f2, params, r2);
    const auto esum = encode_file(fsum, params, rsum);
    for (size_t s = 0; s < esum.size(); ++s) {
        for (size_t p = 0; p < esum[s].size(); ++p) {
            CHECK(esum[s][p] == e1[s][p] + e2[s][p]);
        }
    }
}

TEST_CASE("identical inputs encode identically") {
    const SystemParams params = SystemParams::make(4, 4, 2);
    ByteRng rng(12);
    const auto file = random_symbols(rng, params.file_len);
    const auto randomness = random_symbols(rng, params.privacy_threshold * params.share_len);
    CHECK(encode_file(file, params, randomness) == encode_file(file, params, randomness));
}

TEST_CASE("secrecy certificate holds for every threshold subset") {
    for (auto [K, t] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}}) {
        const SystemParams params = SystemParams::make(K, K, t);
        for (const auto& pick :
             oracle::all_subsets(params.shares_per_file, params.privacy_threshold)) {
            std::vector<int> ranks;
            for (int v : pick) ranks.push_back(v - 1);
            CHECK(secrecy_certificate(params, ranks));
        }
    }
}

TEST_CASE("encode and reconstruct validate input shapes") {
    const SystemParams params = SystemParams::make(4, 4, 2);
    ByteRng rng(5);
    const auto file = random_symbols(rng, params.file_len);
    const auto randomness = random_symbols(rng, params.privacy_threshold * params.share_len);

    CHECK_THROWS(encode_file(std::vector<Gf>(params.file_len + 1), params, randomness));
    CHECK_THROWS(encode_file(file, params,
                             std::vector<Gf>(params.privacy_threshold * params.share_len + 1)));

    auto payloads = encode_file(file, params, randomness);
    payloads.pop_back();
    CHECK_THROWS(reconstruct_file(payloads, params));
}

TEST_CASE("file length must divide into blocks") {
    CHECK_THROWS(SystemParams::make(4, 4, 2, 7));  // data_blocks = 3
    const SystemParams padded = SystemParams::make_padded(4, 4, 2, 7);
    CHECK(padded.file_len == 9);
    CHECK(padded.share_len == 3);
}
