#pragma once

// Ramp secret-sharing outer code: a (binom(K-1,t-1), binom(K,t)) scheme.
// Each file is encoded into binom(K,t) shares so that all of them together
// reconstruct the file while any binom(K-1,t-1) of them reveal nothing.
//
// Construction: per symbol position, a polynomial of degree binom(K,t)-1
// whose low z coefficients are sharing randomness and whose high
// coefficients are the file blocks; share j is its evaluation at the point
// with byte value j.  The low-coefficient placement makes every z-row
// restriction of the randomness columns a true Vandermonde block, which is
// what secrecy_certificate checks mechanically.

#include <span>
#include <vector>

#include "scc/gf256.hpp"
#include "scc/params.hpp"
#include "scc/subsets.hpp"

namespace scc {

struct Share {
    int file = 0;              // 1-based file id
    int holders_rank = 0;      // colex rank of the holder t-subset
    UserSubset holders;        // the t users caching this share
    std::vector<Gf> payload;   // share_len symbols

    // Linear provenance, identical for every symbol position p: symbol p is
    //   sum_i rand_coef[i] * randomness(file, i, p)
    // + sum_b block_coef[b] * file_symbol(file, b*share_len + p).
    std::vector<Gf> rand_coef;   // z entries: alpha^0 .. alpha^(z-1)
    std::vector<Gf> block_coef;  // data_blocks entries: alpha^z .. alpha^(n-1)
};

struct ShareTable {
    std::vector<std::vector<Share>> by_file;     // [file-1][holders_rank]
    std::vector<std::vector<Gf>> randomness;     // [file-1]: z*share_len symbols, coefficient-major

    const Share& share(int file, int holders_rank) const {
        return by_file[file - 1][holders_rank];
    }
};

// Evaluation point for the share at the given colex rank.
Gf share_point(int holders_rank);

// Provenance coefficients (rand_coef, block_coef) for that share.
std::pair<std::vector<Gf>, std::vector<Gf>> share_coefficients(const SystemParams& params,
                                                               int holders_rank);

// Encodes one file with caller-supplied randomness (z*share_len symbols,
// coefficient-major: entry i*share_len + p drives coefficient i at symbol
// position p).  Output is ordered by the colex rank of the holder subsets.
std::vector<std::vector<Gf>> encode_file(std::span<const Gf> file, const SystemParams& params,
                                         std::span<const Gf> randomness);

// Inverts the evaluation map from all binom(K,t) payloads, discards the
// randomness coefficients and reassembles the file.  All shares must be
// present; partial reconstruction is not offered.
std::vector<Gf> reconstruct_file(const std::vector<std::vector<Gf>>& payloads,
                                 const SystemParams& params);

// True iff the z chosen shares are jointly independent of the file: the
// z x z submatrix of the evaluation map restricted to the randomness
// columns has full rank.  For this construction the block is Vandermonde
// and the answer is always yes; the point of the operation is to verify
// that, not to assume it.
bool secrecy_certificate(const SystemParams& params, std::span<const int> share_ranks);

}  // namespace scc
