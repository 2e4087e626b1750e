#pragma once

// Exact secrecy analysis.  Every symbol a user ever sees -- its cache and
// the broadcast -- is a GF(2^8)-linear functional of the instance variables
// (file symbols, sharing randomness, keys).  Stacking those functionals
// into a matrix turns the mutual-information question into a rank identity
// and "which shares leak" into row-space membership, both decided exactly.

#include <cstddef>
#include <utility>
#include <vector>

#include "scc/delivery.hpp"
#include "scc/demands.hpp"
#include "scc/matrix.hpp"
#include "scc/placement.hpp"

namespace scc {

// Global variable column order: all file symbols, then all sharing
// randomness, then all key symbols.
class VarLayout {
  public:
    explicit VarLayout(const SystemParams& params);

    size_t columns() const { return total_; }

    size_t file_col(int file, long long symbol) const;
    size_t rand_col(int file, int coefficient, long long position) const;
    size_t key_col(int subset_rank, long long position) const;

    // Half-open column range holding one file's symbols.
    std::pair<size_t, size_t> file_span(int file) const;

    const SystemParams& params() const { return params_; }

  private:
    SystemParams params_;
    size_t rand_off_ = 0;
    size_t key_off_ = 0;
    size_t total_ = 0;
};

struct ObservationSystem {
    int user = 0;
    VarLayout layout;
    Matrix rows;               // one functional per observed symbol
    std::vector<Gf> observed;  // the symbol values, aligned with rows
};

// The provenance row of one symbol position of one share.
std::vector<Gf> share_row(const VarLayout& layout, const Share& share, long long position);

// Cache-only system: every symbol of Z_user.
ObservationSystem build_observation(int user, const Placement& placement);

// Cache plus broadcast: every symbol of Z_user and of each transmission.
ObservationSystem build_observation(int user, const TransmissionSet& tx,
                                    const Placement& placement);

// The instance's true variable values in layout order, for validating that
// rows reproduce what was observed.
std::vector<Gf> variable_assignment(const Placement& placement);

Gf apply_row(std::span<const Gf> row, std::span<const Gf> assignment);

// Secrecy verdict: true iff no whole share of a non-demanded file lies in
// the observation row space (equivalently, leaked_shares comes back empty).
// Share granularity is the yardstick the schemes are designed against;
// see mi_rank_gap for the stricter joint measure.
bool is_secure(const ObservationSystem& sys, const DemandVector& d, const Placement& placement);

// Exact joint-information diagnostic.  With the observation rows split as
// [A | B] (A = columns of the files except demanded_file, B = the rest),
// returns rank([A|B]) - rank(B); for jointly uniform independent variables
// the gap is zero iff the mutual information with the secret files is
// zero.  Sums of transmissions can expose a linear combination of shares
// without exposing any share, making the gap positive while the share
// verdict stays secure; the gap is reported so that stays visible.
// demanded_file 0 treats every file as secret (cache-only audits).
long long mi_rank_gap(const ObservationSystem& sys, int demanded_file);

struct LeakReport {
    int user = 0;
    bool secure = false;              // no whole share exposed
    std::vector<ShareLabel> leaked;   // every symbol position decodable
    std::vector<ShareLabel> partial;  // some but not all positions decodable
    long long mi_gap = 0;             // joint rank diagnostic
    long long predicted = 0;          // lemma3_count for these demands
};

// Labels (n, X') with n != d_user, user not in X', whose payload rows all
// lie in the row space of sys.  partial collects labels where only some
// positions lie there; the construction should never produce any.
LeakReport leaked_shares(const ObservationSystem& sys, const DemandVector& d,
                         const Placement& placement);

// Full per-user analysis: build, rank test, share scan, predicted count.
LeakReport analyze_user(int user, const TransmissionSet& tx, const Placement& placement);

// Conditions C1-C4 for a share (file, holders) leaking to user under the
// keyless scheme: user outside the holder set demanding something else,
// holders all on one demand, adding a demander of `file` gives profile
// (t,1), and user belongs to the holders' demand class.
bool theorem1_predicate(int file, const UserSubset& holders, int user,
                        const DemandAnalysis& analysis);

// binom(|E_user|-1, t) * (N_e - 1): how many shares leak to user.
long long lemma3_count(int user, const DemandAnalysis& analysis, int replication);

}  // namespace scc
