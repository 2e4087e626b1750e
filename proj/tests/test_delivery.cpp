#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "scc/delivery.hpp"
#include "scc/rng.hpp"
#include "scc/serialize.hpp"

using namespace scc;

namespace {

Placement make(int files, int users, int replication, uint64_t seed) {
    const SystemParams params = SystemParams::make(files, users, replication);
    ByteRng rng(derive_seed(seed, 0));
    return build_placement(FileLibrary::random(params, rng), params, seed);
}

std::vector<std::string> rendered(const TransmissionSet& tx, const SystemParams& params) {
    std::vector<std::string> out;
    for (const Transmission& t : tx.txs) {
        std::string line = "Y_" + subset_compact(t.subset) + " =";
        bool first = true;
        for (const ShareLabel& s : t.summands) {
            line += std::string(first ? " " : " + ") + share_label_compact(s, params);
            first = false;
        }
        out.push_back(line);
    }
    return out;
}

// Field sum of the summand payloads, plus the key when keyed.
std::vector<Gf> expected_payload(const Transmission& t, const Placement& pl) {
    std::vector<Gf> acc(pl.params.share_len, gf_zero);
    if (t.keyed) {
        for (long long p = 0; p < pl.params.share_len; ++p) {
            acc[p] += pl.keys.keys[t.subset_rank][p];
        }
    }
    for (const ShareLabel& s : t.summands) {
        const Share& share = pl.shares.share(s.file, s.holders_rank);
        for (long long p = 0; p < pl.params.share_len; ++p) acc[p] += share.payload[p];
    }
    return acc;
}

}  // namespace

TEST_CASE("keyless transmissions of the worked example, verbatim") {
    const Placement pl = make(4, 4, 2, 1);
    {
        const TransmissionSet tx = transmissions_keyless({1, 1, 2, 2}, pl);
        CHECK(rendered(tx, pl.params) ==
              std::vector<std::string>{"Y_123 = S_1^23 + S_1^13 + S_2^12",
                                       "Y_124 = S_1^24 + S_1^14 + S_2^12",
                                       "Y_134 = S_1^34 + S_2^14 + S_2^13",
                                       "Y_234 = S_1^34 + S_2^24 + S_2^23"});
    }
    {
        const TransmissionSet tx = transmissions_keyless({1, 1, 1, 2}, pl);
        CHECK(rendered(tx, pl.params) ==
              std::vector<std::string>{"Y_123 = S_1^23 + S_1^13 + S_1^12",
                                       "Y_124 = S_1^24 + S_1^14 + S_2^12",
                                       "Y_134 = S_1^34 + S_1^14 + S_2^13",
                                       "Y_234 = S_1^34 + S_1^24 + S_2^23"});
    }
}

TEST_CASE("summands are the demanded shares of the complement subsets") {
    const Placement pl = make(4, 4, 2, 2);
    std::vector<int> d(4, 1);
    do {
        for (const TransmissionSet& tx :
             {transmissions_keys(d, pl), transmissions_keyless(d, pl),
              transmissions_common(d, pl)}) {
            for (const Transmission& t : tx.txs) {
                CHECK(colex_rank(t.subset) == t.subset_rank);
                REQUIRE(t.summands.size() == t.subset.members().size());
                for (size_t i = 0; i < t.summands.size(); ++i) {
                    const int x = t.subset.members()[i];
                    CHECK(t.summands[i].file == d[x - 1]);
                    CHECK(t.summands[i].holders_rank ==
                          colex_rank(t.subset.without(x)));
                }
                CHECK(expected_payload(t, pl) == t.payload);
            }
        }
    } while (oracle::next_demand(d, 4));
}

TEST_CASE("keys scheme emits one keyed payload per slot") {
    const Placement pl = make(4, 4, 2, 3);
    std::vector<int> d(4, 1);
    do {
        const TransmissionSet tx = transmissions_keys(d, pl);
        CHECK(tx.txs.size() == size_t(pl.params.group_count()));
        CHECK(tx.saved_ranks.empty());
        CHECK(tx.keyed_count() == pl.params.group_count());
        CHECK(tx.keyless_count() == 0);
        for (const Transmission& t : tx.txs) CHECK(t.keyed);
    } while (oracle::next_demand(d, 4));
}

TEST_CASE("keyless scheme is the keys scheme minus the pads") {
    const Placement pl = make(4, 4, 2, 4);
    std::vector<int> d(4, 1);
    do {
        const TransmissionSet a = transmissions_keys(d, pl);
        const TransmissionSet b = transmissions_keyless(d, pl);
        REQUIRE(a.txs.size() == b.txs.size());
        CHECK(b.keyed_count() == 0);
        for (size_t i = 0; i < a.txs.size(); ++i) {
            CHECK(a.txs[i].subset_rank == b.txs[i].subset_rank);
            CHECK(a.txs[i].summands == b.txs[i].summands);
            CHECK(!b.txs[i].keyed);
            std::vector<Gf> stripped = a.txs[i].payload;
            for (long long p = 0; p < pl.params.share_len; ++p) {
                stripped[p] += pl.keys.keys[a.txs[i].subset_rank][p];
            }
            CHECK(stripped == b.txs[i].payload);
        }
    } while (oracle::next_demand(d, 4));
}

TEST_CASE("common scheme routes each slot by profile and leader contact") {
    for (int t : {1, 2}) {
        const Placement pl = make(4, 4, t, 5);
        const auto groups = enumerate_subsets(4, t + 1);
        std::vector<int> d(4, 1);
        do {
            const DemandAnalysis analysis = analyze_demands(d);
            const TransmissionSet tx = transmissions_common(d, pl);
            for (size_t rank = 0; rank < groups.size(); ++rank) {
                const UserSubset& A = groups[rank];
                const bool keyed_want = profile_is_t1(demand_profile(A, d), t);
                bool touches = false;
                for (int leader : analysis.leaders) touches = touches || A.contains(leader);

                const Transmission* found = tx.find(int(rank));
                const bool saved = std::binary_search(tx.saved_ranks.begin(),
                                                      tx.saved_ranks.end(), int(rank));
                if (keyed_want) {
                    REQUIRE(found != nullptr);
                    CHECK(found->keyed);
                    CHECK(!saved);
                } else if (touches) {
                    REQUIRE(found != nullptr);
                    CHECK(!found->keyed);
                    CHECK(!saved);
                } else {
                    CHECK(found == nullptr);
                    CHECK(saved);
                }
            }
            CHECK(tx.txs.size() + tx.saved_ranks.size() == groups.size());
        } while (oracle::next_demand(d, 4));
    }
}

TEST_CASE("saved payloads are recoverable from the emitted ones, bit-exactly") {
    for (auto [K, t] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
        const Placement pl = make(K, K, t, 6);
        std::vector<int> d(K, 1);
        do {
            const DemandAnalysis analysis = analyze_demands(d);
            const TransmissionSet tx = transmissions_common(d, pl);
            const TransmissionSet full = transmissions_keyless(d, pl);
            for (int rank : tx.saved_ranks) {
                const UserSubset A = colex_subset(rank, t + 1);
                CHECK(recover_saved(A, tx, analysis) == full.find(rank)->payload);
            }
        } while (oracle::next_demand(d, K));
    }
}

TEST_CASE("recovery only ever combines keyless transmissions") {
    const Placement pl = make(4, 4, 2, 7);
    const DemandVector d{1, 1, 1, 1};
    const DemandAnalysis analysis = analyze_demands(d);
    const TransmissionSet keyed = transmissions_keys(d, pl);
    const TransmissionSet common = transmissions_common(d, pl);
    REQUIRE(!common.saved_ranks.empty());
    const UserSubset saved = colex_subset(common.saved_ranks.front(), 3);
    CHECK_THROWS(recover_saved(saved, keyed, analysis));
    CHECK_NOTHROW(recover_saved(saved, common, analysis));
}

TEST_CASE("distinct transmissions share at most one summand label") {
    for (int t : {1, 2}) {
        const Placement pl = make(4, 4, t, 8);
        std::vector<int> d(4, 1);
        do {
            for (const TransmissionSet& tx :
                 {transmissions_keys(d, pl), transmissions_keyless(d, pl),
                  transmissions_common(d, pl)}) {
                for (size_t i = 0; i < tx.txs.size(); ++i) {
                    std::set<ShareLabel> a(tx.txs[i].summands.begin(),
                                           tx.txs[i].summands.end());
                    for (size_t j = i + 1; j < tx.txs.size(); ++j) {
                        int shared = 0;
                        for (const ShareLabel& s : tx.txs[j].summands) shared += a.count(s);
                        CHECK(shared <= 1);
                    }
                }
            }
        } while (oracle::next_demand(d, 4));
    }
}

TEST_CASE("transmission sets are colex ordered with a consistent rank index") {
    const Placement pl = make(4, 4, 2, 9);
    const TransmissionSet tx = transmissions_common({1, 2, 2, 1}, pl);
    for (size_t i = 1; i < tx.txs.size(); ++i) {
        CHECK(tx.txs[i - 1].subset_rank < tx.txs[i].subset_rank);
    }
    CHECK(std::is_sorted(tx.saved_ranks.begin(), tx.saved_ranks.end()));
    for (size_t i = 0; i < tx.txs.size(); ++i) {
        CHECK(tx.find(tx.txs[i].subset_rank) == &tx.txs[i]);
    }
    for (int rank : tx.saved_ranks) CHECK(tx.find(rank) == nullptr);
}

TEST_CASE("scheme names round trip") {
    for (Scheme s : {Scheme::keys, Scheme::keyless, Scheme::common}) {
        CHECK(scheme_from_name(scheme_name(s)) == s);
    }
    CHECK_THROWS(scheme_from_name("bogus"));
}
