#include "scc/runner.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "scc/decoder.hpp"
#include "scc/rng.hpp"

namespace scc {

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = detail::checked_mul(r, base);
    return r;
}

// --- config access -------------------------------------------------------

const json* find_key(const json& config, const char* key) {
    if (!config.is_object()) throw ConfigError("config must be a JSON object");
    auto it = config.find(key);
    return it == config.end() || it->is_null() ? nullptr : &*it;
}

long long require_int(const json& config, const char* key) {
    const json* v = find_key(config, key);
    if (v == nullptr || !v->is_number_integer()) {
        throw ConfigError(std::string("config: missing integer field '") + key + "'");
    }
    return v->get<long long>();
}

long long get_int(const json& config, const char* key, long long fallback) {
    const json* v = find_key(config, key);
    if (v == nullptr) return fallback;
    if (!v->is_number_integer()) {
        throw ConfigError(std::string("config: field '") + key + "' must be an integer");
    }
    return v->get<long long>();
}

bool get_bool(const json& config, const char* key, bool fallback) {
    const json* v = find_key(config, key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) {
        throw ConfigError(std::string("config: field '") + key + "' must be a boolean");
    }
    return v->get<bool>();
}

std::string get_str(const json& config, const char* key, const std::string& fallback) {
    const json* v = find_key(config, key);
    if (v == nullptr) return fallback;
    if (!v->is_string()) {
        throw ConfigError(std::string("config: field '") + key + "' must be a string");
    }
    return v->get<std::string>();
}

SystemParams params_from(const json& config) {
    const int files = static_cast<int>(require_int(config, "files"));
    const int users = static_cast<int>(require_int(config, "users"));
    const int replication = static_cast<int>(require_int(config, "replication"));
    std::optional<long long> file_len;
    if (const json* v = find_key(config, "file_len")) {
        if (!v->is_number_integer()) throw ConfigError("config: 'file_len' must be an integer");
        file_len = v->get<long long>();
    }
    try {
        return SystemParams::make(files, users, replication, file_len);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

std::vector<Scheme> schemes_from(const json& config, std::vector<Scheme> fallback) {
    const json* v = find_key(config, "schemes");
    if (v == nullptr) return fallback;
    if (!v->is_array() || v->empty()) throw ConfigError("config: 'schemes' must be a nonempty array");
    std::vector<Scheme> out;
    for (const auto& entry : *v) {
        if (!entry.is_string()) throw ConfigError("config: scheme names must be strings");
        try {
            out.push_back(scheme_from_name(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    return out;
}

std::optional<DemandVector> demands_from(const json& config, const SystemParams& params) {
    const json* v = find_key(config, "demands");
    if (v == nullptr) return std::nullopt;
    if (!v->is_array()) throw ConfigError("config: 'demands' must be an array");
    DemandVector d;
    for (const auto& entry : *v) {
        if (!entry.is_number_integer()) throw ConfigError("config: demand entries must be integers");
        d.push_back(entry.get<int>());
    }
    try {
        validate_demands(d, params.files, params.users);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return d;
}

uint64_t seed_from(const json& config, const RunOverrides& overrides) {
    if (overrides.seed) return *overrides.seed;
    return static_cast<uint64_t>(get_int(config, "seed", 1));
}

int jobs_from(const json& config, const RunOverrides& overrides) {
    const int jobs = overrides.jobs ? *overrides.jobs
                                    : static_cast<int>(get_int(config, "jobs", 1));
    if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
    return jobs;
}

// user 1 is the most significant base-N digit, so index order matches the
// odometer order used by exact averaging.
DemandVector nth_demand(long long index, int files, int users) {
    DemandVector d(users);
    for (int k = users - 1; k >= 0; --k) {
        d[k] = static_cast<int>(index % files) + 1;
        index /= files;
    }
    return d;
}

TransmissionSet make_transmissions(Scheme scheme, const DemandVector& d, const Placement& pl) {
    switch (scheme) {
        case Scheme::keys: return transmissions_keys(d, pl);
        case Scheme::keyless: return transmissions_keyless(d, pl);
        case Scheme::common: return transmissions_common(d, pl);
    }
    throw std::logic_error("make_transmissions: bad scheme");
}

// --- verify --------------------------------------------------------------

struct Failure {
    Scheme scheme = Scheme::keys;
    DemandVector d;
    int user = 0;
    std::string kind;                 // "decode" | "leak" | "error"
    std::vector<std::string> detail;  // leaked labels or the error message
};

void check_vector(Scheme scheme, const DemandVector& d, const Placement& pl,
                  std::vector<Failure>& out) {
    TransmissionSet tx;
    try {
        tx = make_transmissions(scheme, d, pl);
    } catch (const std::exception& e) {
        out.push_back({scheme, d, 0, "error", {e.what()}});
        return;
    }
    for (int k = 1; k <= pl.params.users; ++k) {
        try {
            const DecodeResult dec = decode_user(k, tx, pl);
            if (dec.payload != pl.library.files[d[k - 1] - 1]) {
                out.push_back({scheme, d, k, "decode", {}});
            }
        } catch (const std::exception& e) {
            out.push_back({scheme, d, k, "error", {e.what()}});
        }
        const LeakReport leak = analyze_user(k, tx, pl);
        if (!leak.secure) {
            Failure f{scheme, d, k, "leak", {}};
            for (const ShareLabel& s : leak.leaked) f.detail.push_back(share_label(s, pl.params));
            out.push_back(std::move(f));
        }
    }
}

}  // namespace

VerifyOutcome run_verify(const json& config, const RunOverrides& overrides) {
    const SystemParams params = params_from(config);
    const uint64_t seed = seed_from(config, overrides);
    const int jobs = jobs_from(config, overrides);
    const bool fresh_keys = get_bool(config, "fresh_keys", true);
    const auto schemes = schemes_from(config, {Scheme::common});
    const auto fixed = demands_from(config, params);
    const std::string sweep = get_str(config, "sweep", fixed ? "fixed" : "exhaustive");

    // the demand list, either explicit, everything, or a seeded sample
    std::vector<DemandVector> vectors;
    if (fixed) {
        vectors.push_back(*fixed);
    } else if (sweep == "exhaustive") {
        const long long total = pow_ll(params.files, params.users);
        constexpr long long kSweepBudget = 1'000'000;
        if (total > kSweepBudget) {
            throw ConfigError("config: exhaustive sweep over " + std::to_string(total) +
                              " demand vectors exceeds the budget of " +
                              std::to_string(kSweepBudget) + "; use sweep=sampled");
        }
        vectors.reserve(static_cast<size_t>(total));
        for (long long i = 0; i < total; ++i) {
            vectors.push_back(nth_demand(i, params.files, params.users));
        }
    } else if (sweep == "sampled") {
        const long long samples = get_int(config, "samples", 100);
        if (samples < 1) throw ConfigError("config: samples must be >= 1");
        ByteRng rng(derive_seed(seed, 0x5EEDULL));
        for (long long i = 0; i < samples; ++i) {
            DemandVector d(params.users);
            for (auto& v : d) {
                v = static_cast<int>(rng.uniform(static_cast<uint64_t>(params.files))) + 1;
            }
            vectors.push_back(std::move(d));
        }
    } else {
        throw ConfigError("config: sweep must be 'exhaustive' or 'sampled'");
    }

    ByteRng rng(seed);
    const Placement base = build_placement(FileLibrary::random(params, rng), params, seed);

    std::vector<std::vector<Failure>> per_vector(vectors.size());
    auto work = [&](int worker) {
        Placement local = base;
        for (size_t i = worker; i < vectors.size(); i += static_cast<size_t>(jobs)) {
            if (fresh_keys) refresh_keys(local, static_cast<uint64_t>(i));
            for (Scheme scheme : schemes) {
                check_vector(scheme, vectors[i], local, per_vector[i]);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    VerifyOutcome outcome;
    json failures = json::array();
    for (const auto& fs : per_vector) {
        for (const Failure& f : fs) {
            json j;
            j["scheme"] = scheme_name(f.scheme);
            j["demands"] = f.d;
            j["user"] = f.user;
            j["kind"] = f.kind;
            if (!f.detail.empty()) j[f.kind == "leak" ? "leaked" : "message"] = f.detail;
            failures.push_back(std::move(j));
            outcome.ok = false;
        }
    }

    json& rep = outcome.report;
    rep["command"] = "verify";
    rep["files"] = params.files;
    rep["users"] = params.users;
    rep["replication"] = params.replication;
    rep["file_len"] = params.file_len;
    rep["memory"] = params.cache_files.str();
    rep["seed"] = seed;
    rep["fresh_keys"] = fresh_keys;
    rep["sweep"] = sweep;
    json names = json::array();
    for (Scheme s : schemes) names.push_back(scheme_name(s));
    rep["schemes"] = std::move(names);
    rep["vectors_checked"] = vectors.size();
    rep["users_per_vector"] = params.users;
    rep["failures"] = std::move(failures);
    rep["ok"] = outcome.ok;
    return outcome;
}

// --- rates ---------------------------------------------------------------

std::string RatesOutcome::csv() const {
    std::string out = csv_header() + "\n";
    for (const RateReport& r : rows) out += csv_row(r) + "\n";
    return out;
}

RatesOutcome run_rates(const json& config, const RunOverrides& overrides) {
    const uint64_t seed = seed_from(config, overrides);
    const auto schemes = schemes_from(config, {Scheme::keys, Scheme::common});

    std::vector<json> points;
    if (const json* v = find_key(config, "points")) {
        if (!v->is_array() || v->empty()) {
            throw ConfigError("config: 'points' must be a nonempty array");
        }
        points.assign(v->begin(), v->end());
    } else {
        points.push_back(config);
    }

    AvgOptions opts;
    opts.seed = seed;
    opts.samples = get_int(config, "samples", 10'000);
    opts.exact_budget = get_int(config, "exact_budget", 2'000'000);
    const std::string mode = get_str(config, "mode", "exact");
    if (mode == "exact") {
        opts.mode = AvgMode::exact;
    } else if (mode == "exact-profile") {
        opts.mode = AvgMode::exact_profile;
    } else if (mode == "monte-carlo") {
        opts.mode = AvgMode::monte_carlo;
    } else {
        throw ConfigError("config: mode must be exact, exact-profile or monte-carlo");
    }

    RatesOutcome outcome;
    for (const json& point : points) {
        const SystemParams params = params_from(point);
        auto fixed = demands_from(point, params);
        if (!fixed) fixed = demands_from(config, params);
        for (Scheme scheme : schemes) {
            RateReport row;
            if (fixed) {
                const DemandRate r = rate_for_demand(scheme, *fixed, params);
                row.scheme = scheme;
                row.files = params.files;
                row.users = params.users;
                row.replication = params.replication;
                row.memory = params.cache_files;
                row.mode = AvgMode::fixed_demand;
                row.average = r.rate;
                row.average_value = r.rate.to_double();
                row.samples = 1;
                row.seed = seed;
            } else {
                try {
                    row = average_rate(scheme, params, opts);
                } catch (const std::runtime_error& e) {
                    throw ConfigError(e.what());
                }
            }
            outcome.rows.push_back(row);
        }
    }

    json& rep = outcome.report;
    rep["command"] = "rates";
    rep["seed"] = seed;
    rep["rows"] = json::array();
    for (const RateReport& r : outcome.rows) rep["rows"].push_back(to_json(r));
    return outcome;
}

// --- trace ---------------------------------------------------------------

namespace {

std::string key_label_compact(const UserSubset& subset) {
    if (subset.members().back() > 9) return key_label(subset);
    return "T_" + subset_compact(subset);
}

}  // namespace

std::string run_trace(const json& config, const RunOverrides& overrides) {
    const SystemParams params = params_from(config);
    const uint64_t seed = seed_from(config, overrides);
    Scheme scheme;
    try {
        scheme = scheme_from_name(get_str(config, "scheme", "common"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    const auto fixed = demands_from(config, params);
    if (!fixed) throw ConfigError("config: trace requires a 'demands' vector");
    const DemandVector& d = *fixed;

    ByteRng rng(seed);
    const Placement pl = build_placement(FileLibrary::random(params, rng), params, seed);
    const TransmissionSet tx = make_transmissions(scheme, d, pl);
    const DemandAnalysis analysis = analyze_demands(d);

    std::string out;
    out += "instance: N=" + std::to_string(params.files) + " K=" + std::to_string(params.users) +
           " t=" + std::to_string(params.replication) + " F=" + std::to_string(params.file_len) +
           " F_s=" + std::to_string(params.share_len) + " M=" + params.cache_files.str() +
           " seed=" + std::to_string(seed) + "\n";
    out += "scheme: " + scheme_name(scheme) + "\n";
    out += "demands: (";
    for (size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
    out += ")\n";
    out += "leaders: " + to_set_string(UserSubset(analysis.leaders)) +
           "  N_e=" + std::to_string(analysis.unique_count) + "\n";
    out += "transmissions: " + std::to_string(tx.txs.size()) + " = " +
           std::to_string(tx.keyed_count()) + " keyed + " + std::to_string(tx.keyless_count()) +
           " keyless, " + std::to_string(tx.saved_ranks.size()) + " saved of " +
           std::to_string(params.group_count()) + " slots\n";
    for (const Transmission& t : tx.txs) {
        out += "  Y_" + subset_compact(t.subset) + " =";
        bool first = true;
        if (t.keyed) {
            out += " " + key_label_compact(t.subset);
            first = false;
        }
        for (const ShareLabel& s : t.summands) {
            out += std::string(first ? " " : " + ") + share_label_compact(s, params);
            first = false;
        }
        out += "\n";
    }
    if (!tx.saved_ranks.empty()) {
        out += "saved:";
        for (int rank : tx.saved_ranks) {
            out += " " + to_set_string(colex_subset(rank, params.replication + 1));
        }
        out += "\n";
    }

    for (int k = 1; k <= params.users; ++k) {
        out += "user " + std::to_string(k) + ": ";
        try {
            const DecodeResult dec = decode_user(k, tx, pl);
            out += dec.payload == pl.library.files[d[k - 1] - 1] ? "decode ok" : "DECODE MISMATCH";
        } catch (const std::exception& e) {
            out += std::string("decode error (") + e.what() + ")";
        }
        const LeakReport leak = analyze_user(k, tx, pl);
        if (leak.secure) {
            out += ", secure";
        } else {
            out += ", insecure, leaked:";
            for (const ShareLabel& s : leak.leaked) {
                out += " " + share_label_compact(s, params);
            }
        }
        if (leak.mi_gap > 0) out += " (joint rank gap " + std::to_string(leak.mi_gap) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace scc
