#include "scc/rates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace scc {

namespace {

// (t+1)-subsets drawn from a universe partitioned into the given classes
// that take t members from one class and one from another.
long long t1_subset_count(const std::vector<long long>& class_sizes, int t) {
    long long universe = 0;
    for (long long s : class_sizes) universe += s;
    long long total = 0;
    if (t >= 2) {
        for (long long s : class_sizes) total += binom(s, t) * (universe - s);
    } else {
        for (size_t i = 0; i < class_sizes.size(); ++i) {
            for (size_t j = i + 1; j < class_sizes.size(); ++j) {
                total += class_sizes[i] * class_sizes[j];
            }
        }
    }
    return total;
}

}  // namespace

long long delta_t(const DemandAnalysis& analysis, int replication, int users) {
    std::vector<long long> sizes;
    sizes.reserve(analysis.nonleader_classes.size());
    for (const auto& cls : analysis.nonleader_classes) {
        sizes.push_back(static_cast<long long>(cls.size()));
    }
    long long nonleaders = 0;
    for (long long s : sizes) nonleaders += s;
    if (nonleaders != users - analysis.unique_count) {
        throw std::logic_error("delta_t: classes do not partition the non-leaders");
    }
    return t1_subset_count(sizes, replication);
}

DemandRate rate_for_demand(Scheme scheme, const DemandVector& d, const SystemParams& params) {
    validate_demands(d, params.files, params.users);
    const long long groups = params.group_count();

    DemandRate r;
    r.scheme = scheme;
    if (scheme == Scheme::keys) {
        r.keyed = groups;
    } else if (scheme == Scheme::keyless) {
        r.keyless = groups;
    } else {
        const DemandAnalysis analysis = analyze_demands(d);
        r.delta = delta_t(analysis, params.replication, params.users);
        r.saved = binom(params.users - analysis.unique_count, params.replication + 1) - r.delta;

        std::vector<long long> class_sizes;
        for (int leader : analysis.leaders) {
            class_sizes.push_back(
                static_cast<long long>(analysis.same_demand[leader - 1].size()));
        }
        r.keyed = t1_subset_count(class_sizes, params.replication);
        r.keyless = groups - r.saved - r.keyed;
    }
    r.rate = Rational(r.transmitted(), params.data_blocks);
    return r;
}

Rational rate_keys_closed_form(int files, int users, int replication) {
    if (replication < 1 || replication > users - 2) {
        throw std::invalid_argument("rate_keys_closed_form: replication must be in 1..users-2");
    }
    const Rational n(files), k(users);
    const Rational m = Rational(static_cast<long long>(files) * replication,
                                users - replication) + Rational(1);
    return (k * (n + m - Rational(1))) / (n + (k + Rational(1)) * (m - Rational(1)));
}

const char* avg_mode_name(AvgMode mode) {
    switch (mode) {
        case AvgMode::exact: return "exact";
        case AvgMode::exact_profile: return "exact-profile";
        case AvgMode::monte_carlo: return "monte-carlo";
        case AvgMode::fixed_demand: return "fixed";
    }
    throw std::logic_error("avg_mode_name: bad mode");
}

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = detail::checked_mul(r, base);
    return r;
}

RateReport report_shell(Scheme scheme, const SystemParams& params, const AvgOptions& opts) {
    RateReport rep;
    rep.scheme = scheme;
    rep.files = params.files;
    rep.users = params.users;
    rep.replication = params.replication;
    rep.memory = params.cache_files;
    rep.mode = opts.mode;
    rep.seed = opts.seed;
    return rep;
}

RateReport average_exact(Scheme scheme, const SystemParams& params, const AvgOptions& opts) {
    const long long total = pow_ll(params.files, params.users);
    if (total > opts.exact_budget) {
        throw std::runtime_error("average_rate: " + std::to_string(total) +
                                 " demand vectors exceed the exact budget of " +
                                 std::to_string(opts.exact_budget) +
                                 "; use monte-carlo mode");
    }
    RateReport rep = report_shell(scheme, params, opts);
    Rational sum(0);
    DemandVector d(params.users, 1);
    for (;;) {
        sum += rate_for_demand(scheme, d, params).rate;
        int pos = params.users - 1;
        while (pos >= 0 && d[pos] == params.files) d[pos--] = 1;
        if (pos < 0) break;
        ++d[pos];
    }
    rep.average = sum / Rational(total);
    rep.average_value = rep.average.to_double();
    rep.samples = total;
    return rep;
}

// Demand vectors sharing a sorted multiplicity profile share a rate, so sum
// partition-by-partition: weight = (ways to assign distinct files to the
// parts) * (ways to assign users to the parts).
void walk_partitions(int remaining, int max_part, std::vector<int>& parts,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        walk_partitions(remaining - p, p, parts, visit);
        parts.pop_back();
    }
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = detail::checked_mul(r, i);
    return r;
}

RateReport average_profile(Scheme scheme, const SystemParams& params, const AvgOptions& opts) {
    RateReport rep = report_shell(scheme, params, opts);
    Rational sum(0);
    long long covered = 0;
    std::vector<int> parts;
    walk_partitions(params.users, params.users, parts, [&](const std::vector<int>& profile) {
        if (static_cast<int>(profile.size()) > params.files) return;

        // representative demand vector: profile[i] users on file i+1
        DemandVector d;
        for (size_t i = 0; i < profile.size(); ++i) {
            d.insert(d.end(), profile[i], static_cast<int>(i) + 1);
        }

        long long user_ways = factorial(params.users);
        for (int p : profile) user_ways /= factorial(p);

        long long file_ways = 1;
        for (size_t i = 0; i < profile.size(); ++i) {
            file_ways = detail::checked_mul(file_ways, params.files - static_cast<long long>(i));
        }
        int run = 1;
        for (size_t i = 1; i <= profile.size(); ++i) {
            if (i < profile.size() && profile[i] == profile[i - 1]) {
                ++run;
            } else {
                file_ways /= factorial(run);
                run = 1;
            }
        }

        const long long weight = detail::checked_mul(user_ways, file_ways);
        sum += Rational(weight) * rate_for_demand(scheme, d, params).rate;
        covered += weight;
    });
    const long long total = pow_ll(params.files, params.users);
    if (covered != total) {
        throw std::logic_error("average_rate: profile weights sum to " +
                               std::to_string(covered) + ", expected " + std::to_string(total));
    }
    rep.average = sum / Rational(total);
    rep.average_value = rep.average.to_double();
    rep.samples = total;
    return rep;
}

RateReport average_sampled(Scheme scheme, const SystemParams& params, const AvgOptions& opts) {
    if (opts.samples < 2) throw std::invalid_argument("average_rate: need at least 2 samples");
    RateReport rep = report_shell(scheme, params, opts);
    ByteRng rng(opts.seed);
    DemandVector d(params.users);
    double mean = 0.0, m2 = 0.0;
    for (long long i = 1; i <= opts.samples; ++i) {
        for (int k = 0; k < params.users; ++k) {
            d[k] = static_cast<int>(rng.uniform(static_cast<uint32_t>(params.files))) + 1;
        }
        const double x = rate_for_demand(scheme, d, params).rate.to_double();
        const double delta = x - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (x - mean);
    }
    rep.average_value = mean;
    rep.std_error = std::sqrt(m2 / static_cast<double>(opts.samples - 1) /
                              static_cast<double>(opts.samples));
    rep.samples = opts.samples;
    return rep;
}

}  // namespace

RateReport average_rate(Scheme scheme, const SystemParams& params, const AvgOptions& opts) {
    switch (opts.mode) {
        case AvgMode::exact: return average_exact(scheme, params, opts);
        case AvgMode::exact_profile: return average_profile(scheme, params, opts);
        case AvgMode::monte_carlo: return average_sampled(scheme, params, opts);
        case AvgMode::fixed_demand:
            throw std::invalid_argument("average_rate: fixed_demand is not an averaging mode");
    }
    throw std::logic_error("average_rate: bad mode");
}

}  // namespace scc
