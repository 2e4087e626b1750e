#pragma once

// Rate accounting: per-demand transmission counts from the counting
// formulas (cross-checked elsewhere against the delivery module), the
// closed form for the keyed scheme, and uniform-demand averages by exact
// enumeration, profile-collapsed enumeration, or sampling.

#include <cstdint>
#include <vector>

#include "scc/delivery.hpp"
#include "scc/demands.hpp"
#include "scc/params.hpp"
#include "scc/rational.hpp"

namespace scc {

// Non-leader (t+1)-subsets with profile (t,1): these cannot be saved.
long long delta_t(const DemandAnalysis& analysis, int replication, int users);

struct DemandRate {
    Scheme scheme = Scheme::keys;
    long long keyed = 0;
    long long keyless = 0;
    long long saved = 0;
    long long delta = 0;

    long long transmitted() const { return keyed + keyless; }

    // transmitted * F_s / F, in units of F.
    Rational rate{0};
};

// Counts from the demand analysis alone; no placement required.
DemandRate rate_for_demand(Scheme scheme, const DemandVector& d, const SystemParams& params);

// K(N+M-1)/(N+(K+1)(M-1)) at M = Nt/(K-t)+1, evaluated exactly.
Rational rate_keys_closed_form(int files, int users, int replication);

// fixed_demand tags single-demand-vector reports; it is not an averaging
// mode and average_rate rejects it.
enum class AvgMode { exact, exact_profile, monte_carlo, fixed_demand };

const char* avg_mode_name(AvgMode mode);

struct AvgOptions {
    AvgMode mode = AvgMode::exact;
    long long exact_budget = 2'000'000;  // refuse exact enumeration past this many vectors
    long long samples = 10'000;          // monte-carlo draws
    uint64_t seed = 1;
};

struct RateReport {
    Scheme scheme = Scheme::keys;
    int files = 0;
    int users = 0;
    int replication = 0;
    Rational memory{0};          // M
    AvgMode mode = AvgMode::exact;
    Rational average{0};         // exact modes only
    double average_value = 0.0;  // every mode
    double std_error = 0.0;      // monte-carlo only
    long long samples = 0;       // vectors enumerated or drawn
    uint64_t seed = 0;
};

// E_d(R_d) under uniform demands.  Exact modes are closed under the stated
// budget; exceeding it throws with a pointer at monte-carlo.
RateReport average_rate(Scheme scheme, const SystemParams& params, const AvgOptions& opts);

}  // namespace scc
