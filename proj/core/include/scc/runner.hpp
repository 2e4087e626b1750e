#pragma once

// Experiment runner behind the CLI: JSON config in, reports out.  Config
// problems raise ConfigError; check outcomes are returned, not thrown, so
// the CLI can map them to its exit-code contract.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "scc/serialize.hpp"

namespace scc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOverrides {
    std::optional<uint64_t> seed;
    std::optional<int> jobs;
};

// Decode-correctness and secrecy checks over a demand sweep (exhaustive,
// sampled, or one fixed vector).  ok is false iff any check failed; the
// report lists every failing (scheme, demands, user).
struct VerifyOutcome {
    bool ok = true;
    json report;
};

VerifyOutcome run_verify(const json& config, const RunOverrides& overrides);

// Average (or fixed-demand) rates per scheme per grid point.
struct RatesOutcome {
    std::vector<RateReport> rows;
    json report;

    std::string csv() const;
};

RatesOutcome run_rates(const json& config, const RunOverrides& overrides);

// Human-readable transmission and leak listing for one demand vector.
std::string run_trace(const json& config, const RunOverrides& overrides);

}  // namespace scc
