#pragma once

// Label rendering and report serialization.  Two label styles: the full
// form "S_1^{2,3}" used in machine-readable reports, and the compact form
// "S_1^23" matching the worked-example notation (applicable only while all
// user indices fit in one digit, otherwise the full form is emitted).

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "scc/delivery.hpp"
#include "scc/leakage.hpp"
#include "scc/rates.hpp"

namespace scc {

using json = nlohmann::ordered_json;

std::string share_label(const ShareLabel& label, const SystemParams& params);
std::string key_label(const UserSubset& subset);

std::string share_label_compact(const ShareLabel& label, const SystemParams& params);
std::string subset_compact(const UserSubset& subset);

std::string payload_hex(std::span<const Gf> payload);

json to_json(const Transmission& tx, const SystemParams& params);
json to_json(const TransmissionSet& tx, const SystemParams& params);
json to_json(const LeakReport& report, const SystemParams& params);
json to_json(const RateReport& report);

// scheme,N,K,t,M,R_avg,mode,samples,seed
std::string csv_header();
std::string csv_row(const RateReport& report);

}  // namespace scc
