#include "scc/serialize.hpp"

#include <cstdio>

namespace scc {

namespace {

std::string set_body(const UserSubset& subset) {
    std::string out;
    for (int u : subset.members()) {
        if (!out.empty()) out += ",";
        out += std::to_string(u);
    }
    return out;
}

UserSubset holders_of(const ShareLabel& label, const SystemParams& params) {
    return colex_subset(label.holders_rank, params.replication);
}

// %.12g keeps rationals like 4/3 distinguishable while printing exact
// values (integers, halves) without trailing noise.
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string share_label(const ShareLabel& label, const SystemParams& params) {
    return "S_" + std::to_string(label.file) + "^{" + set_body(holders_of(label, params)) + "}";
}

std::string key_label(const UserSubset& subset) {
    return "T_{" + set_body(subset) + "}";
}

std::string subset_compact(const UserSubset& subset) {
    if (subset.members().back() > 9) return "{" + set_body(subset) + "}";
    std::string out;
    for (int u : subset.members()) out += std::to_string(u);
    return out;
}

std::string share_label_compact(const ShareLabel& label, const SystemParams& params) {
    const UserSubset holders = holders_of(label, params);
    if (holders.members().back() > 9) return share_label(label, params);
    return "S_" + std::to_string(label.file) + "^" + subset_compact(holders);
}

std::string payload_hex(std::span<const Gf> payload) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(payload.size() * 2);
    for (Gf g : payload) {
        out += digits[g.byte() >> 4];
        out += digits[g.byte() & 0xF];
    }
    return out;
}

json to_json(const Transmission& tx, const SystemParams& params) {
    json j;
    j["subset"] = to_set_string(tx.subset);
    j["keyed"] = tx.keyed;
    j["payload_hex"] = payload_hex(tx.payload);
    auto& labels = j["summand_labels"] = json::array();
    if (tx.keyed) labels.push_back(key_label(tx.subset));
    for (const ShareLabel& s : tx.summands) labels.push_back(share_label(s, params));
    return j;
}

json to_json(const TransmissionSet& tx, const SystemParams& params) {
    json j;
    j["scheme"] = scheme_name(tx.scheme);
    j["demands"] = tx.d;
    j["transmissions"] = json::array();
    for (const Transmission& t : tx.txs) j["transmissions"].push_back(to_json(t, params));
    auto& saved = j["saved"] = json::array();
    for (int rank : tx.saved_ranks) {
        saved.push_back(to_set_string(colex_subset(rank, params.replication + 1)));
    }
    j["keyed_count"] = tx.keyed_count();
    j["keyless_count"] = tx.keyless_count();
    return j;
}

json to_json(const LeakReport& report, const SystemParams& params) {
    json j;
    j["user"] = report.user;
    j["secure"] = report.secure;
    auto& leaked = j["leaked_shares"] = json::array();
    for (const ShareLabel& s : report.leaked) leaked.push_back(share_label(s, params));
    auto& partial = j["partial_shares"] = json::array();
    for (const ShareLabel& s : report.partial) partial.push_back(share_label(s, params));
    j["mi_rank_gap"] = report.mi_gap;
    j["predicted_count"] = report.predicted;
    return j;
}

json to_json(const RateReport& report) {
    json j;
    j["scheme"] = scheme_name(report.scheme);
    j["files"] = report.files;
    j["users"] = report.users;
    j["replication"] = report.replication;
    j["memory"] = report.memory.str();
    j["mode"] = avg_mode_name(report.mode);
    if (report.mode != AvgMode::monte_carlo) j["average_exact"] = report.average.str();
    j["average"] = report.average_value;
    if (report.mode == AvgMode::monte_carlo) j["std_error"] = report.std_error;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    return j;
}

std::string csv_header() { return "scheme,N,K,t,M,R_avg,mode,samples,seed"; }

std::string csv_row(const RateReport& report) {
    std::string out;
    out += scheme_name(report.scheme);
    out += "," + std::to_string(report.files);
    out += "," + std::to_string(report.users);
    out += "," + std::to_string(report.replication);
    out += "," + report.memory.str();
    out += "," + fmt_double(report.average_value);
    out += "," + std::string(avg_mode_name(report.mode));
    out += "," + std::to_string(report.samples);
    out += "," + std::to_string(report.seed);
    return out;
}

}  // namespace scc
