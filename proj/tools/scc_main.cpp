// scc: workbench for secretive coded caching experiments.
//
//   scc verify --config cfg.json     decode + secrecy checks over a demand sweep
//   scc rates  --config cfg.json     average-rate table (csv or json)
//   scc trace  --config cfg.json     transmission/leak listing for one demand vector
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scc/runner.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::optional<uint64_t> seed;
    std::optional<int> jobs;
};

void attach(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", flags.out_path, "write output here instead of stdout");
    cmd->add_option("--format", flags.format, "rates output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", flags.seed, "override the config seed");
    cmd->add_option("--jobs", flags.jobs, "worker threads for demand sweeps")
        ->check(CLI::PositiveNumber);
}

scc::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw scc::ConfigError("cannot open config file: " + path);
    try {
        return scc::json::parse(in);
    } catch (const std::exception& e) {
        throw scc::ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
}

void emit(const CommonFlags& flags, const std::string& text) {
    if (flags.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(flags.out_path);
    if (!out) throw scc::ConfigError("cannot open output file: " + flags.out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secretive coded caching workbench"};
    app.require_subcommand(1);

    CommonFlags verify_flags, rates_flags, trace_flags;
    CLI::App* verify = app.add_subcommand("verify", "decode and secrecy checks over a sweep");
    CLI::App* rates = app.add_subcommand("rates", "average-rate table");
    CLI::App* trace = app.add_subcommand("trace", "transmission and leak listing");
    attach(verify, verify_flags);
    attach(rates, rates_flags);
    attach(trace, trace_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto cfg = load_config(verify_flags.config_path);
            const auto outcome = scc::run_verify(
                cfg, {verify_flags.seed, verify_flags.jobs});
            emit(verify_flags, outcome.report.dump(2) + "\n");
            return outcome.ok ? 0 : 1;
        }
        if (rates->parsed()) {
            const auto cfg = load_config(rates_flags.config_path);
            const auto outcome = scc::run_rates(cfg, {rates_flags.seed, rates_flags.jobs});
            emit(rates_flags, rates_flags.format == "json" ? outcome.report.dump(2) + "\n"
                                                           : outcome.csv());
            return 0;
        }
        const auto cfg = load_config(trace_flags.config_path);
        emit(trace_flags, scc::run_trace(cfg, {trace_flags.seed, trace_flags.jobs}));
        return 0;
    } catch (const scc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
