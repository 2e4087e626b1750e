#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scc/rates.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "scc_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_config(const std::string& name, const json& config) {
    const fs::path path = work_dir() / name;
    std::ofstream out(path);
    out << config.dump(2) << "\n";
    return path;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    const fs::path out_path = work_dir() / "last_output.txt";
    const std::string cmd =
        std::string(SCC_CLI_PATH) + " " + args + " > '" + out_path.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

}  // namespace

TEST_CASE("verify passes on the common scheme and reports the sweep size") {
    const fs::path cfg = write_config("verify_common.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"schemes", {"common"}},
                                       {"sweep", "exhaustive"}});
    const CliResult res = run_cli("verify --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 0);
    const json report = json::parse(res.output);
    CHECK(report["ok"] == true);
    CHECK(report["vectors_checked"] == 256);
    CHECK(report["failures"].empty());
}

TEST_CASE("verify fails on the keyless scheme and lists the leak instances") {
    const fs::path cfg = write_config("verify_keyless.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"schemes", {"keyless"}},
                                       {"sweep", "exhaustive"}});
    const CliResult res = run_cli("verify --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 1);
    const json report = json::parse(res.output);
    CHECK(report["ok"] == false);
    bool found = false;
    for (const json& f : report["failures"]) {
        if (f["kind"] == "leak" && f["demands"] == json::array({1, 1, 1, 2})) found = true;
    }
    CHECK(found);
}

TEST_CASE("invalid configs exit 2") {
    const fs::path bad = write_config(
        "bad_replication.json",
        {{"files", 4}, {"users", 4}, {"replication", 3}, {"schemes", {"common"}}});
    CHECK(run_cli("verify --config '" + bad.string() + "'").exit_code == 2);

    const fs::path missing_field =
        write_config("missing_field.json", {{"files", 4}, {"users", 4}});
    CHECK(run_cli("verify --config '" + missing_field.string() + "'").exit_code == 2);

    const fs::path not_json = work_dir() / "not_json.json";
    std::ofstream(not_json) << "{ nope";
    CHECK(run_cli("verify --config '" + not_json.string() + "'").exit_code == 2);

    CHECK(run_cli("verify --config /no/such/file.json").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("trace reproduces the worked example lines") {
    const fs::path cfg = write_config("trace_ex1.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"scheme", "keyless"},
                                       {"demands", {1, 1, 2, 2}}});
    const CliResult res = run_cli("trace --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 0);
    for (const char* line : {"Y_123 = S_1^23 + S_1^13 + S_2^12",
                             "Y_124 = S_1^24 + S_1^14 + S_2^12",
                             "Y_134 = S_1^34 + S_2^14 + S_2^13",
                             "Y_234 = S_1^34 + S_2^24 + S_2^23",
                             "leaders: {1,3}"}) {
        CHECK(res.output.find(line) != std::string::npos);
    }
    for (int k = 1; k <= 4; ++k) {
        CHECK(res.output.find("user " + std::to_string(k) + ": decode ok, secure") !=
              std::string::npos);
    }
}

TEST_CASE("trace names the leaked shares of the odd-demand instance") {
    const fs::path cfg = write_config("trace_leak.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"scheme", "keyless"},
                                       {"demands", {1, 1, 1, 2}}});
    const CliResult res = run_cli("trace --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("user 1: decode ok, insecure, leaked: S_2^23") != std::string::npos);
    CHECK(res.output.find("user 2: decode ok, insecure, leaked: S_2^13") != std::string::npos);
    CHECK(res.output.find("user 3: decode ok, insecure, leaked: S_2^12") != std::string::npos);
    CHECK(res.output.find("user 4: decode ok, secure") != std::string::npos);
}

TEST_CASE("trace prints the ten-user header counts") {
    const fs::path cfg = write_config("trace_ex2.json",
                                      {{"files", 10},
                                       {"users", 10},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"scheme", "common"},
                                       {"demands", {1, 1, 1, 1, 1, 2, 2, 2, 2, 3}}});
    const CliResult res = run_cli("trace --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("transmissions: 115 = 86 keyed + 29 keyless, 5 saved of 120 slots") !=
          std::string::npos);
}

TEST_CASE("rates emits the documented csv and matches the closed form") {
    const fs::path cfg = write_config(
        "rates_grid.json",
        {{"seed", 5},
         {"mode", "exact"},
         {"schemes", {"keys", "common"}},
         {"points",
          {{{"files", 4}, {"users", 4}, {"replication", 1}},
           {{"files", 4}, {"users", 4}, {"replication", 2}},
           {{"files", 5}, {"users", 5}, {"replication", 2}}}}});
    const CliResult res = run_cli("rates --config '" + cfg.string() + "'");
    CHECK(res.exit_code == 0);

    std::stringstream lines(res.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "scheme,N,K,t,M,R_avg,mode,samples,seed");

    int rows = 0;
    double keys_value = -1, common_value = -1;
    for (std::string line; std::getline(lines, line);) {
        if (line.empty()) continue;
        ++rows;
        std::stringstream cells(line);
        std::string scheme, n, k, t, m, avg;
        std::getline(cells, scheme, ',');
        std::getline(cells, n, ',');
        std::getline(cells, k, ',');
        std::getline(cells, t, ',');
        std::getline(cells, m, ',');
        std::getline(cells, avg, ',');
        if (n == "4" && t == "2") {
            if (scheme == "keys") keys_value = std::stod(avg);
            if (scheme == "common") common_value = std::stod(avg);
        }
    }
    CHECK(rows == 6);
    CHECK(keys_value ==
          doctest::Approx(scc::rate_keys_closed_form(4, 4, 2).to_double()).epsilon(1e-9));
    CHECK(common_value <= keys_value);
}

TEST_CASE("rates handles a fixed demand vector") {
    const fs::path cfg = write_config("rates_fixed.json",
                                      {{"files", 10},
                                       {"users", 10},
                                       {"replication", 2},
                                       {"schemes", {"keys", "common"}},
                                       {"demands", {1, 1, 1, 1, 1, 2, 2, 2, 2, 3}}});
    const CliResult res = run_cli("rates --config '" + cfg.string() + "' --format json");
    CHECK(res.exit_code == 0);
    const json report = json::parse(res.output);
    REQUIRE(report["rows"].size() == 2);
    CHECK(report["rows"][0]["scheme"] == "keys");
    CHECK(report["rows"][0]["average_exact"] == "10/3");  // 120/36
    CHECK(report["rows"][1]["scheme"] == "common");
    CHECK(report["rows"][1]["average_exact"] == "115/36");
    CHECK(report["rows"][1]["mode"] == "fixed");
}

TEST_CASE("identical invocations produce identical bytes") {
    const fs::path cfg = write_config("repeat.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 77},
                                       {"mode", "monte-carlo"},
                                       {"samples", 500},
                                       {"schemes", {"common"}}});
    const CliResult a = run_cli("rates --config '" + cfg.string() + "'");
    const CliResult b = run_cli("rates --config '" + cfg.string() + "'");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("seed override changes the reported seed") {
    const fs::path cfg = write_config("seed_override.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 1},
                                       {"schemes", {"common"}},
                                       {"sweep", "sampled"},
                                       {"samples", 5}});
    const CliResult res = run_cli("verify --config '" + cfg.string() + "' --seed 42");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.output)["seed"] == 42);
}

TEST_CASE("--out writes the report to a file") {
    const fs::path cfg = write_config("out_file.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"schemes", {"keys"}},
                                       {"demands", {1, 2, 3, 4}}});
    const fs::path out = work_dir() / "rates_out.csv";
    fs::remove(out);
    const CliResult res = run_cli("rates --config '" + cfg.string() + "' --out '" +
                                  out.string() + "'");
    CHECK(res.exit_code == 0);
    REQUIRE(fs::exists(out));
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "scheme,N,K,t,M,R_avg,mode,samples,seed");
}

TEST_CASE("parallel verify matches single-threaded results") {
    const fs::path cfg = write_config("jobs.json",
                                      {{"files", 4},
                                       {"users", 4},
                                       {"replication", 2},
                                       {"seed", 3},
                                       {"schemes", {"keyless"}},
                                       {"sweep", "exhaustive"}});
    const CliResult one = run_cli("verify --config '" + cfg.string() + "' --jobs 1");
    const CliResult two = run_cli("verify --config '" + cfg.string() + "' --jobs 2");
    CHECK(one.exit_code == 1);
    CHECK(two.exit_code == 1);
    CHECK(one.output == two.output);
}
