// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool: golden files for the exact
// integer outputs, byte-for-byte determinism under a fixed seed, the
// exit-code contract, and light validation against the published schemas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SKLY_CLI_PATH
#error "SKLY_CLI_PATH must be defined"
#endif
#ifndef SKLY_GOLDEN_DIR
#error "SKLY_GOLDEN_DIR must be defined"
#endif
#ifndef SKLY_SCHEMA_DIR
#error "SKLY_SCHEMA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(SKLY_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
    RunResult res = run_cli(args);
    CHECK(res.exit_code == 0);
    CHECK(res.output == slurp(std::string(SKLY_GOLDEN_DIR) + "/" + golden_name));
}

// required-key validation against the published schema file (top level)
void check_schema(const std::string& output, const std::string& schema_file) {
    auto doc = nlohmann::json::parse(output);
    auto schema = nlohmann::json::parse(slurp(std::string(SKLY_SCHEMA_DIR) + "/" + schema_file));
    for (const auto& key : schema["required"]) CHECK(doc.contains(key.get<std::string>()));
    CHECK(doc["schema"] == schema["properties"]["schema"]["const"]);
}

} // namespace

TEST_CASE("golden outputs") {
    check_golden("--json leaves strata -r 2 -k 1", "strata_r2_k1.json");
    check_golden("--json leaves strata -r 1 -k 4", "strata_r1_k4.json");
    check_golden("--json fm solve -r 2 -d 1 -k 1", "fm_solve_211.json");
    check_golden("--json fm cfrac 2 5", "fm_cfrac_2_5.json");
    check_golden("--json fm invariants 1,2 3,2", "fm_invariants.json");
    check_golden("--json leaves product \"p:(1)\" \"p:(1)\" -r 2", "product_pp_r2.json");
    check_golden("--json leaves rank2 -n 2", "rank2_n2.json");
}

TEST_CASE("documented example values") {
    auto strata = nlohmann::json::parse(run_cli("--json leaves strata -r 2 -k 1").output);
    CHECK(strata["count"] == 3);
    auto p4 = nlohmann::json::parse(run_cli("--json leaves strata -r 1 -k 4").output);
    CHECK(p4["count"] == 5);
    auto solve = nlohmann::json::parse(run_cli("--json fm solve -r 2 -d 1 -k 1").output);
    CHECK(solve["word"] == "T(-1);F;T(2);S");
    CHECK(solve["xi"] == nlohmann::json::array({4, 1}));
    CHECK(solve["invariants"]["det"] == 4);
    CHECK(solve["invariants"]["alpha"] == 3);
    auto census = nlohmann::json::parse(run_cli("--json leaves census").output);
    CHECK(census["families"].size() == 4);
    CHECK(census["families"][2]["leaf_dim"] == 0);
    CHECK(census["families"][0]["leaf_dim"] == 2);
    auto dim = nlohmann::json::parse(run_cli("--json leaves dim \"p:(1)+q:(1)\" -r 2 -k 1").output);
    CHECK(dim["leaf_dim"] == 2);
    auto dim4 = nlohmann::json::parse(run_cli("--json leaves dim \"0\" -r 2 -k 1 --line 2").output);
    CHECK(dim4["leaf_dim"] == 0);
    CHECK(dim4["kernel_degree"] == 0);
}

TEST_CASE("json outputs validate against the published schemas") {
    check_schema(run_cli("--json leaves strata -r 2 -k 2").output, "leaf-types.v1.schema.json");
    check_schema(run_cli("--json leaves rank2 -n 1").output, "rank2-classification.v1.schema.json");
    check_schema(run_cli("--json leaves fiber \"p:(2)\" -r 2").output, "torsion-types.v1.schema.json");
    check_schema(run_cli("--json leaves census").output, "census.v1.schema.json");
    check_schema(run_cli("--json leaves dim \"p:(2)\" -r 2 -k 1").output, "leaf-dim.v1.schema.json");
    check_schema(run_cli("--json fm solve -r 3 -d 2 -k 2").output, "fm-solve.v1.schema.json");
    check_schema(run_cli("--json fm invariants 1,2 3,2").output, "fm-invariants.v1.schema.json");
    check_schema(run_cli("--json fm cfrac 3 7").output, "fm-cfrac.v1.schema.json");
    check_schema(run_cli("--json verify jacobi").output, "verify-report.v1.schema.json");
    check_schema(run_cli("--json sklyanin bracket").output, "sklyanin-bracket.v1.schema.json");
    check_schema(run_cli("--json sklyanin det --samples 5").output, "sklyanin-det.v1.schema.json");
    check_schema(run_cli("--json sklyanin jconst").output, "sklyanin-jconst.v1.schema.json");
}

TEST_CASE("byte-for-byte determinism under a fixed seed") {
    const char* cmds[] = {
        "--json --seed 777 verify det-identity --samples 20",
        "--json --seed 777 sklyanin det --samples 10",
        "--json sklyanin jconst",
        "--json leaves census",
        "--json --seed 31415 verify poi3-cross",
        "--json leaves fiber \"p:(2)+q:(1)\" -r 2",
    };
    for (const char* cmd : cmds) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
    // different seeds give different residual draws
    RunResult a = run_cli("--json --seed 1 verify det-identity --samples 20");
    RunResult b = run_cli("--json --seed 2 verify det-identity --samples 20");
    CHECK(a.output != b.output);
}

TEST_CASE("table and json modes carry the same facts") {
    auto json = nlohmann::json::parse(run_cli("--json leaves strata -r 2 -k 2").output);
    RunResult table = run_cli("leaves strata -r 2 -k 2");
    std::size_t lines = 0;
    for (char c : table.output)
        if (c == '\n') ++lines;
    CHECK(lines == json["count"].get<std::size_t>());
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("verify jacobi").exit_code == 0);
    CHECK(run_cli("verify casimir").exit_code == 0);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("leaves strata").exit_code == 2);             // missing required options
    CHECK(run_cli("verify bogus-suite").exit_code == 2);
    CHECK(run_cli("fm cfrac 2 4").exit_code == 2);              // not coprime
    CHECK(run_cli("fm solve -r 4 -d 2 -k 1").exit_code == 2);   // not coprime
    CHECK(run_cli("leaves dim \"p:(3)\" -r 2 -k 1").exit_code == 2); // unrealizable
    CHECK(run_cli("--tau 1.2 leaves census").exit_code == 2);   // Im(tau) <= 0
    CHECK(run_cli("verify det-identity --samples 0").exit_code == 2);
}

TEST_CASE("parse diagnostics name the offending token") {
    RunResult res = run_cli("leaves product \"p:(1)+\" \"p:(1)\" -r 2", true);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("parse error") != std::string::npos);
    CHECK(res.output.find("position") != std::string::npos);

    RunResult res2 = run_cli("leaves product \"p:(x)\" \"p:(1)\" -r 2", true);
    CHECK(res2.exit_code == 2);
    CHECK(res2.output.find("'x'") != std::string::npos);
}

TEST_CASE("config file overrides via SKLY_CONFIG") {
    std::string path = std::string(SKLY_GOLDEN_DIR) + "/../tmp_config.txt";
    {
        std::ofstream out(path);
        out << "# test config\n";
        out << "tau=1.5i\n";
        out << "seed=999\n";
    }
    std::string cmd = "SKLY_CONFIG=" + path + " " + SKLY_CLI_PATH + " --json sklyanin jconst";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    pclose(pipe);
    auto doc = nlohmann::json::parse(output);
    CHECK(doc["tau"][1] == 1.5);
    std::remove(path.c_str());

    // flags still win over the file
    std::string cmd2 = "SKLY_CONFIG=" + path + " " + SKLY_CLI_PATH + " --tau 1.2i --json sklyanin jconst";
    {
        std::ofstream out(path);
        out << "tau=1.5i\n";
    }
    FILE* pipe2 = popen(cmd2.c_str(), "r");
    REQUIRE(pipe2 != nullptr);
    std::string output2;
    while ((n = fread(buf, 1, sizeof buf, pipe2)) > 0) output2.append(buf, n);
    pclose(pipe2);
    auto doc2 = nlohmann::json::parse(output2);
    CHECK(doc2["tau"][1] == 1.2);
    std::remove(path.c_str());

    // unknown keys are a config error (exit 2)
    {
        std::ofstream out(path);
        out << "bogus=1\n";
    }
    std::string cmd3 = "SKLY_CONFIG=" + path + " " + SKLY_CLI_PATH + " sklyanin jconst 2>/dev/null";
    int status = std::system(cmd3.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::remove(path.c_str());
}
