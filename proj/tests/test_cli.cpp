#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "doctest.h"

// Drives the installed binary end to end: report content, exit codes, and
// thread-count independence of the emitted bytes.

namespace {

using nlohmann::json;

int run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + SUMCLIQUE_CLI_PATH + "\" " + args;
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

json load_report(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("census report carries the table and the resolved config") {
    REQUIRE(run_cli("census --group zN --size 16 --k 4 --out cli_census.json") == 0);
    json doc = load_report("cli_census.json");
    CHECK(doc["config"]["command"] == "census");
    CHECK(doc["config"]["group"]["kind"] == "cyclic");
    CHECK(doc["config"]["group"]["order"] == 16);
    CHECK(doc["config"]["master_seed"] == 0);
    CHECK(doc["report"]["total"] == "1820");
    std::uint64_t row_sum = 0;
    for (const auto& [m, count] : doc["report"]["counts"].items())
        row_sum += std::stoull(count.get<std::string>());
    CHECK(row_sum == 1820);
    CHECK(doc.contains("timings_ms"));
    std::remove("cli_census.json");
}

TEST_CASE("census csv output starts with a config comment and the header") {
    REQUIRE(run_cli("census --group zN --size 8 --k 3 --format csv --out cli_census.csv") == 0);
    std::string text = slurp("cli_census.csv");
    CHECK(text.rfind("# {", 0) == 0);
    CHECK(text.find("m,count\n") != std::string::npos);
    std::remove("cli_census.csv");
}

TEST_CASE("expectation report is exact") {
    REQUIRE(run_cli("expect --group zN --size 5 --k 2 --out cli_expect.json") == 0);
    json doc = load_report("cli_expect.json");
    CHECK(doc["report"]["expectation"]["num"] == "5");
    CHECK(doc["report"]["expectation"]["den"] == "1");
    CHECK(doc["report"]["markov_bound"]["num"] == "1");
    std::remove("cli_expect.json");
}

TEST_CASE("clique number of the order-5 quadratic-residue graph is 2") {
    {
        std::ofstream f("cli_paley5.txt");
        f << "# residues mod 5\n1\n4\n";
    }
    REQUIRE(run_cli("clique --group zN --size 5 --set-file cli_paley5.txt --out cli_clique.json") ==
            0);
    json doc = load_report("cli_clique.json");
    CHECK(doc["report"]["omega"] == 2);
    CHECK(doc["report"]["exact"] == true);
    CHECK(doc["report"]["witness"].size() == 2);

    REQUIRE(run_cli("clique --group zN --size 5 --paley --out cli_clique2.json") == 0);
    json doc2 = load_report("cli_clique2.json");
    CHECK(doc2["report"]["omega"] == 2);
    std::remove("cli_paley5.txt");
    std::remove("cli_clique.json");
    std::remove("cli_clique2.json");
}

TEST_CASE("failed preconditions exit with code 2") {
    CHECK(run_cli("clique --group zN --size 6 --paley 2>/dev/null") == 2);
    CHECK(run_cli("census --group zN --size 16 2>/dev/null") == 2);       // missing --k
    CHECK(run_cli("census --bogus-flag 2>/dev/null") == 2);               // unknown flag
    CHECK(run_cli("clique --group zN --size 8 2>/dev/null") == 2);        // no set source
    CHECK(run_cli("clique --group zN --size 8 --set 1,2 --format csv 2>/dev/null") == 2);
}

TEST_CASE("node-budget exhaustion exits with code 3 and an inexact report") {
    REQUIRE(run_cli("clique --group zN --size 251 --paley --budget-nodes 10 "
                    "--out cli_budget.json 2>/dev/null") == 3);
    json doc = load_report("cli_budget.json");
    CHECK(doc["report"]["exact"] == false);
    CHECK(doc["report"]["nodes"].get<std::uint64_t>() >= 10);
    std::remove("cli_budget.json");
}

TEST_CASE("simulate reports are byte-identical across worker counts") {
    REQUIRE(run_cli("--help >/dev/null") == 0);
    std::string args = "simulate --group zN --size 32 --trials 5 --seed 9 --out cli_sim.json";
    REQUIRE(std::system(("SUMCLIQUE_THREADS=1 \"" SUMCLIQUE_CLI_PATH "\" " + args).c_str()) == 0);
    json a = load_report("cli_sim.json");
    REQUIRE(std::system(("SUMCLIQUE_THREADS=3 \"" SUMCLIQUE_CLI_PATH "\" " + args).c_str()) == 0);
    json b = load_report("cli_sim.json");
    a.erase("timings_ms");
    b.erase("timings_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a["report"]["per_trial"].size() == 5);
    std::remove("cli_sim.json");
}

TEST_CASE("freiman subcommand classifies progressions as isomorphic") {
    REQUIRE(run_cli("freiman --set 0,1,2 --other 5,9,13 --out cli_iso.json") == 0);
    json doc = load_report("cli_iso.json");
    CHECK(doc["report"]["verdict"] == "yes");
    CHECK(doc["report"]["witness"].size() == 3);

    REQUIRE(run_cli("freiman --set 0,1,2,3 --out cli_struct.json") == 0);
    json structure = load_report("cli_struct.json");
    CHECK(structure["report"]["dimension"] == 1);
    CHECK(structure["report"]["inequality"]["holds"] == true);
    std::remove("cli_iso.json");
    std::remove("cli_struct.json");
}

TEST_CASE("bounds subcommand emits the tail certificate") {
    REQUIRE(run_cli("bounds --group zN --size 1048576 --tail --out cli_tail.json") == 0);
    json doc = load_report("cli_tail.json");
    CHECK(doc["report"]["tail"]["passes"] == true);
    CHECK(doc["report"]["tail"]["k_used"] == 400);
    std::remove("cli_tail.json");
}

TEST_CASE("rectify subcommand reports a dilation for a short progression") {
    REQUIRE(run_cli("rectify --group zN --size 11 --set 0,5,10 --out cli_rect.json") == 0);
    json doc = load_report("cli_rect.json");
    CHECK(doc["report"]["found"] == true);
    std::remove("cli_rect.json");
}
