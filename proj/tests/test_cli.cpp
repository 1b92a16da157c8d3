#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fibra/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = fibra::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct EnvGuard {
    explicit EnvGuard(const char* value) { setenv("FIBRA_CELL_BUDGET", value, 1); }
    ~EnvGuard() { unsetenv("FIBRA_CELL_BUDGET"); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("word and array generation") {
    RunResult r = run_cli({"gen1d", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "babbabab\n");
    CHECK(r.err.empty());

    r = run_cli({"gen1d", "3", "--first", "d", "--second", "c"});
    CHECK(r.code == 0);
    CHECK(r.out == "cdc\n");

    r = run_cli({"gen2d", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "dcd\nbab\n");

    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto ms = std::to_string(m);
            auto ns = std::to_string(n);
            std::string recursive = run_cli({"gen2d", ms, ns}).out;
            CHECK(recursive == run_cli({"gen2d", ms, ns, "--method", "morphism"}).out);
            CHECK(recursive == run_cli({"gen2d", ms, ns, "--method", "dfao"}).out);
        }
}

TEST_CASE("index-zero arrays exist only on the concatenation route") {
    CHECK(run_cli({"gen2d", "0", "3"}).out == "bab\n");
    CHECK(run_cli({"gen2d", "0", "3", "--method", "morphism"}).code == 2);
    CHECK(run_cli({"gen2d", "0", "3", "--method", "dfao"}).code == 2);
}

TEST_CASE("automaton queries") {
    RunResult r = run_cli({"dfao", "at", "2", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "c\n");
    r = run_cli({"dfao", "export"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph fib2d_dfao {") != std::string::npos);
}

TEST_CASE("repeated-block counting") {
    RunResult r = run_cli({"tandems", "4", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quartic: closed=1 oracle=1 match=true") != std::string::npos);
    CHECK(r.out.find("Ia: closed=15 oracle=15 match=true") != std::string::npos);

    r = run_cli({"tandems", "2", "5", "--distinct", "--source", "closed"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Ia-distinct: closed=12\n") != std::string::npos);
    CHECK(r.out.find("oracle") == std::string::npos);

    r = run_cli({"tandems", "1", "1"});  // no closed form applies this low
    CHECK(r.code == 0);

    r = run_cli({"tandems", "1", "1", "--type", "quartic"});
    CHECK(r.code == 2);

    r = run_cli({"tandems", "1", "1", "--type", "quartic", "--source", "oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quartic: oracle=0\n") != std::string::npos);
}

TEST_CASE("a closed-vs-oracle mismatch exits with code 1") {
    RunResult r = run_cli({"verify", "--max-m", "4", "--max-n", "4", "--mode", "strict-2d"});
    CHECK(r.code == 1);
    CHECK(r.out.find("match=false") != std::string::npos);

    r = run_cli({"tandems", "4", "4", "--type", "Ia", "--mode", "strict-2d"});
    CHECK(r.code == 1);
    CHECK(r.out.find("Ia: closed=15 oracle=14 match=false") != std::string::npos);
}

TEST_CASE("complexity output, including the exact csv table") {
    RunResult r = run_cli({"complexity", "1d", "6", "--table", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1,2,3,4,5,6,7,8,9,10,11,12,13\n"
          "2,1\n"
          "2,2,1\n"
          "2,3,3,2,1\n"
          "2,3,4,5,4,3,2,1\n"
          "2,3,4,5,6,7,7,6,5,4,3,2,1\n");

    CHECK(run_cli({"complexity", "1d", "5"}).out == "2 3 4 5 4 3 2 1\n");
    CHECK(run_cli({"complexity", "inf", "2", "3"}).out == "12\n");
    CHECK(run_cli({"complexity", "2d", "2", "2"}).out == "4 2\n2 1\n");
    CHECK(run_cli({"complexity", "inf", "2", "2", "--table", "--format", "csv"}).out == "1,2\n4,6\n6,9\n");
}

TEST_CASE("verification sweep") {
    RunResult r = run_cli({"verify", "--max-m", "3", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: checks=") != std::string::npos);
    CHECK(r.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("json envelopes parse, carry the conventions, and round-trip byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen1d", "3", "--format", "json"},
             {"gen2d", "2", "3", "--format", "json"},
             {"tandems", "4", "4", "--format", "json"},
             {"complexity", "1d", "6", "--table", "--format", "json"},
             {"complexity", "2d", "3", "3", "--format", "json"},
             {"complexity", "inf", "2", "3", "--format", "json"},
             {"dfao", "at", "2", "4", "--format", "json"},
             {"dfao", "export", "--format", "json"},
             {"verify", "--max-m", "3", "--max-n", "3", "--format", "json"},
         }) {
        RunResult r = run_cli(args);
        CHECK(r.code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["format"] == "json");
        CHECK(j["metadata"]["tool"] == "fibra");
        CHECK(j["metadata"]["version"] == "0.1.0");
        CHECK(j["metadata"]["index_conventions"]["dfao_coordinates"] == "0-based");
        CHECK(j["metadata"]["index_conventions"]["grid_positions"] == "1-based");
        CHECK(j.contains("payload"));
        CHECK(j["metadata"].contains("parameters"));
        CHECK(j.dump(2) + "\n" == r.out);  // stable bytes: sorted keys, two-space indent
    }

    nlohmann::json j = nlohmann::json::parse(run_cli({"gen1d", "3", "--format", "json"}).out);
    CHECK(j["payload"]["word"] == "bab");
    j = nlohmann::json::parse(run_cli({"dfao", "at", "2", "4", "--format", "json"}).out);
    CHECK(j["payload"]["symbol"] == "c");
    CHECK(j["payload"]["row_digits"] == "010");
    CHECK(j["payload"]["col_digits"] == "101");
    j = nlohmann::json::parse(run_cli({"tandems", "4", "4", "--format", "json"}).out);
    CHECK(j["metadata"]["primitivity_mode"] == "directional");
    CHECK(j["payload"]["all_match"] == true);
    j = nlohmann::json::parse(run_cli({"dfao", "export", "--format", "json"}).out);
    CHECK(j["payload"]["edge_count"] == 9);
    CHECK(j["payload"]["edges"].size() == 9);
}

TEST_CASE("usage and domain failures exit with code 2 and a single error line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"gen1d"},
             {"gen1d", "5", "--format", "yaml"},
             {"gen1d", "5", "--format", "csv"},
             {"gen1d", "5", "--first", "x"},
             {"gen1d", "5", "--first", "ab"},
             {"complexity", "1d", "1"},
             {"complexity", "inf", "2", "3", "--format", "csv"},
             {"gen2d", "-1", "3"},
         }) {
        RunResult r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.substr(0, 7) == "error: ");
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("resource and overflow failures exit with code 3") {
    RunResult r = run_cli({"tandems", "9", "9"});
    CHECK(r.code == 3);
    CHECK(r.err.substr(0, 16) == "error: resource:");

    r = run_cli({"gen1d", "200"});
    CHECK(r.code == 3);
    CHECK(r.err.substr(0, 16) == "error: overflow:");

    {
        EnvGuard guard("100");
        r = run_cli({"gen2d", "8", "8"});
        CHECK(r.code == 3);
        CHECK(r.err.substr(0, 16) == "error: resource:");
        r = run_cli({"gen2d", "2", "3"});  // within the lowered budget
        CHECK(r.code == 0);
    }
    {
        EnvGuard guard("0x10");
        r = run_cli({"gen1d", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.substr(0, 13) == "error: usage:");
    }
}

TEST_CASE("help is ordinary output") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen1d") != std::string::npos);
    CHECK(r.err.empty());

    r = run_cli({"tandems", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--distinct") != std::string::npos);

    r = run_cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.1.0\n");
}

}  // TEST_SUITE
