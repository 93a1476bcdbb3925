#include "sbc/cli.hpp"

#include <doctest.h>
#include <fstream>
#include <sstream>

namespace {

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream os, es;
    int rc = sbc::cli::run(args, os, es);
    out = os.str();
    return rc;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(SBC_SOURCE_DIR) + "/tests/golden/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("table outputs are byte-stable") {
    for (const char* id : {"5", "25", "125"}) {
        std::string out;
        CHECK(run_cli({"tables", id}, out) == 0);
        CHECK(out == golden(std::string("tables") + id + ".txt"));
        // a second run produces identical bytes
        std::string again;
        run_cli({"tables", id}, again);
        CHECK(again == out);
    }
}

TEST_CASE("calculator commands") {
    std::string out;
    CHECK(run_cli({"lr", "--lambda", "[6,2]", "--mu", "[3,1]", "--nu", "[3,1]"}, out) == 0);
    CHECK(out == "1\n");
    CHECK(run_cli({"lr", "--lambda", "[6,2]", "--mu", "[3,1]", "--nu", "[3,1]", "--json"}, out) == 0);
    CHECK(out == "{\"coefficient\":1}\n");
    CHECK(run_cli({"lr", "--lambda", "[4,2]", "--factors", "[2,1];[2,1]"}, out) == 0);
    CHECK(out == "1\n");
    CHECK(run_cli({"star", "--a", "B(4,3)", "--b", "B(4,3)"}, out) == 0);
    CHECK(out == "B(8,6)\n");
    CHECK(run_cli({"star", "--a", "B(4,3)", "--b", "B(4,3)", "--json"}, out) == 0);
    CHECK(out == "{\"kind\":\"box\",\"n\":8,\"t\":6}\n");
    CHECK(run_cli({"mixed", "-q", "2", "--set", "B(4,3)"}, out) == 0);
    CHECK(out.find("[5,3]") != std::string::npos);
    CHECK(out.find("[6,2]") == std::string::npos);
}

TEST_CASE("omega commands") {
    std::string out;
    CHECK(run_cli({"omega", "member", "--theta", "X(1;1;0)", "--lambda", "[98,27]"}, out) == 0);
    CHECK(out == "Out\n");
    CHECK(run_cli({"omega", "member", "--theta", "X(1;1;0)", "--lambda", "[98,20,7]"}, out) == 0);
    CHECK(out == "Unknown\n");
    CHECK(run_cli({"omega", "describe", "--theta", "X(1;0)"}, out) == 0);
    CHECK(out.find("oB(25,20)") != std::string::npos);
    CHECK(run_cli({"omega", "describe", "--theta", "X(1;0)", "-n", "25"}, out) == 0);
    CHECK(run_cli({"omega", "gap", "--theta", "X(1;1;1)"}, out) == 0);
    CHECK(out == "M - m = 5 = gamma1 (5) + c (0)\n");
    CHECK(run_cli({"omega", "lower", "-n", "30"}, out) == 0);
    CHECK(out == "B(30,18)\n");
}

TEST_CASE("verification command") {
    std::string out;
    CHECK(run_cli({"verify", "-n", "5"}, out) == 0);
    CHECK(out.find("all checks passed") != std::string::npos);
    CHECK(run_cli({"verify", "-n", "5", "--json"}, out) == 0);
    CHECK(out.find("\"ok\": true") != std::string::npos);
    CHECK(run_cli({"verify", "-n", "25", "--theta", "X(0;1)"}, out) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    std::string out;
    CHECK(run_cli({"nonsense"}, out) == 2);
    CHECK(run_cli({"lr", "--lambda", "[6,2]"}, out) == 2);                      // missing factors
    CHECK(run_cli({"lr", "--lambda", "oops", "--mu", "[1]", "--nu", "[1]"}, out) == 2);
    CHECK(run_cli({"omega", "describe", "--theta", "X(1;0)", "-n", "26"}, out) == 2);
    CHECK(run_cli({"verify", "-n", "7"}, out) == 2);
    CHECK(run_cli({}, out) == 2);
}
