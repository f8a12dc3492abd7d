#include "bei/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace bei;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = cli_main(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kClaw = "4\n1 2\n1 3\n1 4\n";

} // namespace

TEST_CASE("decompose reports cut sets and heights") {
    auto r = run({"decompose", "-"}, kClaw);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cut_sets"] == nlohmann::json::parse("[[],[1]]"));
    CHECK(j["components"][0]["height"] == 3);
    CHECK(j["components"][1]["height"] == 2);
    CHECK(j["cohen_macaulay"]["verdict"] == "no");
}

TEST_CASE("fixtures pipe into decompose and classify") {
    auto bis = run({"fixtures", "dev2bis"});
    REQUIRE(bis.code == 0);
    auto j = nlohmann::json::parse(run({"decompose", "-"}, bis.out).out);
    CHECK(j["cut_sets"].size() == 18);
    CHECK(j["krull_dimension"] == 10);

    auto tri = run({"fixtures", "g3", "1", "1", "1"});
    auto c = nlohmann::json::parse(run({"classify"}, tri.out).out);
    CHECK(c["family"]["name"] == "G3");
    CHECK(c["family"]["params"] == nlohmann::json::parse("[1,1,1]"));
    CHECK(c["cohen_macaulay"]["verdict"] == "yes");
    CHECK_FALSE(c.contains("cut_sets"));

    auto structured = run({"fixtures", "g4", "3", "3", "--format", "structured"});
    auto g4 = nlohmann::json::parse(
        run({"classify", "--format", "structured"}, structured.out).out);
    CHECK(g4["family"]["name"] == "G4");
}

TEST_CASE("unmixed exit codes") {
    CHECK(run({"unmixed"}, kClaw).code == kExitPropertyFalse);
    auto g4 = run({"fixtures", "g4", "3", "3"}).out;
    auto r = run({"unmixed"}, g4);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "unmixed\n");
}

TEST_CASE("export dialects") {
    auto m2 = run({"export", "--dialect", "macaulay2"}, kClaw);
    CHECK(m2.code == 0);
    CHECK(m2.out.find("intersect{P0, P1}") != std::string::npos);
    auto cocoa = run({"export", "--dialect", "cocoa5"}, kClaw);
    CHECK(cocoa.out.find("IntersectList([P0, P1])") != std::string::npos);
    CHECK(run({"export", "--dialect", "maple"}, kClaw).code == kExitUsage);
    auto mod = run({"export", "--dialect", "macaulay2", "--characteristic", "32003"}, kClaw);
    CHECK(mod.code == 0);
    CHECK(mod.out.find("S = ZZ/32003[x_1..x_4, y_1..y_4];") != std::string::npos);
    CHECK(run({"export", "--characteristic", "12"}, kClaw).code == kExitUsage);
}

TEST_CASE("oracle-check") {
    auto r = run({"oracle-check"}, run({"fixtures", "dev2"}).out);
    CHECK(r.code == 0);
    CHECK(r.out == "ok: 6 cut sets agree\n");
}

TEST_CASE("error exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"decompose"}, "3\n1 1\n").code == kExitUsage);
    CHECK(run({"decompose"}, "three\n").code == kExitUsage);
    CHECK(run({"fixtures", "g3", "1"}).code == kExitUsage);
    CHECK(run({"decompose", "--input", "/nonexistent/graph.txt"}).code == kExitUsage);

    std::string path = "12\n";
    for (int v = 1; v < 12; ++v) {
        path += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
    }
    auto capped = run({"decompose", "--max-enum", "9"}, path);
    CHECK(capped.code == kExitCapacity);
    CHECK(capped.err.find("capacity") != std::string::npos);
    CHECK(run({"decompose", "--max-enum", "10"}, path).code == 0);
    CHECK(run({"decompose"}, path).code == 0);
}

TEST_CASE("output is independent of the worker count") {
    auto g = run({"fixtures", "dev2bis"}).out;
    auto one = run({"decompose", "--jobs", "1"}, g).out;
    CHECK(run({"decompose", "--jobs", "2"}, g).out == one);
    CHECK(run({"decompose", "--jobs", "8"}, g).out == one);
}

TEST_CASE("the installed executable speaks the same protocol") {
    std::string cmd = std::string(BEI_EXECUTABLE) + " fixtures claw | " + BEI_EXECUTABLE +
                      " unmixed - > /dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == kExitPropertyFalse);
}
