#include "bei/cas_export.hpp"
#include "bei/errors.hpp"
#include "bei/fixtures.hpp"
#include "bei/io.hpp"
#include "support/catalog.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace bei;

namespace {

std::size_t count_lines_starting_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line);) {
        count += line.rfind(prefix, 0) == 0 ? 1 : 0;
    }
    return count;
}

std::string line_starting_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(prefix, 0) == 0) {
            return line;
        }
    }
    return {};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("edge list parsing") {
    CHECK(parse_graph("4\n1 2\n1 3\n1 4\n", GraphFormat::EdgeList) == fixtures::claw());
    CHECK(parse_graph("# comment\n\n4  # count\n1 2\n  1\t3 \n1 4 # spoke\n",
                      GraphFormat::EdgeList) == fixtures::claw());
    CHECK(parse_graph("0\n", GraphFormat::EdgeList) == empty_graph(0));
}

TEST_CASE("edge list errors carry line numbers") {
    auto message = [](std::string_view text) {
        try {
            parse_graph(text, GraphFormat::EdgeList);
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1 x\n", GraphFormat::EdgeList), ParseError);
    CHECK(message("3\n1 2\n1 2 3\n").find("line 3") != std::string::npos);
    CHECK_THROWS_AS(parse_graph("3\n1 4\n", GraphFormat::EdgeList), ValidationError);
    CHECK(message("3\n1 2\n2 2\n").find("line 3") != std::string::npos);
    CHECK_THROWS_AS(parse_graph("3\n2 2\n", GraphFormat::EdgeList), ValidationError);
    CHECK_THROWS_AS(parse_graph("3 4\n", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("structured parsing") {
    auto g = parse_graph(
        R"({"n":7, "edges":[[1,2],[2,3],[2,5],[3,4],[4,5],[3,6],[5,6],[6,7]]})",
        GraphFormat::Structured);
    CHECK(g == fixtures::dev2());

    std::istringstream named(R"({"n": 2, "edges": [[1, 2]], "name": "edge"})");
    auto doc = parse_graph_document(named, GraphFormat::Structured);
    CHECK(doc.name == "edge");

    CHECK_THROWS_AS(parse_graph("{\"n\": 3", GraphFormat::Structured), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})", GraphFormat::Structured), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 3, "edges": [[1]]})", GraphFormat::Structured),
                    ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 3, "edges": [[1, 5]]})", GraphFormat::Structured),
                    ValidationError);
}

TEST_CASE("property: graphs survive a write/parse round trip in both formats") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testing::random_connected_graph(1 + trial % 12, 0.3, rng);
        for (auto format : {GraphFormat::EdgeList, GraphFormat::Structured}) {
            CHECK(parse_graph(write_graph(g, format, "g"), format) == g);
        }
    }
}

TEST_CASE("property: report documents round-trip through JSON") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testing::random_connected_graph(2 + trial % 8, 0.25, rng);
        auto d = minimal_primes(g);
        auto report = make_report(d, classify(g, d), trial % 2 ? std::optional<std::string>("x")
                                                                : std::nullopt);
        auto text = dump(to_json(report));
        CHECK(report_from_json(nlohmann::json::parse(text)) == report);
        CHECK(dump(to_json(report_from_json(nlohmann::json::parse(text)))) == text);
    }
}

TEST_CASE("report content for the claw") {
    auto g = fixtures::claw();
    auto d = minimal_primes(g);
    auto report = make_report(d, classify(g, d));
    CHECK(report.cut_sets == std::vector<std::vector<int>>{{}, {1}});
    REQUIRE(report.components.size() == 2);
    CHECK(report.components[0].height == 3);
    CHECK(report.components[1].height == 2);
    CHECK(report.cm_verdict == "no");
    auto j = classification_json(report);
    CHECK(j["deviation"] == 1);
    CHECK(j["family"].is_null());
    CHECK_FALSE(j.contains("cut_sets"));
}

TEST_CASE("CAS export structure") {
    for (auto dialect : {CasDialect::Macaulay2, CasDialect::CoCoA5}) {
        const std::string assign = dialect == CasDialect::Macaulay2 ? " = " : " := ";
        for (const auto& g : {fixtures::claw(), fixtures::dev2(), fixtures::dev2bis(),
                              path_graph(2), build_g4(3, 4)}) {
            auto d = minimal_primes(g);
            auto script = export_cas_script(g, d, {dialect, 0});
            CHECK(script == export_cas_script(g, d, {dialect, 0}));
            auto j_line = line_starting_with(script, "J" + assign);
            CHECK(count_of(j_line, " - ") == g.size());
            CHECK(count_lines_starting_with(script, "P") == d.components.size());
            CHECK(script.find("depth") != std::string::npos);
            CHECK(script.find("dim") != std::string::npos);
            CHECK(script.find("QQ") != std::string::npos);
        }
    }

    auto claw = fixtures::claw();
    auto m2 = export_cas_script(claw, minimal_primes(claw), {CasDialect::Macaulay2, 0});
    CHECK(m2.find("J = ideal(x_1*y_2 - x_2*y_1, x_1*y_3 - x_3*y_1, x_1*y_4 - x_4*y_1);") !=
          std::string::npos);
    CHECK(m2.find("P1 = ideal(x_1, y_1);") != std::string::npos);
    CHECK(m2.find("Q = intersect{P0, P1};") != std::string::npos);

    auto k2 = path_graph(2);
    auto cocoa = export_cas_script(k2, minimal_primes(k2), {CasDialect::CoCoA5, 101});
    CHECK(cocoa.find("Use S ::= ZZ/(101)[x[1..2], y[1..2]];") != std::string::npos);
    CHECK(cocoa.find("J := ideal(x[1]*y[2] - x[2]*y[1]);") != std::string::npos);
    CHECK(cocoa.find("P0 := ideal(x[1]*y[2] - x[2]*y[1]);") != std::string::npos);

    auto empty = empty_graph(2);
    auto zero_ideal = export_cas_script(empty, minimal_primes(empty), {CasDialect::Macaulay2, 0});
    CHECK(zero_ideal.find("J = ideal(0_S);") != std::string::npos);
}
