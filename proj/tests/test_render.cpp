#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include <nlohmann/json.hpp>

#include "cobweb/charpoly.hpp"
#include "cobweb/reference.hpp"
#include "cobweb/render.hpp"
#include "cobweb/verify.hpp"

using namespace cobweb;

TEST_SUITE("render") {

TEST_CASE("parse_format") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("dot") == OutputFormat::dot);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("charpoly json carries exactly n+1 decimal-string coefficients") {
    const SequenceSpec odd = parse_sequence("odd");
    CHECK(render_charpoly_json(2, charpoly_closed(odd, 2)) ==
          R"({"n":2,"coefficients":["10","-3","1"]})");
    // padding: chi of fib has internal zero coefficients that must survive
    const SequenceSpec fib = parse_sequence("fib");
    CHECK(render_charpoly_json(3, charpoly_closed(fib, 3)) ==
          R"({"n":3,"coefficients":["0","0","-1","1"]})");
}

TEST_CASE("whitney renderings") {
    const SequenceSpec spec = parse_sequence("const:3");
    const ClosedFormTables tables = whitney_closed(spec, 2);
    const std::vector<std::uint64_t> second_kind{1, 3, 3};

    CHECK(render_whitney_text(spec.name, second_kind, tables.w_closed) ==
          "seq: const:3\n"
          "  k  W_k  w_k\n"
          "  0    1    1\n"
          "  1    3   -3\n"
          "  2    3    6\n");

    CHECK(render_whitney_csv(second_kind, tables.w_closed) ==
          "k,W_k,w_k\n"
          "0,1,1\n"
          "1,3,-3\n"
          "2,3,6\n");

    const auto doc = nlohmann::json::parse(
        render_whitney_json(spec.name, second_kind, tables.w_closed));
    CHECK(doc["seq"] == "const:3");
    CHECK(doc["n"] == 2);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["k"] == 2);
    CHECK(doc["rows"][2]["W"] == "3");
    CHECK(doc["rows"][2]["w"] == "6");
}

TEST_CASE("verification report text") {
    const std::string text = render_report_text(verify(parse_sequence("odd"), 3));
    CHECK(text == "seq: odd\n"
                  "n: 3\n"
                  "  m  recurrence  bruteforce  agree  closed form\n"
                  "  0  ok          ok          yes    1\n"
                  "  1  ok          ok          yes    t - 3\n"
                  "  2  ok          ok          yes    t^2 - 3t + 10\n"
                  "  3  ok          ok          yes    t^3 - 3t^2 + 10t - 56\n"
                  "tables: ok\n"
                  "status: pass\n");
}

TEST_CASE("verification report json schema") {
    const auto doc = nlohmann::json::parse(render_report_json(verify(parse_sequence("odd"), 3)));
    CHECK(doc["spec_name"] == "odd");
    CHECK(doc["n"] == 3);
    CHECK(doc["status"] == "pass");
    REQUIRE(doc["per_n"].size() == 4);
    const auto& last = doc["per_n"][3];
    CHECK(last["n"] == 3);
    const std::vector<std::string> expected{"-56", "10", "-3", "1"};
    CHECK(last["closed"].get<std::vector<std::string>>() == expected);
    CHECK(last["recurrence"].get<std::vector<std::string>>() == expected);
    CHECK(last["bruteforce"].get<std::vector<std::string>>() == expected);
    CHECK(last["agree"] == true);
}

TEST_CASE("skipped brute legs serialize as the string 'skipped'") {
    const auto doc =
        nlohmann::json::parse(render_report_json(verify(parse_sequence("fib"), 8, {50})));
    CHECK(doc["per_n"][8]["bruteforce"] == "skipped");
    CHECK(doc["per_n"][0]["bruteforce"].is_array());
    CHECK(doc["status"] == "pass");

    const std::string text = render_report_text(verify(parse_sequence("fib"), 8, {50}));
    CHECK(text.find("skipped") != std::string::npos);
    CHECK(text.find("tables: skipped") != std::string::npos);
}

TEST_CASE("a failing report renders as fail") {
    VerificationReport report = verify(parse_sequence("nat"), 2);
    report.pass = false;
    CHECK(render_report_text(report).find("status: fail") != std::string::npos);
    const auto doc = nlohmann::json::parse(render_report_json(report));
    CHECK(doc["status"] == "fail");
}

TEST_CASE("json coefficients round-trip to the text rendering") {
    const SequenceSpec odd = parse_sequence("odd");
    const IntPolynomial chi = charpoly_closed(odd, 5);
    const auto doc = nlohmann::json::parse(render_charpoly_json(5, chi));
    std::vector<mpz_class> ascending;
    for (const auto& entry : doc["coefficients"]) {
        ascending.emplace_back(entry.get<std::string>());
    }
    CHECK(to_string(IntPolynomial(std::move(ascending))) == to_string(chi));
}

TEST_CASE("reference examples: expected outcomes") {
    const ReferenceReport report = run_reference_examples();
    CHECK(report.ok);
    REQUIRE(report.cases.size() == 4);
    CHECK_FALSE(report.cases[0].match);  // stated sequence vs listed values
    CHECK_FALSE(report.cases[0].expect_match);
    CHECK(report.cases[1].match);
    CHECK(report.cases[2].match);
    CHECK(report.cases[3].match);
    CHECK_FALSE(report.discrepancy_note.empty());

    const std::string text = render_reference_report(report);
    CHECK(text.find("mismatch (expected)") != std::string::npos);
    CHECK(text.find("internally inconsistent") != std::string::npos);
    CHECK(text.find("result: ok") != std::string::npos);
}

}  // TEST_SUITE
