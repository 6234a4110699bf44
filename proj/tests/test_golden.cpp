#include <doctest.h>

#include <chrono>

#include "k3fix/golden.hpp"
#include "k3fix/render.hpp"
#include "k3fix/verify.hpp"

using namespace k3fix;

namespace {

nlohmann::json embedded(int table) { return load_json(data_dir() / ("table" + std::to_string(table) + ".json")); }

}  // namespace

TEST_CASE("printed lines") {
    const auto lines = table1_lines(build_table1());
    CHECK(lines.size() == 20);
    CHECK(lines[18].id == "3'");
    CHECK(lines[19].id == "6'");
    CHECK(lines[7].id == "8");
    CHECK(lines[7].trivial_l_minus_1 == 1);
    CHECK_FALSE(lines[7].involution.has_value());
    CHECK(lines[0].involution->l == 0);
    CHECK(table2_lines(build_table2()).size() == 7);
}

TEST_CASE("embedded data round trips") {
    const auto t1 = parse_table1(embedded(1));
    const auto t2 = parse_table2(embedded(2));
    CHECK(parse_table1(table1_json(t1)) == t1);
    CHECK(parse_table2(table2_json(t2)) == t2);
    CHECK_THROWS_AS(parse_table1(embedded(2)), DataError);
    CHECK_THROWS_AS(parse_table2(nlohmann::json::parse(R"({"table":2,"rows":[{"id":"1"}]})")), DataError);
    CHECK_THROWS_AS(load_json(data_dir() / "missing.json"), DataError);
}

TEST_CASE("generated tables match the embedded ones") {
    const auto report = verify_against_embedded();
    CHECK(report.failures() == 0);
    REQUIRE(report.errata() == 1);
    const auto& d = report.diffs.front();
    CHECK(d.table == 1);
    CHECK(d.row == "18");
    CHECK(d.column == "F0/Finf");
    CHECK(d.embedded == "I0,I0");
    CHECK(d.generated == "I0,IV");
    CHECK(report.cells_compared > 250);
}

TEST_CASE("row 5 involution cells match") {
    const auto gen = table1_lines(build_table1());
    const auto emb = parse_table1(embedded(1));
    CHECK(gen[4].involution == emb[4].involution);
    CHECK(gen[4].involution->finf == "IVstar");
}

TEST_CASE("comparator reports exactly one failure per perturbed cell") {
    auto t1 = embedded(1);
    auto t2 = embedded(2);
    t1["rows"][2]["trivial"]["p25"] = 99;
    auto report = verify_against_embedded(t1, t2);
    CHECK(report.failures() == 1);
    CHECK(report.errata() == 1);

    t1 = embedded(1);
    t2["rows"][0]["p34"] = 5;
    report = verify_against_embedded(t1, t2);
    CHECK(report.failures() == 1);

    // swapping F0 and Finf is not a difference
    t2 = embedded(2);
    std::swap(t1["rows"][4]["involution"]["F0"], t1["rows"][4]["involution"]["Finf"]);
    CHECK(verify_against_embedded(t1, t2).failures() == 0);

    // a dropped row is reported
    t1 = embedded(1);
    t1["rows"].erase(19);
    CHECK(verify_against_embedded(t1, t2).failures() == 1);
}

TEST_CASE("errata list") {
    REQUIRE(known_errata().size() == 1);
    CHECK(known_errata()[0].row == "18");
    CHECK_FALSE(known_errata()[0].reason.empty());
}

TEST_CASE("regeneration is fast") {
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify_against_embedded();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(report.failures() == 0);
    CHECK(secs < 1.0);
}

TEST_CASE("rendering") {
    const auto l1 = table1_lines(build_table1());
    const auto md = render_table1(l1, OutputFormat::Markdown);
    CHECK(md.find("| p(3,4) |") != std::string::npos);
    CHECK(md.find("IV*") != std::string::npos);
    CHECK(std::count(md.begin(), md.end(), '\n') == 22);
    const auto csv = render_table1(l1, OutputFormat::Csv);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "id,g,n,k,ii,iv,iistar,ivstar,triv_p34,triv_p25,triv_l_minus_1,F0,Finf,inv_p34,inv_p25,inv_l");
    CHECK(csv.find("\"3'\"") != std::string::npos);
    CHECK(csv.find("8,3,4,4,7,0,1,0,10,4,1,,,,,") != std::string::npos);
    CHECK(parse_table1(nlohmann::json::parse(render_table1(l1, OutputFormat::Json))) == l1);

    const auto md2 = render_table2(table2_lines(build_table2()), OutputFormat::Markdown);
    CHECK(md2.find("∅") != std::string::npos);
    CHECK(render_genus1(genus1_case(), OutputFormat::Csv) == "id,g,n,k,p34,p25,l,genus\ng1,1,3,1,0,3,0,1\n");
    CHECK(render_table1(l1, OutputFormat::Markdown) == md);

    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("invariant suites pass") {
    const auto checks = run_invariant_suites();
    CHECK(checks.size() >= 15);
    for (const auto& c : checks) {
        INFO(c.suite << ": " << c.name << " " << c.detail);
        CHECK(c.passed);
    }
}
