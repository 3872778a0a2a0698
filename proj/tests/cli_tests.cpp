#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "subprocess.hpp"

using testutil::cli;
using testutil::run;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("count") {
    auto both = run(cli() + " count --s 4 --n 38 --method both");
    CHECK(both.status == 0);
    CHECK(both.out == "2\n");

    auto defaulted = run(cli() + " count --s 5 --n 3");
    CHECK(defaulted.status == 0);
    CHECK(defaulted.out == "1\n");

    auto zero = run(cli() + " count --s 3 --n 12 --zero --method oracle");
    CHECK(zero.status == 0);
    CHECK(zero.out == "3\n");

    auto theorem = run(cli() + " count --s 4 --n 33 --method theorem");
    CHECK(theorem.status == 0);
    CHECK(theorem.out == "2\n");

    auto none = run(cli() + " count --s 4 --n 7");
    CHECK(none.status == 0);
    CHECK(none.out == "0\n");
}

TEST_CASE("count usage errors") {
    CHECK(run(cli() + " count --s 4 --n 12 --zero").status == 2);
    CHECK(run(cli() + " count --s 4 --n 12 --zero --method theorem").status == 2);
    CHECK(run(cli() + " count --s 2 --n 12").status == 2);
    CHECK(run(cli() + " count --n 12").status == 2);
    CHECK(run(cli() + " count --s 4 --n 12 --method wild").status == 2);
    CHECK(run(cli() + " nonsense").status == 2);
    CHECK(run(cli() + " --help").status == 0);
}

TEST_CASE("decompose") {
    auto squares = run(cli() + " decompose --s 4 --n 38");
    CHECK(squares.status == 0);
    auto ls = lines_of(squares.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].find("36+1+1 @ (10,5)") != std::string::npos);
    CHECK(ls[0].find("ranks=(6,1,1)") != std::string::npos);
    CHECK(ls[1].find("25+9+4 @ (7,7)") != std::string::npos);

    auto shared = run(cli() + " decompose --s 4 --n 33");
    auto shared_lines = lines_of(shared.out);
    REQUIRE(shared_lines.size() == 2);
    CHECK(shared_lines[0].find("@ (6,6)") != std::string::npos);
    CHECK(shared_lines[1].find("@ (6,6)") != std::string::npos);

    auto empty = run(cli() + " decompose --s 4 --n 7");
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());

    // rank-0 parts have no vertex annotation
    auto zero = run(cli() + " decompose --s 3 --n 39 --zero");
    auto zero_lines = lines_of(zero.out);
    REQUIRE(zero_lines.size() == 3);
    CHECK(zero_lines[0].find("36+3+0") != std::string::npos);
    CHECK(zero_lines[0].find("@") == std::string::npos);
    CHECK(zero_lines[1].find("28+10+1 @") != std::string::npos);
}

TEST_CASE("table csv") {
    auto table = run(cli() + " table --s 4 --max 38 --format csv");
    CHECK(table.status == 0);
    auto rows = lines_of(table.out);
    REQUIRE(rows.size() == 40);  // header + 39 rows
    CHECK(rows[0] == "n,count");
    CHECK(rows[1] == "0,0");
    CHECK(rows[4] == "3,1");
    CHECK(rows[34] == "33,2");
    CHECK(rows[39] == "38,2");

    auto again = run(cli() + " table --s 4 --max 38 --format csv");
    CHECK(again.out == table.out);
}

TEST_CASE("table json") {
    auto table = run(cli() + " table --s 4 --max 38 --format json");
    CHECK(table.status == 0);
    const auto doc = nlohmann::json::parse(table.out);
    CHECK(doc.at("s") == 4);
    CHECK(doc.at("max") == 38);
    CHECK(doc.at("counts").size() == 39);
    CHECK(doc.at("counts").at(38) == nlohmann::json::array({38, 2}));
}

TEST_CASE("table file output") {
    const std::string path = "cli_test_table.csv";
    auto to_file = run(cli() + " table --s 3 --max 12 --format csv --out " + path);
    CHECK(to_file.status == 0);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("12,2") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run(cli() + " table --s 3 --max 5 --format csv --out /nonexistent-dir/t.csv")
              .status == 4);
}

TEST_CASE("verify suites") {
    auto hs = run(cli() + " verify --suite hs --max 40");
    CHECK(hs.status == 0);
    CHECK(hs.out.find("PASS") != std::string::npos);

    auto hset = run(cli() + " verify --suite hset --max 200");
    CHECK(hset.status == 0);
    CHECK(hset.out.find("exceptions <= 100: 7 15 23 28 31 39 47 55 60 63 71 79 87 92 95") !=
          std::string::npos);

    auto coverage = run(cli() + " verify --suite coverage --max 400");
    CHECK(coverage.status == 0);

    auto oracle = run(cli() + " verify --suite oracle --max 120");
    CHECK(oracle.status == 0);
    CHECK(lines_of(oracle.out).size() == 8);  // one report line per order 3..10

    auto theorem1 = run(cli() + " verify --suite theorem1 --max 80");
    CHECK(theorem1.status == 0);
    CHECK(lines_of(theorem1.out).size() == 3);  // s = 3, 4, 5

    CHECK(run(cli() + " verify --suite unknown --max 5").status == 2);
}

TEST_CASE("graph export") {
    auto tiny = run(cli() + " graph --s 4 --max 3 --format dot");
    CHECK(tiny.status == 0);
    CHECK(tiny.out == "digraph G {\n  v_0_0 [label=\"(0,0):3\"];\n}\n");

    auto json = run(cli() + " graph --s 4 --max 38 --format json");
    CHECK(json.status == 0);
    const auto doc = nlohmann::json::parse(json.out);
    bool saw_7_7 = false, saw_10_5 = false;
    for (const auto& v : doc.at("vertices")) {
        if (v.at("i") == 7 && v.at("j") == 7) {
            saw_7_7 = true;
            CHECK(v.at("nontrivial") == true);
            CHECK(v.at("value") == 38);
        }
        if (v.at("i") == 10 && v.at("j") == 5) {
            saw_10_5 = true;
            CHECK(v.at("nontrivial") == true);
        }
    }
    CHECK(saw_7_7);
    CHECK(saw_10_5);

    CHECK(run(cli() + " graph --s 4 --max 2 --format dot").status == 2);
    CHECK(run(cli() + " graph --s 4 --max 10 --format png").status == 2);
}
