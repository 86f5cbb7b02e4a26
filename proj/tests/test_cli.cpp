#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GAMMA_SHARP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("enclose brackets gamma with small width") {
    const RunResult r = run_cli("enclose --a 1 --n 10000 --method thm14x --format json");
    REQUIRE(r.exit_code == 0);
    const json row = json::parse(r.out).at(0);
    const double lo = row.at("lo").get<double>();
    const double hi = row.at("hi").get<double>();
    CHECK(lo <= 0.5772156649);
    CHECK(0.5772156649 <= hi);
    CHECK(hi - lo <= 2e-11);
    CHECK(row.at("method").get<std::string>() == "THM14_X");
}

TEST_CASE("verify lemmas passes") {
    const RunResult r = run_cli("verify --suite lemmas --format json");
    REQUIRE(r.exit_code == 0);
    const json reps = json::parse(r.out);
    REQUIRE(reps.is_array());
    for (const json& rep : reps) {
        CAPTURE(rep.at("suite").get<std::string>());
        CHECK(rep.at("passed").get<bool>());
        CHECK(rep.at("points_checked").get<std::int64_t>() > 0);
        CHECK(rep.contains("failures"));
        CHECK(rep.contains("max_violation"));
        CHECK(rep.contains("grid"));
    }
}

TEST_CASE("compare shows the sharp lower bound beating BM11") {
    const RunResult r = run_cli("compare --a 1 --n 10");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() > 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "n", "x_n", "y_n", "res_x", "res_y",
                                              "family", "side", "bound", "lo", "hi", "method"});
    double thm13x_lo = 0.0, bm11_lo = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() >= 9);
        if (rows[i][6] == "THM13_X" && rows[i][7] == "LO") thm13x_lo = std::stod(rows[i][8]);
        if (rows[i][6] == "BM11" && rows[i][7] == "LO") bm11_lo = std::stod(rows[i][8]);
    }
    // 1/(2*11 - alpha1) vs 1/(2*11 - 1/4)
    CHECK(thm13x_lo == doctest::Approx(0.046086).epsilon(1e-4));
    CHECK(thm13x_lo > bm11_lo);
    CHECK(bm11_lo > 0.0);
}

TEST_CASE("csv and json emit identical numeric fields") {
    const RunResult csv = run_cli("seq --a 2.5 --n-max 5 --format csv");
    const RunResult js = run_cli("seq --a 2.5 --n-max 5 --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const auto rows = parse_csv(csv.out);
    const json jrows = json::parse(js.out);
    REQUIRE(rows.size() == 6);
    REQUIRE(jrows.size() == 5);
    const char* keys[] = {"a", "n", "x_n", "y_n", "res_x", "res_y"};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t c = 0; c < 6; ++c) {
            CAPTURE(i);
            CAPTURE(c);
            // identical printed digits, not merely close values
            const std::string needle =
                "\"" + std::string(keys[c]) + "\": " + rows[i + 1][c];
            CHECK(js.out.find(needle) != std::string::npos);
            // and the values agree when parsed
            CHECK(std::stod(rows[i + 1][c]) ==
                  doctest::Approx(jrows[i].at(keys[c]).get<double>()).epsilon(1e-15));
        }
    }
}

TEST_CASE("eval reports gamma(a) with an error interval") {
    const RunResult r = run_cli("eval --a 1 --format json");
    REQUIRE(r.exit_code == 0);
    const json row = json::parse(r.out).at(0);
    const double v = row.at("bound").get<double>();
    CHECK(v == doctest::Approx(0.5772156649015329).epsilon(1e-12));
    CHECK(row.at("lo").get<double>() <= v);
    CHECK(v <= row.at("hi").get<double>());
}

TEST_CASE("sharpness command") {
    const RunResult r = run_cli("sharpness --a 1 --family thm14y --n-max 10000 --format json");
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep.at("passed").get<bool>());
    CHECK(rep.at("limit_gap").get<double>() < 1e-4);
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("enclose --a 1 --n 10").exit_code == 0);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("enclose --a 1").exit_code == 2);          // missing --n
    CHECK(run_cli("enclose --a -1 --n 10").exit_code == 2);  // domain error
    CHECK(run_cli("seq --a 1 --n-max 20000000").exit_code == 2);
    CHECK(run_cli("enclose --a 1 --n 10 --format xml").exit_code == 2);
    CHECK(run_cli("eval --a 1 --prec-terms 31").exit_code == 2);  // flag out of range
    // 3 correction terms cannot reach the default 1e-13 target
    CHECK(run_cli("eval --a 1 --prec-terms 3").exit_code == 3);
    CHECK(run_cli("verify --suite bounds").exit_code == 1);  // the a=0.1, n=1 defect
}
