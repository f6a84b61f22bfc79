#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pprod/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = pprod::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(PPROD_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

struct GoldenCase {
    std::vector<std::string> args;
    std::string file;
};

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesFile) {
    const auto& c = GetParam();
    const auto r = run(c.args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden(c.file));
}

INSTANTIATE_TEST_SUITE_P(
    Outputs, CliGolden,
    ::testing::Values(
        GoldenCase{{"reproduce-table"}, "reproduce_table.jsonl"},
        GoldenCase{{"energy", "--m", "11", "--x", "10"}, "energy_11_10.json"},
        GoldenCase{{"coverage", "--m", "7", "--x", "7", "--y", "7", "--k", "1", "--ell", "2"},
                   "coverage_7_ell2.json"},
        GoldenCase{{"admissibility", "--case", "k2", "--ell", "3", "--alpha", "0.905", "--beta", "0.905"},
                   "admissibility_k2_l3.json"},
        GoldenCase{{"level", "--k", "2", "--alpha", "0.905", "--beta", "0.905", "--ell", "3"},
                   "level_k2.json"},
        GoldenCase{{"tk", "--m", "11", "--x", "10", "--y", "5", "--k", "1", "--a", "1"}, "tk_11.json"},
        GoldenCase{{"expsum", "--m", "11", "--x", "10", "--k", "2", "--a", "3"}, "expsum_11_k2.json"},
        GoldenCase{{"sieve", "--m", "11", "--x", "10", "--y", "11", "--k", "1", "--a", "1", "--ell", "2"},
                   "sieve_11.json"}));

TEST(Cli, EnergyValues) {
    const auto r = run({"energy", "--m", "11", "--x", "10"});
    const auto j = parse(r.out);
    EXPECT_EQ(j["E"], 44);
    EXPECT_NEAR(j["rhs"].get<double>(), 2.0 * 100 * (100.0 / 11 + 1), 1e-6);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, CoverageUncovered) {
    const auto r = run({"coverage", "--m", "7", "--x", "7", "--y", "7", "--k", "1", "--ell", "1"});
    EXPECT_EQ(r.code, 0);
    const auto j = parse(r.out);
    EXPECT_EQ(j["uncovered"], nlohmann::json::array({5}));
    EXPECT_EQ(j["covered_count"], 5);
}

TEST(Cli, TableValues) {
    const auto r = run({"reproduce-table"});
    std::istringstream in(r.out);
    std::vector<std::string> alphas;
    std::vector<int> pairs;
    for (std::string line; std::getline(in, line);) {
        const auto j = parse(line);
        if (j["kind"] != "row") continue;
        alphas.push_back(j["alpha"]);
        pairs.push_back(j["pair_k"]);
    }
    EXPECT_EQ(alphas, (std::vector<std::string>{"0.905", "0.864", "0.760", "0.673", "0.997"}));
    EXPECT_EQ(pairs, (std::vector<int>{5, 6, 7, 8, 18}));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"energy", "--m", "11", "--x", "10", "--nope"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    const auto bad = run({"tk", "--m", "12", "--x", "10", "--y", "5", "--k", "1", "--a", "2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("gcd"), std::string::npos);
    EXPECT_EQ(run({"coverage", "--m", "7", "--x", "9", "--y", "7", "--k", "1", "--ell", "1"}).code, 2);
    EXPECT_EQ(run({"admissibility", "--case", "k5", "--ell", "3", "--alpha", "0.9", "--beta", "0.9"}).code, 2);
    // A failing verdict is an answer to the query: exit 0 with passes = false.
    const auto no = run({"admissibility", "--case", "k2", "--ell", "3", "--alpha", "0.903", "--beta", "0.903"});
    EXPECT_EQ(no.code, 0);
    EXPECT_FALSE(parse(no.out)["passes"].get<bool>());
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"--seed", "7", "bilinear", "--instances", "30"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run({"--seed", "8", "bilinear", "--instances", "30"}).out);
}

TEST(Cli, TabularFormats) {
    const auto csv = run({"--format", "csv", "tk", "--m", "7", "--x", "7", "--y", "7", "--k", "1", "--all-a"});
    EXPECT_EQ(csv.code, 0);
    std::istringstream in(csv.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "op,m,x,y,k,a,t_count,main_term,delta,bound_rhs,x_ge_sqrt_m");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    EXPECT_EQ(rows, 6);

    const auto tsv = run({"--format", "tsv", "energy", "--m-max", "5"});
    EXPECT_EQ(tsv.code, 0);
    EXPECT_EQ(tsv.out.substr(0, tsv.out.find('\n')), "op\tm\tx\tE\trhs\tpass");
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "pprod_cli_out_test.json";
    std::filesystem::remove(path);
    const auto r = run({"--out", path.string(), "energy", "--m", "11", "--x", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), golden("energy_11_10.json"));
    std::filesystem::remove(path);
}

TEST(Cli, EnvironmentAndFlagPrecedence) {
    ::setenv("PPROD_BUDGET", "10", 1);
    // 4^3 tuples exceed a budget of 10.
    const std::vector<std::string> args{"sieve", "--m", "11", "--x", "10", "--y", "11", "--k", "3", "--a", "1",
                                        "--ell", "2"};
    EXPECT_EQ(run(args).code, 2);
    auto with_flag = args;
    with_flag.insert(with_flag.begin(), {"--budget", "1000"});
    EXPECT_EQ(run(with_flag).code, 0);
    ::unsetenv("PPROD_BUDGET");
    EXPECT_EQ(run(args).code, 0);
}
