// Copyright 2026 The dgsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "dgsp/bench.h"
#include "dgsp/errors.h"
#include "dgsp/io.h"

namespace dgsp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dgsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    int run(const std::vector<std::string>& args) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    static std::string slurp(const std::string& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

TEST_F(CliTest, GenerateRoundTrips) {
    ASSERT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "3", "--k", "1", "--seed", "7", "--out", path("i.json")}),
              cli::kOk);
    const auto loaded = load_instance(path("i.json"));
    const auto direct = generate({.n = 4, .t = 1, .m = 3, .k = 1, .seed = 7});
    EXPECT_EQ(instance_to_json(loaded).dump(), instance_to_json(direct).dump());
    save_instance(loaded, path("j.json"));
    EXPECT_EQ(slurp(path("i.json")), slurp(path("j.json")));
}

TEST_F(CliTest, GenerateReportsInfeasibleParams) {
    EXPECT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "1", "--k", "1", "--out", path("x.json")}), cli::kPromise);
    EXPECT_NE(err_.str().find("m >= n-k violated"), std::string::npos);
    EXPECT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "3", "--k", "0", "--out", path("x.json")}), cli::kPromise);
    EXPECT_NE(err_.str().find("m >= n-k violated"), std::string::npos);
    EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}), cli::kUsage);
    EXPECT_EQ(run({"generate", "--n", "4"}), cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
    EXPECT_EQ(run({"solve", path("missing.json")}), cli::kUsage);
    EXPECT_EQ(run({"--help"}), cli::kOk);
}

TEST_F(CliTest, FullSolveIsExactAndDeterministic) {
    ASSERT_EQ(run({"generate", "--n", "6", "--t", "2", "--m", "4", "--k", "2", "--seed", "11", "--out", path("i.json")}),
              cli::kOk);
    ASSERT_EQ(run({"solve", path("i.json"), "--seed", "5", "--out", path("a.json")}), cli::kOk);
    EXPECT_NE(out_.str().find("exact: true"), std::string::npos);
    EXPECT_NE(out_.str().find("recovered subgroup:"), std::string::npos);
    ASSERT_EQ(run({"solve", path("i.json"), "--seed", "5", "--out", path("b.json")}), cli::kOk);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));

    const auto trace = Json::parse(slurp(path("a.json")));
    EXPECT_EQ(trace["algorithm"], "full");
    EXPECT_EQ(trace["iterations"].size(), 4u);
    EXPECT_EQ(trace["subgroup"].size(), 4u);
}

TEST_F(CliTest, EveryAlgorithmRuns) {
    ASSERT_EQ(run({"generate", "--n", "5", "--t", "1", "--m", "3", "--k", "2", "--seed", "3", "--out", path("i.json")}),
              cli::kOk);
    for (const char* a : {"dsl", "ds", "edsl", "eds", "full"}) {
        EXPECT_EQ(run({"solve", path("i.json"), "--algorithm", a, "--seed", "1"}), cli::kOk) << a << "\n" << out_.str();
    }
    EXPECT_EQ(run({"solve", path("i.json"), "--algorithm", "bogus"}), cli::kUsage);
}

TEST_F(CliTest, PerturbedDsPrintsWitness) {
    ASSERT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "3", "--k", "1", "--seed", "7", "--out", path("i.json")}),
              cli::kOk);
    EXPECT_EQ(run({"solve", path("i.json"), "--algorithm", "ds", "--perturb-sl", "--seed", "3"}), cli::kOk);
    EXPECT_NE(out_.str().find("exact: false"), std::string::npos);
    EXPECT_NE(out_.str().find("witness"), std::string::npos);
}

TEST_F(CliTest, VerifyNamesCorruption) {
    ASSERT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "3", "--k", "1", "--seed", "7", "--out", path("i.json")}),
              cli::kOk);
    EXPECT_EQ(run({"verify", path("i.json")}), cli::kOk);
    EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);

    auto j = Json::parse(slurp(path("i.json")));
    j["f_table"][1] = j["f_table"][0];  // f(0001) = f(0000) but 0001 is not in S
    std::ofstream(path("bad.json")) << j.dump();
    EXPECT_EQ(run({"verify", path("bad.json")}), cli::kPromise);
    EXPECT_NE(out_.str().find("promise: FAIL"), std::string::npos);
    // Every counterexample involves the corrupted point 0001.
    EXPECT_NE(out_.str().find("(0001, "), std::string::npos);
}

TEST_F(CliTest, SolveOnCorruptedInstanceIsReported) {
    ASSERT_EQ(run({"generate", "--n", "4", "--t", "1", "--m", "3", "--k", "1", "--seed", "7", "--out", path("i.json")}),
              cli::kOk);
    auto j = Json::parse(slurp(path("i.json")));
    j["f_table"][1] = j["f_table"][0];
    std::ofstream(path("bad.json")) << j.dump();
    EXPECT_NE(run({"solve", path("bad.json"), "--seed", "1"}), cli::kOk);
}

TEST_F(CliTest, BenchRowsRespectBounds) {
    ASSERT_EQ(run({"bench", "--n", "3..5", "--t", "1,2", "--trials", "4", "--seed", "9", "--out", path("b.csv")}),
              cli::kOk);
    EXPECT_NE(out_.str().find("success rate: 1"), std::string::npos);
    std::istringstream csv(slurp(path("b.csv")));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, kBenchCsvHeader);
    int rows = 0;
    while (std::getline(csv, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        ASSERT_EQ(cells.size(), 12u);
        const int n = std::stoi(cells[0]), t = std::stoi(cells[1]);
        EXPECT_LE(std::stoi(cells[6]), n - t);
        EXPECT_LE(std::stoi(cells[7]), 6 * (n - t));
        EXPECT_EQ(cells[9], "true");
        ++rows;
    }
    const auto grid = feasible_grid({3, 4, 5}, {1, 2}, std::nullopt);
    EXPECT_EQ(rows, static_cast<int>(grid.size()) * 4);
}

TEST_F(CliTest, BenchIsReproducible) {
    const std::vector<std::string> base = {"bench", "--n", "4", "--t", "1", "--trials", "3", "--seed", "2"};
    auto a = base, b = base;
    a.insert(a.end(), {"--out", path("a.csv"), "--workers", "1"});
    b.insert(b.end(), {"--out", path("b.csv"), "--workers", "3"});
    ASSERT_EQ(run(a), cli::kOk);
    ASSERT_EQ(run(b), cli::kOk);
    auto strip_time = [](const std::string& text) {
        std::string out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + "\n";
        return out;
    };
    EXPECT_EQ(strip_time(slurp(path("a.csv"))), strip_time(slurp(path("b.csv"))));
}

TEST(CliParse, IntLists) {
    EXPECT_EQ(cli::parse_int_list("4..6"), (std::vector<int>{4, 5, 6}));
    EXPECT_EQ(cli::parse_int_list("1,2"), (std::vector<int>{1, 2}));
    EXPECT_EQ(cli::parse_int_list("7"), (std::vector<int>{7}));
    EXPECT_THROW(cli::parse_int_list("6..4"), UsageError);
    EXPECT_THROW(cli::parse_int_list("x"), UsageError);
}

}  // namespace
}  // namespace dgsp
