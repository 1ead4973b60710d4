// Copyright 2026 The rydgate Authors
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

// Runs the built executable end to end.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "run_config.h"

namespace rydgate::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        root_ = fs::path(::testing::TempDir()) / (std::string("rydgate_cli_") + info->name());
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override {
        fs::remove_all(root_);
    }

    // Exit status of the tool; stdout and stderr land in root_.
    int run(const std::string &args) {
        std::string cmd = std::string(RYDGATE_CLI_PATH) + " " + args + " >" + (root_ / "stdout").string() + " 2>" +
                          (root_ / "stderr").string();
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    std::string out_dir(const std::string &name) const {
        return (root_ / name).string();
    }
    std::size_t csv_rows(const fs::path &path) const {
        std::ifstream in(path);
        std::string line;
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            ++rows;
        }
        return rows - 1;
    }

    fs::path root_;
};

TEST_F(CliTest, MapWritesCsvLatticeAndMetadata) {
    ASSERT_EQ(run("map --b2 0 --grid=-8:8:0.5 --out " + out_dir("m")), 0);
    fs::path dir = out_dir("m");
    std::string csv = slurp(dir / "map.csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "a_odd_over_pi,a_even_over_pi,fidelity");
    EXPECT_EQ(csv_rows(dir / "map.csv"), 33u * 33u);
    EXPECT_NE(csv.find("\n2,2,1\n"), std::string::npos);
    Json lattice = Json::parse(slurp(dir / "lattice.json"));
    EXPECT_NEAR(lattice["nn_spacing_over_pi"].get<double>(), 4.0, 1e-9);
    Json meta = Json::parse(slurp(dir / "metadata.json"));
    EXPECT_EQ(meta["command"], "map");
    EXPECT_EQ(meta["config"]["b2"], 0.0);
    EXPECT_EQ(meta["config"]["grid"], "-8:8:0.5");
    EXPECT_EQ(meta["outputs"]["map.csv"]["sha256"], sha256_hex(csv));
    EXPECT_EQ(meta["config_sha256"], sha256_hex(meta["config"].dump()));
    for (const auto &entry : fs::directory_iterator(dir)) {
        EXPECT_NE(entry.path().extension(), ".tmp");
    }
}

TEST_F(CliTest, SameConfigGivesIdenticalBytes) {
    std::string args = "map --b2 0.1 --grid=-3:3:0.1 --threads 3 --out ";
    ASSERT_EQ(run(args + out_dir("a")), 0);
    ASSERT_EQ(run("map --b2 0.1 --grid=-3:3:0.1 --threads 1 --out " + out_dir("b")), 0);
    EXPECT_EQ(slurp(fs::path(out_dir("a")) / "map.csv"), slurp(fs::path(out_dir("b")) / "map.csv"));
}

TEST_F(CliTest, FlagsOverrideConfigFileOverDefaults) {
    fs::path config = root_ / "run.json";
    std::ofstream(config) << R"({"b2": 0.5, "grid": "-2:2:0.5", "fidelity": "trace"})";
    ASSERT_EQ(run("map --config " + config.string() + " --b2 0.2 --out " + out_dir("p")), 0);
    Json meta = Json::parse(slurp(fs::path(out_dir("p")) / "metadata.json"));
    EXPECT_EQ(meta["config"]["b2"], 0.2);
    EXPECT_EQ(meta["config"]["grid"], "-2:2:0.5");
    EXPECT_EQ(meta["config"]["fidelity"], "trace");
    EXPECT_EQ(meta["config"]["qubits"], 2);
}

TEST_F(CliTest, ConfigErrorsExitTwoWithoutOutput) {
    fs::path config = root_ / "bad.json";
    std::ofstream(config) << R"({"colour": "blue"})";
    EXPECT_EQ(run("map --config " + config.string() + " --out " + out_dir("x")), 2);
    EXPECT_EQ(run("map --grid=1:0:0.1 --out " + out_dir("x")), 2);
    EXPECT_EQ(run("map --fidelity best --out " + out_dir("x")), 2);
    EXPECT_EQ(run("map --b2 1.5 --out " + out_dir("x")), 2);
    EXPECT_EQ(run("map --qubits 3 --no-sop --out " + out_dir("x")), 2);
    EXPECT_EQ(run("map --b2 abc --out " + out_dir("x")), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_FALSE(fs::exists(fs::path(out_dir("x")) / "map.csv"));
    EXPECT_NE(slurp(root_ / "stderr").size(), 0u);
}

TEST_F(CliTest, ThreeQubitMap) {
    ASSERT_EQ(run("map --qubits 3 --b2 0.1 --c2 0.1 --sop --grid=-3:3:0.25 --out " + out_dir("q")), 0);
    Json meta = Json::parse(slurp(fs::path(out_dir("q")) / "metadata.json"));
    EXPECT_EQ(meta["config"]["orth"], "full");
    EXPECT_NE(slurp(root_ / "stdout").find("max F"), std::string::npos);
}

TEST_F(CliTest, RobustnessAtZeroDelta) {
    ASSERT_EQ(run("robustness --b2-values 0,0.3 --delta=-0.1:0.1:0.05 --out " + out_dir("r")), 0);
    std::ifstream in(fs::path(out_dir("r")) / "robustness.csv");
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "b2,delta,state,amplitude");
    int zero_rows = 0;
    while (std::getline(in, line)) {
        std::stringstream fields(line);
        std::string b2, delta, state, amplitude;
        std::getline(fields, b2, ',');
        std::getline(fields, delta, ',');
        std::getline(fields, state, ',');
        std::getline(fields, amplitude, ',');
        // Every state at b = 0, and |00> for any b, sits at -1 without error.
        if (std::stod(delta) == 0.0 && (std::stod(b2) == 0.0 || state == "00")) {
            EXPECT_NEAR(std::stod(amplitude), -1.0, 1e-9) << line;
            ++zero_rows;
        }
    }
    EXPECT_EQ(zero_rows, 4);
    Json slopes = Json::parse(slurp(fs::path(out_dir("r")) / "slopes.json"));
    ASSERT_EQ(slopes.size(), 2u);
    EXPECT_NEAR(slopes[1]["slope"].get<double>(), 4.0, 0.2);
}

TEST_F(CliTest, BscanDefaultProtocols) {
    ASSERT_EQ(run("bscan --b2-grid 0:0.5:0.1 --out " + out_dir("s")), 0);
    fs::path csv = fs::path(out_dir("s")) / "bscan.csv";
    EXPECT_EQ(csv_rows(csv), 5u * 6u);
    EXPECT_NE(slurp(csv).find("\"(-6.1,0.9)\""), std::string::npos);
    EXPECT_NE(slurp(csv).find("\"(2,2)\",2,2,0,1,1\n"), std::string::npos);
}

TEST_F(CliTest, OptimizeSmallGrid) {
    ASSERT_EQ(run("optimize --grid 1:2:1 --restarts 2 --max-evals 300 --seed 5 --out " + out_dir("o")), 0);
    fs::path csv = fs::path(out_dir("o")) / "optimized_map.csv";
    EXPECT_EQ(csv_rows(csv), 4u);
    EXPECT_EQ(run("optimize --mode all-factors --c2 0.1 --min-sq 1 --grid 1:2:1 --out " + out_dir("o2")), 2);
    EXPECT_EQ(run("optimize --mode sideways --grid 1:2:1 --out " + out_dir("o3")), 2);
}

TEST_F(CliTest, EsopMapHasFormulaCheck) {
    ASSERT_EQ(run("esop-map --pulses 3 --grid=-2:2:0.5 --out " + out_dir("e")), 0);
    fs::path dir = out_dir("e");
    EXPECT_EQ(csv_rows(dir / "formula_check.csv"), 21u * 21u);
    Json meta = Json::parse(slurp(dir / "metadata.json"));
    EXPECT_TRUE(meta["outputs"].contains("formula_check.csv"));
}

TEST_F(CliTest, ValidateExitCodes) {
    ASSERT_EQ(run("validate --out " + out_dir("v")), 0);
    Json report = Json::parse(slurp(fs::path(out_dir("v")) / "validation.json"));
    EXPECT_EQ(report["passed"], true);
    EXPECT_EQ(run("validate --tolerance 1e-30 --out " + out_dir("v2")), 3);
    EXPECT_TRUE(fs::exists(fs::path(out_dir("v2")) / "validation.json"));
    fs::path protocol = fs::path(out_dir("v")) / "protocol.json";
    EXPECT_EQ(run("validate --protocol " + protocol.string() + " --shape gaussian --out " + out_dir("v3")), 0);
    EXPECT_EQ(run("validate --shape box --out " + out_dir("v4")), 2);
}

TEST_F(CliTest, Help) {
    EXPECT_EQ(run("--help"), 0);
    EXPECT_NE(slurp(root_ / "stdout").find("esop-map"), std::string::npos);
}

}  // namespace
}  // namespace rydgate::cli
