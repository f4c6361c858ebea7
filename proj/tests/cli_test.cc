// Copyright 2026 The Qubus Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qubus_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    RunResult run(const std::string &args) const {
        const std::string err_file = path("stderr.txt");
        const std::string cmd = std::string(QUBUS_CLI_PATH) + " " + args + " 2>" + err_file;
        FILE *pipe = popen(cmd.c_str(), "r");
        std::string out;
        std::array<char, 4096> buf{};
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
            out.append(buf.data(), n);
        }
        const int status = pclose(pipe);
        return {WEXITSTATUS(status), out, slurp(err_file)};
    }

    std::string model(const std::string &name, int n, const std::string &eps, const std::string &v,
                      int ne = 1) const {
        std::ostringstream s;
        s << R"({"N":)" << n << R"(,"n":)" << ne << R"(,"eps":)" << eps << R"(,"V":)" << v << R"(,"r":1})";
        return write(name, s.str());
    }

    std::string dense3() const {
        return model("m3.json", 3, "[1.0,1.2,1.5]", "[[0,0.3,0.2],[0.3,0,0.5],[0.2,0.5,0]]");
    }
    std::string pair(double v) const {
        std::ostringstream s;
        s << "[[0," << v << "],[" << v << ",0]]";
        return model("m2.json", 2, "[1,1]", s.str());
    }

    fs::path dir_;
};

TEST_F(CliTest, CompileCarryover) {
    const std::string out = path("seq.json");
    RunResult r = run("compile --model " + dense3() + " --strategy carryover --out " + out);
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(j["counts"]["bus"], 8);
    EXPECT_EQ(j["version"], 1);
}

TEST_F(CliTest, CompileLimitedInfeasible) {
    const std::string m =
        model("m4.json", 4, "[1,1,1,1]", "[[0,1,1,1],[1,0,1,2],[1,1,0,1],[1,2,1,0]]");
    RunResult r = run("compile --model " + m + " --strategy limited");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NotProductForm"), std::string::npos);
}

TEST_F(CliTest, CompileFixedRange) {
    const std::string m = model("m5.json", 5, "[1,1,1,1,1]",
                                "[[0,1,1,0,0],[1,0,1,1,0],[1,1,0,1,1],[0,1,1,0,1],[0,0,1,1,0]]");
    RunResult r = run("compile --model " + m + " --strategy fixed-range --p 2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["counts"]["bus"], 16);
}

TEST_F(CliTest, VerifyPassAndCorruption) {
    const std::string m = dense3();
    const std::string seq = path("seq.json");
    ASSERT_EQ(run("compile --model " + m + " --strategy stepwise --out " + seq).code, 0);
    RunResult ok = run("verify --sequence " + seq + " --model " + m);
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.substr(0, 4), "PASS");

    nlohmann::json j = nlohmann::json::parse(slurp(seq));
    for (auto &i : j["instructions"]) {
        if (i["op"] == "disp") {
            i["beta"][0] = i["beta"][0].get<double>() + 0.1;
            break;
        }
    }
    const std::string bad = write("bad.json", j.dump());
    RunResult fail = run("verify --sequence " + bad + " --model " + m);
    EXPECT_EQ(fail.code, 3);
    EXPECT_EQ(fail.out.substr(0, 4), "FAIL");
}

TEST_F(CliTest, VerifyIdentity) {
    const std::string seq = write(
        "id.json", R"({"version":1,"num_qubits":2,"strategy":"","instructions":[],"counts":{"bus":0,"local":0}})");
    RunResult r = run("verify --sequence " + seq + " --target identity");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 4), "PASS");
}

TEST_F(CliTest, RoundTripCounts) {
    const std::string m = dense3();
    const std::string seq = path("trot.json");
    ASSERT_EQ(run("compile --model " + m + " --target trotter --tau 0.2 --out " + seq).code, 0);
    nlohmann::json j = nlohmann::json::parse(slurp(seq));
    int bus = 0;
    int local = 0;
    for (const auto &i : j["instructions"]) {
        bus += i["op"] == "disp";
        local += i["op"] == "local";
    }
    EXPECT_EQ(j["counts"]["bus"].get<int>(), bus);
    EXPECT_EQ(j["counts"]["local"].get<int>(), local);
    EXPECT_GT(bus, 0);
    RunResult r = run("verify --sequence " + seq + " --model " + m + " --target trotter --tau 0.2");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(CliTest, GapExactAndPea) {
    RunResult r = run("gap --model " + pair(0.5) + " --k 6");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["exact_gap"].get<double>(), 1.0, 1e-12);
    const double bin = j["pea"]["gap_uncertainty"].get<double>();
    EXPECT_NEAR(j["pea"]["gap"].get<double>(), 1.0, bin);
    EXPECT_EQ(j["pea"]["phases"].size(), 2u);
}

TEST_F(CliTest, GapSpectrumCsv) {
    const std::string csv = path("spectrum.csv");
    RunResult r = run("gap --method exact --model " + pair(0.5) + " --spectrum-out " + csv);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(csv).substr(0, 16), "index,eigenvalue");
}

TEST_F(CliTest, DegenerateGapUnresolved) {
    RunResult r = run("gap --method pea --model " + pair(0.0) + " --k 4");
    EXPECT_EQ(r.code, 4);
}

TEST_F(CliTest, PeaDeterministic) {
    const std::string m = pair(0.5);
    RunResult a = run("pea --model " + m + " --k 4 --shots 200 --seed 9");
    RunResult b = run("pea --model " + m + " --k 4 --shots 200 --seed 9");
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["k"], 4);
    EXPECT_TRUE(j.contains("counts"));
}

TEST_F(CliTest, CountSummaryRows) {
    RunResult r = run("count --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("case,N,p,k,delta,formula,compiled,gap"), std::string::npos);
    EXPECT_NE(r.out.find("\ncrossover,5\n"), std::string::npos);
    const auto pos = r.out.find("\nmaxN,");
    ASSERT_NE(pos, std::string::npos);
    const int maxn = std::stoi(r.out.substr(pos + 6));
    EXPECT_NEAR(maxn, 72, 1);
    RunResult again = run("count --format csv");
    EXPECT_EQ(r.out, again.out);
}

TEST_F(CliTest, CountVerifyMode) {
    RunResult r = run("count --format csv --verify-counts --n-max 8");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\nmismatches,0\n"), std::string::npos);
    RunResult j = run("count --format json");
    EXPECT_EQ(nlohmann::json::parse(j.out)["crossover"], 5);
}

TEST_F(CliTest, BadArguments) {
    EXPECT_NE(run("").code, 0);
    EXPECT_NE(run("compile --model /nonexistent.json").code, 0);
    EXPECT_EQ(run("compile --model " + dense3() + " --strategy fixed-range --p 7").code, 2);
}

}  // namespace
