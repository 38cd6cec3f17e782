/*
   Copyright 2026 The hyperbms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end runs of the hbms binary.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
};

Run hbms(const std::string& args) {
    const std::string cmd = std::string(HBMS_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    Run r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hbms_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const std::string kWorked = std::string(HBMS_TEST_DATA) + "/worked_example.tbl";

TEST_F(Cli, DetectWorkedExample) {
    const auto r = hbms("detect " + kWorked + " --json " + path("det.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("tau=(0,1) t=2"), std::string::npos) << r.out;
    const auto j = nlohmann::json::parse(slurp(path("det.json")));
    bool found = false;
    for (const auto& c : j) found = found || (c["tau"] == nlohmann::json::array({0, 1}) && c["t"] == 2);
    EXPECT_TRUE(found);
}

TEST_F(Cli, DetectFullyKnownTable) {
    ASSERT_EQ(hbms("synth --seed 4 --out " + path("full.tbl")).code, 0);
    const auto r = hbms("detect " + path("full.tbl"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("25 candidate(s)"), std::string::npos) << r.out;
}

TEST_F(Cli, DetectMalformed) {
    spit(path("bad.tbl"), "# shape 2 2\n1 1\n1\n");
    EXPECT_EQ(hbms("detect " + path("bad.tbl")).code, 2);
    EXPECT_EQ(hbms("detect " + path("missing.tbl")).code, 2);
}

TEST_F(Cli, DetectNoWindow) {
    // Only the diagonal is known, so no placement fits even B(3).
    std::string text = "# field p=2 m=4\n# shape 5 5\n";
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) text += i == j ? "1 " : "* ";
        text += "\n";
    }
    spit(path("holes.tbl"), text);
    const auto r = hbms("detect " + path("holes.tbl"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("no hyperbolic window"), std::string::npos);
}

TEST_F(Cli, CompleteWorkedExample) {
    const auto r = hbms("complete " + kWorked + " --print --json " + path("rep.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("Completed", 0), 0u) << r.out;
    EXPECT_EQ(r.out.find('*'), std::string::npos);
    const auto j = nlohmann::json::parse(slurp(path("rep.json")));
    EXPECT_EQ(j["status"], "Completed");
    ASSERT_EQ(j["completed_table"].size(), 25u);
    EXPECT_LE(j["support"].size(), 2u);
    // The 18 known cells come back unchanged.
    EXPECT_EQ(j["completed_table"][1], "a^5");
    EXPECT_EQ(j["completed_table"][24], "a");
}

TEST_F(Cli, CompleteCorrupted) {
    ASSERT_EQ(hbms("synth --seed 2 --holes 2 --out " + path("t.tbl")).code, 0);
    auto text = slurp(path("t.tbl"));
    // Replace the last row's first value by a different element.
    const auto last = text.rfind('\n', text.size() - 2) + 1;
    const auto end = text.find(' ', last);
    const std::string old = text.substr(last, end - last);
    text.replace(last, end - last, old == "a^3" ? "a^4" : "a^3");
    spit(path("t.tbl"), text);
    const auto r = hbms("complete " + path("t.tbl"));
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_EQ(r.out.rfind("Completed", 0), std::string::npos);
}

TEST_F(Cli, CompleteForcedGradedOrder) {
    ASSERT_EQ(hbms("synth --seed 3 --holes 3 --out " + path("t.tbl")).code, 0);
    const auto auto_run = hbms("complete " + path("t.tbl"));
    EXPECT_NE(auto_run.out.find("order=lex"), std::string::npos) << auto_run.out;
    const auto graded = hbms("complete " + path("t.tbl") + " --order graded");
    EXPECT_EQ(graded.code, 0);
    EXPECT_NE(graded.out.find("order=graded"), std::string::npos) << graded.out;
}

TEST_F(Cli, CompleteBadOptions) {
    EXPECT_NE(hbms("complete " + kWorked + " --order revlex").code, 0);
    EXPECT_EQ(hbms("complete " + kWorked + " --tau 0,x").code, 2);
}

TEST_F(Cli, SynthIsDeterministic) {
    ASSERT_EQ(hbms("synth --seed 17 --holes 6 --out " + path("a.tbl") + " --truth " + path("a.json")).code, 0);
    ASSERT_EQ(hbms("synth --seed 17 --holes 6 --out " + path("b.tbl") + " --truth " + path("b.json")).code, 0);
    EXPECT_EQ(slurp(path("a.tbl")), slurp(path("b.tbl")));
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    ASSERT_EQ(hbms("synth --seed 18 --holes 6 --out " + path("c.tbl")).code, 0);
    EXPECT_NE(slurp(path("a.tbl")), slurp(path("c.tbl")));
}

TEST_F(Cli, SynthThenComplete) {
    for (int seed = 1; seed <= 5; ++seed) {
        const auto s = std::to_string(seed);
        ASSERT_EQ(hbms("synth --seed " + s + " --holes 5 --out " + path("t.tbl") + " --truth " + path("t.json")).code, 0);
        ASSERT_EQ(hbms("complete " + path("t.tbl") + " --json " + path("r.json")).code, 0) << seed;
        const auto truth = nlohmann::json::parse(slurp(path("t.json")));
        const auto rep = nlohmann::json::parse(slurp(path("r.json")));
        EXPECT_EQ(rep["completed_table"], truth["full_table"]) << seed;
    }
}

TEST_F(Cli, SynthPuncturedThenComplete) {
    ASSERT_EQ(hbms("synth --seed 9 --puncture 1,1 --out " + path("t.tbl") + " --truth " + path("t.json")).code, 0);
    const auto det = hbms("detect " + path("t.tbl"));
    ASSERT_EQ(hbms("complete " + path("t.tbl") + " --json " + path("r.json")).code, 0) << det.out;
    const auto truth = nlohmann::json::parse(slurp(path("t.json")));
    const auto rep = nlohmann::json::parse(slurp(path("r.json")));
    EXPECT_EQ(rep["completed_table"], truth["full_table"]);
}

TEST_F(Cli, Verify) {
    ASSERT_EQ(hbms("synth --seed 6 --holes 4 --out " + path("t.tbl") + " --truth " + path("t.json")).code, 0);
    const auto truth = nlohmann::json::parse(slurp(path("t.json")));
    const std::string e = truth["e"];
    const int t1 = truth["tau"][0], t2 = truth["tau"][1];
    // Cell n holds e(alpha^{tau + n}) = e(alpha^{n - (-tau)}).
    const std::string tau = std::to_string((5 - t1) % 5) + "," + std::to_string((5 - t2) % 5);
    const std::string wrong = std::to_string((6 - t1) % 5) + "," + std::to_string((5 - t2) % 5);
    const auto ok = hbms("verify " + path("t.tbl") + " '" + e + "' --tau " + tau);
    EXPECT_EQ(ok.code, 0) << e << " " << tau;
    EXPECT_EQ(ok.out, "afforded\n");
    EXPECT_EQ(hbms("verify " + path("t.tbl") + " '" + e + "' --tau " + wrong).code, 1);
    EXPECT_EQ(hbms("verify " + path("t.tbl") + " '" + e + " + a' --tau " + tau).code, 1);
    EXPECT_EQ(hbms("verify " + path("t.tbl") + " 'X1 +' --tau " + tau).code, 2);
}

TEST_F(Cli, Sweep) {
    const auto r = hbms("sweep --weight 1 --t 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("instances=9375 completed=9375"), std::string::npos) << r.out;
}

TEST_F(Cli, NoSubcommand) { EXPECT_NE(hbms("").code, 0); }

}  // namespace
