#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" LIPWB_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("lipwb_cli_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Cli, ValidatePasses) {
    auto r = run("validate --model example33 --n 12");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["passed"], true);
}

TEST(Cli, ValidateReportsViolation) {
    auto dir = scratch("validate");
    std::ofstream(dir / "bad.json") << R"({"name":"bad","dist":[["0","1","3"],["1","0","1"],["3","1","0"]]})";
    auto r = run("validate --space " + (dir / "bad.json").string());
    EXPECT_EQ(r.code, 1);
    auto j = parse(r);
    EXPECT_EQ(j["violations"][0]["axiom"], "triangle");
    EXPECT_EQ(j["violations"][0]["witness"], nlohmann::json::array({0, 1, 2}));
}

TEST(Cli, ModelErrorsExitThree) {
    EXPECT_EQ(run("validate --model thm57 --param c=1").code, 3);
    EXPECT_EQ(run("validate --model nope").code, 3);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("check").code, 2);
    EXPECT_EQ(run("validate --format xml").code, 2);
    EXPECT_EQ(run("validate --bogus").code, 2);
    EXPECT_EQ(run("free-norm --element '{\"weights\":{\"1\":\"2/4\"}}'").code, 2);
}

TEST(Cli, FreeNormOfCrossedMolecules) {
    auto r = run(R"(free-norm --model dmqr41 --n 6 --element '{"weights":{"0":"2/3","1":"-2/3","2":"4/5","3":"-4/5"}}')");
    EXPECT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["lp"]["norm"], "17/9");
    EXPECT_EQ(j["flow_norm"], "17/9");
    EXPECT_EQ(j["agree"], true);
}

TEST(Cli, VerifyProp23WitnessAtBase) {
    auto r = run("verify --theorem prop23 --n 6 --random 10");
    EXPECT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["exact_pass"], true);
    ASSERT_FALSE(j["witness_samples"].empty());
    for (const auto& s : j["witness_samples"]) EXPECT_EQ(s["point"], 0);
}

TEST(Cli, CheckFailureExitsOne) {
    auto r = run("check --theorem thm37 --model example48 --n 10 --pairs 0-1,2-3,4-5,6-7,8-9");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(parse(r)["result"]["clause"], "2");
}

TEST(Cli, PipelineCasesAndDichotomy) {
    auto r = run("pipeline --model example48 --n 30");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["case"], "I-(ii)");
    EXPECT_EQ(run("pipeline --model example33 --n 12").code, 1);
}

TEST(Cli, OutputIsDeterministic) {
    auto a = run("verify --theorem thm34 --n 9 --random 20 --seed 5");
    auto b = run("verify --theorem thm34 --n 9 --random 20 --seed 5");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(parse(a)["seed"], 5);
}

TEST(Cli, OutDirAndMarkdown) {
    auto dir = scratch("outdir");
    auto r = run("validate --model discrete --n 4", "LIPWB_OUT_DIR='" + dir.string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "validate.json"));
    auto m = run("validate --model discrete --n 4 --format markdown", "LIPWB_OUT_DIR='" + dir.string() + "'");
    EXPECT_EQ(m.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "validate.md"));
    EXPECT_EQ(m.out.rfind("# lipwb validate", 0), 0u);
    std::filesystem::remove_all(dir);
}
