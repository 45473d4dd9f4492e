#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string lab() {
    const char* p = std::getenv("PEANO_LAB");
    return p ? p : "peano-lab";
}

Run run(const std::string& args) {
    const std::string cmd = lab() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("peano_lab_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST(Cli, CurveEvalIsExact) {
    const auto r = run("--depth 4 curve eval --kind peano --t 1/3");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["header"]["tool"], "peano-lab");
    EXPECT_EQ(j["header"]["command"], "curve eval");
    EXPECT_EQ(j["header"]["depth"], 4);
    EXPECT_EQ(j["result"]["point"], json::array({"1/3", "1"}));
}

TEST(Cli, CurveTraceIsCsv) {
    const auto r = run("--depth 4 curve trace --samples 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "t,x1,x2\n0,0,0\n0.25,0,0.5\n0.5,0.5,0.5\n0.75,1,0.5\n1,1,0\n");
}

TEST(Cli, WitnessesLieBeyondTheBound) {
    const auto r = run("surjection witnesses --target r2 --point 0.5,0.25 --count 3 --beyond 100 --tol 0.001");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["result"]["witnesses"].size(), 3u);
    ASSERT_EQ(j["result"]["residuals"].size(), 3u);
    for (const auto& w : j["result"]["witnesses"]) {
        EXPECT_LE(w["residual"].get<double>(), 0.001);
        EXPECT_GE(w["tile"]["j"].get<int>(), 100);
    }
}

TEST(Cli, OrderEstimateOfExp) {
    const auto r = run("--trunc 1000 order estimate --series exp");
    ASSERT_EQ(r.code, 0);
    const double v = json::parse(r.out)["result"]["estimate"].get<double>();
    EXPECT_GE(v, 1.0);
    EXPECT_LE(v, 1.25);
}

TEST(Cli, SeriesFileRoundTrip) {
    const auto f = scratch("series.json");
    ASSERT_EQ(run("--out " + f.string() + " order coeffs --series exp --n 100").code, 0);
    json doc;
    std::ifstream(f) >> doc;
    ASSERT_EQ(doc["result"]["coeffs"].size(), 101u);
    const auto from_report = json::parse(run("order estimate --series " + f.string()).out);
    write(f, json{{"coeffs", doc["result"]["coeffs"]}}.dump());
    const auto from_file = json::parse(run("order estimate --series " + f.string()).out);
    const auto direct = json::parse(run("order estimate --series exp --n 100").out);
    EXPECT_NEAR(from_file["result"]["estimate"].get<double>(), direct["result"]["estimate"].get<double>(), 1e-12);
    EXPECT_EQ(from_file["result"]["window"], direct["result"]["window"]);
    EXPECT_EQ(from_file["result"]["estimate"], from_report["result"]["estimate"]);
    std::filesystem::remove(f);
}

TEST(Cli, AlgebraScanPasses) {
    const auto r = run("algebra scan --poly z1 --orders 1.5 --radius 1.5 --eps 0.05");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_FALSE(j["result"].contains("wall_seconds"));
}

TEST(Cli, FamilyBuildThenRank) {
    const auto fam = scratch("family.json");
    ASSERT_EQ(run("--out " + fam.string() + " family build --seeds sqrt2,sqrt3,phi --prefix 16").code, 0);
    const auto r = run("family rank --family " + fam.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["result"]["rank"], 3);

    // A duplicated member drops the rank and the command reports failure.
    json doc;
    std::ifstream(fam) >> doc;
    doc["result"]["members"].push_back(doc["result"]["members"][0]);
    write(fam, doc.dump());
    const auto dup = run("family rank --family " + fam.string());
    EXPECT_EQ(dup.code, 1);
    EXPECT_FALSE(json::parse(dup.out)["pass"].get<bool>());
    std::filesystem::remove(fam);
}

TEST(Cli, SequenceCommands) {
    const auto phi = json::parse(run("seq phi --r 1 --t 1").out);
    EXPECT_NEAR(phi["result"]["value"].get<double>(), std::exp(1.0) - std::exp(-1.0), 1e-15);

    const auto x = scratch("x.json"), y = scratch("y.json"), z = scratch("z.json");
    write(x, R"({"entries": [1, 2, 3]})");
    write(y, R"({"entries": [1, 2]})");
    write(z, R"({"values": {"a": 1}})");
    const auto m = run("seq metric --x " + x.string() + " --y " + y.string());
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(json::parse(m.out)["result"]["value"], 0.09375);
    EXPECT_EQ(json::parse(m.out)["result"]["uncertainty"], 0.125);
    EXPECT_EQ(run("seq metric --kind uniform --x " + x.string() + " --y " + z.string()).code, 2);
    for (const auto& p : {x, y, z}) std::filesystem::remove(p);
}

TEST(Cli, VerifyCommands) {
    const auto cov = run("verify coverage --lo -1,-1 --hi 1,1 --eps 0.25");
    ASSERT_EQ(cov.code, 0);
    EXPECT_EQ(json::parse(cov.out)["result"]["net_size"], 81);
    EXPECT_EQ(run("verify unbounded --points 5").code, 0);
    EXPECT_EQ(run("verify suite --name adset").code, 0);
}

TEST(Cli, ExitCodesForBadInput) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("verify suite --name nope").code, 2);
    EXPECT_EQ(run("curve eval --kind moore").code, 2);
    EXPECT_EQ(run("verify coverage --eps 0").code, 2);
    EXPECT_EQ(run("family rank --family /nonexistent.json").code, 2);
    EXPECT_EQ(run("--depth 2 verify coverage --eps 0.01").code, 2);
}

TEST(Cli, RerunsAreByteIdentical) {
    for (const char* args : {"verify suite --name lemma", "verify unbounded --points 4", "algebra order --poly z1^2 --orders 0.7"}) {
        const auto a = run(args), b = run(args);
        EXPECT_FALSE(a.out.empty()) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
    EXPECT_NE(run("--seed 1 verify unbounded --points 4").out, run("--seed 2 verify unbounded --points 4").out);
}
