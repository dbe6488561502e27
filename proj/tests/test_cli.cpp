#include "cli.hpp"
#include "report_json.hpp"
#include "spec_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace koszulkit;
using namespace koszulkit::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "koszulkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST(Cli, KoszulExample) {
    const Result r = call({"koszul", "--family", "FI", "--interval", "0", "4", "--depth", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_TRUE(j["passed"].get<bool>());
    ASSERT_EQ(j["certificates"].size(), 5u);
    EXPECT_EQ(j["certificates"][0]["depth"], 4);
    EXPECT_EQ(j["certificates"][3]["depth"], 1);
    // (x+n)!/n! at x = 1, n = 2
    EXPECT_EQ(j["certificates"][1]["steps"][2]["top"][0]["dim"], 3);
}

TEST(Cli, DecomposeExample) {
    const Result r = call({"decompose", "--family", "FI_gamma", "--gamma", "cyclic:2", "--x", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = r.json()["decompositions"][0];
    EXPECT_EQ(d["m"], 1);
    EXPECT_EQ(d["n"], 6);
    EXPECT_TRUE(d["bijective"].get<bool>());
    for (const auto& t : d["theta"]) EXPECT_TRUE(t["dimension_identity"]["holds"].get<bool>());
}

TEST(Cli, TwistCheckExample) {
    EXPECT_EQ(call({"twist-check", "--family", "FI_d", "--d", "2", "--interval", "0", "3"}).code, 0);
}

TEST(Cli, FailedCheckCarriesAWitness) {
    const Result r = call({"twist-check", "--family", "FI", "--interval", "0", "3", "--no-signs"});
    ASSERT_EQ(r.code, 1);
    const auto w = r.json()["witness"];
    EXPECT_EQ(w["fiber"], nlohmann::json::array({0, 2}));
    ASSERT_FALSE(w["vector"].empty());
    for (const auto& e : w["vector"]) EXPECT_NE(e.get<std::string>().find('/'), std::string::npos);
}

TEST(Cli, OtherSubcommandsPass) {
    for (const char* cmd : {"validate", "betti", "yoneda", "quadratic", "dual", "opposite", "essential-check"}) {
        const Result r = call({cmd, "--family", "FI_gamma", "--gamma", "cyclic:2", "--interval", "0", "3"});
        EXPECT_EQ(r.code, 0) << cmd << ": " << r.err;
        EXPECT_EQ(r.json()["command"], cmd);
    }
}

TEST(Cli, EssentialCheckAgainstAnotherFamily) {
    const Result r = call({"essential-check", "--family", "FI_prime_gamma", "--gamma", "cyclic:2", "--interval", "0", "3",
                           "--against", "FI_gamma"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["against"]["identical"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args = {"dual", "--family", "OI_d", "--d", "2", "--interval", "0", "3"};
    EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, WritesToOutPath) {
    const auto p = std::filesystem::temp_directory_path() / "koszulkit_cli_out.json";
    std::filesystem::remove(p);
    ASSERT_EQ(call({"quadratic", "--family", "FI", "--interval", "0", "3", "--out", p.string()}).code, 0);
    std::ifstream in(p);
    const auto j = nlohmann::json::parse(in);
    EXPECT_TRUE(j["quadratic"].get<bool>());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"koszul", "--family", "FI", "--no-such-flag"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"koszul"}).code, 2);
    EXPECT_EQ(call({"koszul", "--family", "NOPE"}).code, 2);
    EXPECT_EQ(call({"koszul", "--family", "FI_gamma"}).code, 2);
    EXPECT_EQ(call({"koszul", "--family", "FI", "--interval", "2", "2"}).code, 2);
    EXPECT_EQ(call({"koszul", "--family", "FI", "--interval", "0", "3", "--x", "2", "--depth", "2"}).code, 2);
    EXPECT_EQ(call({"koszul", "--family", "FI", "--gamma", "dihedral:3"}).code, 2);
    EXPECT_EQ(call({"twist-check", "--family", "VI", "--q", "2", "--interval", "0", "2"}).code, 2);
    const Result r = call({"koszul", "--family", "FI", "--no-such-flag"});
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, SpecFile) {
    const auto p = temp_file("koszulkit_spec.json", R"({"family": "FI_gamma", "gamma": {"table": [[0,1],[1,0]]}, "interval": [0, 3]})");
    const Result r = call({"koszul", "--spec", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["category"]["interval"], nlohmann::json::array({0, 3}));
    const auto bad = temp_file("koszulkit_bad.json", R"({"family": "FI", "colour": 3})");
    EXPECT_EQ(call({"koszul", "--spec", bad.string()}).code, 2);
    const auto broken = temp_file("koszulkit_broken.json", "{");
    EXPECT_EQ(call({"koszul", "--spec", broken.string()}).code, 2);
}

TEST(Cli, MaxDimEnvironmentCap) {
    ::setenv("KOSZULKIT_MAX_DIM", "10", 1);
    const Result capped = call({"koszul", "--family", "FI", "--interval", "0", "4"});
    ::setenv("KOSZULKIT_MAX_DIM", "junk", 1);
    const Result junk = call({"koszul", "--family", "FI", "--interval", "0", "2"});
    ::unsetenv("KOSZULKIT_MAX_DIM");
    EXPECT_EQ(capped.code, 2);
    EXPECT_NE(capped.err.find("KOSZULKIT_MAX_DIM"), std::string::npos);
    EXPECT_EQ(junk.code, 2);
    EXPECT_EQ(max_dim_from_env(), 5000u);
}

TEST(SpecIo, ParsesGammaForms) {
    EXPECT_EQ(parse_gamma("cyclic:4").order(), 4);
    EXPECT_EQ(parse_gamma("table:0,1;1,0"), FiniteGroup::cyclic(2));
    EXPECT_THROW(parse_gamma("cyclic:0"), ConfigError);
    EXPECT_THROW(parse_gamma("table:0,1;0,1"), ConfigError);
    EXPECT_THROW(parse_gamma("cyclic"), ConfigError);
}

TEST(SpecIo, JsonSchema) {
    const auto s = spec_from_json(nlohmann::json::parse(R"({"family": "VI", "q": 3, "interval": [0, 2]})"));
    EXPECT_EQ(s.spec.family, "VI");
    EXPECT_EQ(*s.spec.q, 3);
    EXPECT_EQ(s.interval->hi, 2);
    EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"family": 3})")), ConfigError);
    EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"family": "FI", "gamma": {"cyclic": 2, "table": []}})")), ConfigError);
    EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"family": "FI", "interval": [0]})")), ConfigError);
}

TEST(ReportJson, WitnessFields) {
    const Json w = witness_json("top at (3,1) vector [1/2,0/1,-3/1]");
    EXPECT_EQ(w["fiber"], Json::array({3, 1}));
    EXPECT_EQ(w["vector"], Json::array({"1/2", "0/1", "-3/1"}));
    const Json plain = witness_json("no coordinates here");
    EXPECT_FALSE(plain.contains("fiber"));
    EXPECT_FALSE(plain.contains("vector"));
}
