#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell with stderr folded into stdout.
Run run(const std::string& args) {
    const std::string cmd = std::string("\"") + MZVFRAC_CLI_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++c;
    return c;
}

TEST(CliShuffle, BothMethodsMatch) {
    const auto r = run("shuffle '1;u' '1,1;v1,v2' --method both");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "MATCH"));
    EXPECT_FALSE(contains(r.out, "MISMATCH"));
    EXPECT_TRUE(contains(r.out, "<1,1,1;u,v1,v2> + <1,1,1;v1,u,v2> + <1,1,1;v1,v2,u>"));
}

TEST(CliShuffle, SingleMethods) {
    for (const char* method : {"recursive", "closed"}) {
        const auto r = run(std::string("shuffle '2;m' '2;n' --method ") + method);
        EXPECT_EQ(r.exit_code, 0) << r.out;
        EXPECT_TRUE(contains(r.out, "<2,2;m,n> + 2*<3,1;m,n> + <2,2;n,m> + 2*<3,1;n,m>")) << r.out;
    }
}

TEST(CliShuffle, Latex) {
    const auto r = run("shuffle '2;m' '2;n' --format latex");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "\\frac{2}{(m+n)^{3}n}")) << r.out;
    EXPECT_EQ(count(r.out, "\\frac"), 4u);
    const auto three = run("shuffle '1;u1' '1,1;v1,v2' --format latex");
    EXPECT_EQ(count(three.out, "\\frac"), 3u) << three.out;
}

TEST(CliShuffle, JsonRoundTrips) {
    const auto r = run("shuffle '2;m' '2;n' --format json");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("match").get<bool>());
    EXPECT_EQ(j.at("closed"), j.at("recursive"));
    EXPECT_EQ(j.at("closed").at("terms").size(), 4u);
}

TEST(CliShuffle, SharedVariableIsUsageError) {
    const auto r = run("shuffle '1;u' '1;u'");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_TRUE(contains(r.out, "VariableCollision")) << r.out;
}

TEST(CliVerify, Examples) {
    EXPECT_EQ(run("verify '1,2;u1,u2' '2;v'").exit_code, 0);
    const auto r = run("verify '1;u' '1;v' --samples 1 --seed 7");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.out, "Verified"));
}

TEST(CliVerify, MalformedLiteral) {
    const auto r = run("verify '0;u' '1;v'");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_TRUE(contains(r.out, "0;u\n  ^")) << r.out;
}

TEST(CliEuler, TwoTwo) {
    const auto r = run("euler 2 2");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "2*zeta(2,2) + 4*zeta(3,1)")) << r.out;
    EXPECT_TRUE(contains(r.out, ": pass"));
}

TEST(CliEuler, DivergentSkipsNumerics) {
    const auto r = run("euler 1 2");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "numeric check skipped: divergent"));
}

TEST(CliEuler, TwoThree) {
    const auto r = run("euler 2 3");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "zeta(2,3) + 3*zeta(3,2) + 6*zeta(4,1)")) << r.out;
    EXPECT_TRUE(contains(r.out, ": pass"));
}

TEST(CliEuler, NonIntegerIsUsageError) {
    EXPECT_EQ(run("euler two 2").exit_code, 2);
    EXPECT_EQ(run("euler 0 2").exit_code, 2);
}

TEST(CliIntegral, Examples) {
    auto r = run("integral-check '2;3'");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.out, "1/9 = 1/9")) << r.out;
    r = run("integral-check '1,1;1,2'");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(contains(r.out, "1/6 = 1/6")) << r.out;
    EXPECT_EQ(run("integral-check '1;0'").exit_code, 2);
}

TEST(CliSelftest, SingleSuite) {
    const auto r = run("selftest --suite closed-form");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(count(r.out, "\n"), 1u) << r.out;
    EXPECT_TRUE(contains(r.out, "PASS closed-form"));
}

TEST(CliSelftest, JsonLines) {
    const auto r = run("selftest --suite counts --json");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("name"), "counts");
    EXPECT_EQ(j.at("status"), "pass");
    EXPECT_TRUE(j.contains("duration_ms"));
    EXPECT_EQ(run("selftest --suite nosuch").exit_code, 2);
}

TEST(Cli, UnknownSubcommand) { EXPECT_EQ(run("frobnicate").exit_code, 2); }

}  // namespace
