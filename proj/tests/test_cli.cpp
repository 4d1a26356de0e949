#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "coideal/json_io.hpp"
#include "coideal/verify.hpp"

using namespace coideal;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(COIDEAL_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Cli, ClassifyGoldenExample102) {
    auto r = run_cli("classify --n 3 --theta 5,1,0 --json");
    EXPECT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["T"]["1"], json({1, 2, 3, 5, 6}));
    EXPECT_EQ(j["R"]["1"], json({1, 3, 5}));
    EXPECT_EQ(j["R"]["2"], json({2}));
    EXPECT_EQ(j["T"]["2"], json({2}));
}

TEST(Cli, ByteIdenticalJson) {
    for (const std::string& args :
         {std::string("classify --n 3 --theta 5,1,0 --json"),
          std::string("phi --n 2 --S 1 --k 1 --m 3 --json"),
          std::string("enumerate --n 2 --json"), std::string("lattice --n 2 --json")}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        EXPECT_EQ(a.exit_code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, EnumerateRowCounts) {
    auto r = run_cli("enumerate --n 2 --json");
    EXPECT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j.size(), 8u);
    auto r1 = run_cli("enumerate --n 1 --json");
    EXPECT_EQ(json::parse(r1.out).size(), 2u);
}

TEST(Cli, PhiLeadingTermAndRegularityFlags) {
    auto r = run_cli("phi --n 2 --S 1 --k 1 --m 3 --json");
    EXPECT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    // leading PBW term u[1,3] with coefficient 1
    bool found = false;
    for (const auto& t : j["pbw"])
        if (t["monomial"] == json::array({{"u[1,3]", 1}})) {
            EXPECT_EQ(t["coeff"], "1");
            found = true;
        }
    EXPECT_TRUE(found);
    auto r2 = run_cli("phi --n 3 --S 1,2,3 --k 1 --m 5 --json");
    json j2 = json::parse(r2.out);
    EXPECT_TRUE(j2["black_regular"].get<bool>());
    EXPECT_FALSE(j2["white_regular"].get<bool>());
    auto r3 = run_cli("phi --n 2 --S \"\" --k 1 --m 1");
    EXPECT_EQ(r3.exit_code, 0);
    EXPECT_NE(r3.out.find("(1)(x1)"), std::string::npos);
}

TEST(Cli, CoproductComparison) {
    auto r = run_cli("coproduct --n 2 --k 1 --m 3 --json");
    EXPECT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(j["matches_formula"].get<bool>());
}

TEST(Cli, VerifySuites) {
    auto r = run_cli("verify --n 2 --suite serre");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("[PASS] serre"), std::string::npos);
    auto all = run_cli("verify --n 2");
    EXPECT_EQ(all.exit_code, 0);
    for (const auto& name : verify_suite_names())
        EXPECT_NE(all.out.find("[PASS] " + name), std::string::npos) << name;
}

TEST(Cli, ExitCodesOnBadInput) {
    EXPECT_EQ(run_cli("phi --n 2 --S 1 --k 0 --m 3").exit_code, 2);
    EXPECT_EQ(run_cli("classify --n 2 --theta 9,9").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("phi --n 2 --m 3").exit_code, 2);  // missing --k
    EXPECT_EQ(run_cli("enumerate --n 2 --mode cyclotomic --t 3").exit_code, 2);  // t <= 4
}

TEST(Cli, BicharacterFileLoading) {
    std::string path = "/tmp/coideal_test_bc.json";
    {
        std::ofstream out(path);
        out << R"({"n":2,"parameters":["q","t1"],
                   "matrix":[["q^2","q^-2*t1"],["t1^-1","q"]]})";
    }
    auto r = run_cli("phi --n 2 --bicharacter " + path + " --S \"\" --k 1 --m 2 --json");
    EXPECT_EQ(r.exit_code, 0);
    json j = json::parse(r.out);
    // u[1,2] = alpha (x2 x1) with the multiparameter alpha = (q^2-1) p_12
    bool found = false;
    for (const auto& t : j["value"]["terms"])
        if (t["word"] == json::array({2, 1})) {
            EXPECT_EQ(t["coeff"], "t1 - q^-2*t1");
            found = true;
        }
    EXPECT_TRUE(found);
    // invalid matrix rejected with exit code 2
    {
        std::ofstream out(path);
        out << R"({"n":2,"parameters":["q"],"matrix":[["q^2","1"],["1","q^2"]]})";
    }
    EXPECT_EQ(run_cli("phi --n 2 --bicharacter " + path + " --S \"\" --k 1 --m 2").exit_code, 2);
}

TEST(JsonIo, MonomialParser) {
    std::vector<std::string> names{"q", "t1"};
    ParamMonomial m = parse_monomial("q^-2*t1", names);
    EXPECT_EQ(m.e, (std::vector<int>{-2, 1}));
    EXPECT_EQ(parse_monomial("1", names), ParamMonomial(2));
    EXPECT_EQ(parse_monomial("q", names), ParamMonomial::q_power(2, 1));
    EXPECT_THROW(parse_monomial("z^2", names), std::invalid_argument);
}
