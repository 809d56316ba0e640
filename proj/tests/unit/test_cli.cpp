#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using mssred::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    fs::path dir;
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("mssred_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
               ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
        write("f.o13", "p o13 2 1\n1 2 2 0\n");
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    nlohmann::json load(const std::string& name) const {
        std::ifstream in(path(name));
        return nlohmann::json::parse(in);
    }
};

}  // namespace

TEST_F(CliTest, ReduceEncodeVerifyExtract) {
    auto r = cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--out", path("inst.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto inst = load("inst.json");
    EXPECT_EQ(inst["elements"].size(), 12u);
    EXPECT_TRUE(inst.contains("artifacts"));

    ASSERT_EQ(cli({"encode", "--instance", path("inst.json"), "--assignment", "10", "--out", path("s.json")}).code, 0);
    auto v = cli({"verify", "--instance", path("inst.json"), "--subset", path("s.json")});
    EXPECT_EQ(v.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(v.out)["meets_targets"].get<bool>());

    auto e = cli({"extract", "--instance", path("inst.json"), "--subset", path("s.json")});
    EXPECT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("assignment"), std::string::npos);

    auto s = load("s.json");
    s["indices"].erase(s["indices"].begin());
    write("bad.json", s.dump());
    EXPECT_EQ(cli({"verify", "--instance", path("inst.json"), "--subset", path("bad.json")}).code, 1);
    EXPECT_EQ(cli({"extract", "--instance", path("inst.json"), "--subset", path("bad.json")}).code, 1);
    EXPECT_EQ(cli({"encode", "--instance", path("inst.json"), "--assignment", "11"}).code, 2);
}

TEST_F(CliTest, SolveAndNewtonChain) {
    ASSERT_EQ(cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--out", path("inst.json")}).code, 0);
    auto s = cli({"solve", "--instance", path("inst.json")});
    EXPECT_EQ(s.code, 0) << s.err;
    ASSERT_EQ(cli({"to-symss", "--instance", path("inst.json"), "--out", path("sym.json")}).code, 0);
    EXPECT_EQ(cli({"solve", "--instance", path("sym.json")}).code, 0);
    ASSERT_EQ(cli({"to-bdd", "--instance", path("sym.json"), "--out", path("bdd.json")}).code, 0);
    auto bdd = load("bdd.json");
    EXPECT_EQ(bdd["points"].size(), 13u);
    EXPECT_EQ(cli({"solve", "--instance", path("inst.json"), "--budget", "10"}).code, 2);
}

TEST_F(CliTest, Reconstruct) {
    write("sym.json", R"({"type":"symss","field":{"kind":"rational"},"elements":["1","2","3"],"k":"2","targets":["3"]})");
    ASSERT_EQ(cli({"to-bdd", "--instance", path("sym.json"), "--out", path("bdd.json")}).code, 0);
    auto r = cli({"reconstruct", "--instance", path("bdd.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("agreements"), std::string::npos);
}

TEST_F(CliTest, FiniteFieldReductions) {
    auto fp = cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--field", "fp", "--out", path("p.json")});
    ASSERT_EQ(fp.code, 0) << fp.err;
    EXPECT_EQ(load("p.json")["field"]["kind"], "prime");
    ASSERT_EQ(cli({"encode", "--instance", path("p.json"), "--assignment", "10", "--out", path("s.json")}).code, 0);
    EXPECT_EQ(cli({"verify", "--instance", path("p.json"), "--subset", path("s.json")}).code, 0);

    auto fq = cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--field", "fq", "--out", path("q.json")});
    ASSERT_EQ(fq.code, 0) << fq.err;
    EXPECT_EQ(cli({"verify", "--instance", path("q.json"), "--subset", path("s.json")}).code, 0);
    EXPECT_EQ(cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--field", "fq", "--ell", "1"}).code, 2);
    EXPECT_EQ(cli({"reduce", "--sat", path("f.o13"), "--d", "2", "--field", "fp", "--p", "7"}).code, 2);
}

TEST_F(CliTest, CheckProps) {
    auto r = cli({"check-props", "--sat", path("f.o13"), "--d", "2", "--probes", "100"});
    EXPECT_NE(r.out.find("property_report"), std::string::npos) << r.err;
    EXPECT_EQ(cli({"check-props"}).code, 2);
}

TEST_F(CliTest, PteModes) {
    auto p = cli({"pte", "--mode", "prouhet", "--k", "2"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(p.out, "X={0,3,5,6}\nY={1,2,4,7}\n");
    auto j = cli({"pte", "--mode", "prouhet", "--k", "1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["X"], nlohmann::json::array({"0", "3"}));
    auto in = cli({"pte", "--mode", "inhomogeneous", "--d", "3", "--a", "3", "--b", "5", "--n-surrogate", "1"});
    EXPECT_EQ(in.code, 0) << in.err;
    EXPECT_NE(in.out.find("a=3"), std::string::npos);
    auto s = cli({"pte", "--mode", "sample", "--q", "101", "--d", "2", "--s", "24", "--trials", "1000000", "--seed", "1"});
    EXPECT_EQ(s.code, 0) << s.err;
    auto m = cli({"pte", "--mode", "sample", "--q", "25", "--d", "2", "--mirror", "--r", "0", "0"});
    EXPECT_EQ(m.code, 0) << m.err;
    EXPECT_EQ(cli({"pte", "--mode", "sample", "--q", "3", "--d", "4"}).code, 2);
    EXPECT_EQ(cli({"pte", "--mode", "sample", "--q", "6", "--d", "1"}).code, 2);
    EXPECT_EQ(cli({"pte", "--mode", "bogus"}).code, 2);
}

TEST_F(CliTest, UsageAndFormatErrors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"reduce", "--help"}).code, 0);
    EXPECT_EQ(cli({"reduce", "--sat", path("missing.o13"), "--d", "2"}).code, 2);
    write("bad.o13", "p o13 1 1\n1 -1 -1 0\n");
    auto bad = cli({"reduce", "--sat", path("bad.o13"), "--d", "2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);
    write("junk.json", "{oops");
    EXPECT_EQ(cli({"verify", "--instance", path("junk.json"), "--subset", path("junk.json")}).code, 2);
    EXPECT_EQ(cli({"--jobs", "0", "pte", "--mode", "prouhet", "--k", "1"}).code, 2);
}

TEST_F(CliTest, SelftestSubset) {
    auto r = cli({"selftest", "A2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("A2 PASS"), std::string::npos);
    EXPECT_EQ(cli({"selftest", "A99"}).code, 2);
}
