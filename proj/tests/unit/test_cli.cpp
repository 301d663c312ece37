#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bent3/families.hpp"
#include "bent3_cli.hpp"

using namespace bent3;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::path(BENT3_TEST_TMPDIR) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write_zero_table(const std::string& name, int n) {
        std::ofstream out(path(name));
        cli::write_table(out, TernaryFn::constant(FieldCtx::create(n), 0));
    }

    fs::path dir_;
};

}  // namespace

TEST(CliIo, Sha256KnownAnswer) {
    EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CliIo, TableRoundTrip) {
    auto f = FieldCtx::create(4, std::vector<int>{2, 1, 0, 0, 1});
    const auto g = make_binomial_general(f, 1, f->generator(), 1);
    std::stringstream ss;
    cli::write_table(ss, g);
    const std::string text = ss.str();
    EXPECT_EQ(text.substr(0, text.find('\n', 7) + 1), "TBF v1\nn=4 modulus=2,1,0,0,1\n");
    const auto back = cli::read_table(ss);
    EXPECT_TRUE(std::ranges::equal(back.table(), g.table()));
    EXPECT_EQ(back.field().modulus_string(), "2,1,0,0,1");
    EXPECT_EQ(cli::table_sha256(back), cli::table_sha256(g));
}

TEST(CliIo, MalformedTables) {
    std::istringstream no_header("n=1 modulus=0,1\n012\n");
    EXPECT_THROW(cli::read_table(no_header), std::invalid_argument);
    std::istringstream short_body("TBF v1\nn=2 modulus=1,0,1\n0120\n");
    EXPECT_THROW(cli::read_table(short_body), std::invalid_argument);
    std::istringstream bad_char("TBF v1\nn=1 modulus=0,1\n01x\n");
    EXPECT_THROW(cli::read_table(bad_char), std::invalid_argument);
}

TEST_F(Cli, ConstructAndVerifyRoundTrip) {
    const auto r = run({"construct", "--family", "binomial-general", "--k", "1", "--a1", "g^1", "--sign", "+",
                        "--out", path("t4.tbf")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string cert = slurp(path("t4.tbf.cert"));
    EXPECT_NE(cert.find("bent=true\nregularity=regular\ndegree=4\n"), std::string::npos);
    EXPECT_NE(cert.find("counterexample=none"), std::string::npos);

    const auto v = run({"verify", "--table", path("t4.tbf"), "--cert", path("t4.tbf.cert")});
    EXPECT_EQ(v.code, 0) << v.err;
    std::istringstream a(cert), b(v.out);
    EXPECT_EQ(cli::parse_certificate(a), cli::parse_certificate(b));
}

TEST_F(Cli, VerifyDetectsForeignCertificate) {
    ASSERT_EQ(run({"construct", "--family", "baseline", "--k", "1", "--out", path("b.tbf")}).code, 0);
    ASSERT_EQ(run({"construct", "--family", "binomial-general", "--k", "1", "--out", path("t.tbf")}).code, 0);
    const auto r = run({"verify", "--table", path("t.tbf"), "--cert", path("b.tbf.cert")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("does not match"), std::string::npos);
}

TEST_F(Cli, NotBentExitsOneWithCounterexample) {
    write_zero_table("zero.tbf", 2);
    const auto r = run({"verify", "--table", path("zero.tbf")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("bent=false"), std::string::npos);
    EXPECT_NE(r.out.find("counterexample=0"), std::string::npos);
    EXPECT_NE(r.out.find("regularity=none"), std::string::npos);
}

TEST_F(Cli, ParameterErrorsExitTwo) {
    const auto r = run({"construct", "--family", "trinomial", "--k", "4", "--out", path("x.tbf")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not divisible by four"), std::string::npos);
    EXPECT_FALSE(fs::exists(path("x.tbf")));
    EXPECT_EQ(run({"construct", "--family", "nope", "--k", "1"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "binomial-general", "--k", "1", "--a1", "g^2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"sweep", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"verify", "--table", path("missing.tbf")}).code, 2);
}

TEST_F(Cli, BaselineConstructs) {
    const auto r = run({"construct", "--family", "baseline", "--k", "1", "--out", path("base.tbf")});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, SpectrumExport) {
    ASSERT_EQ(run({"construct", "--family", "T8", "--k", "1", "--out", path("t8.tbf")}).code, 0);
    for (bool naive : {false, true}) {
        std::vector<std::string> args{"spectrum", "--table", path("t8.tbf")};
        if (naive) args.push_back("--naive");
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        std::istringstream in(r.out);
        std::string line;
        int lines = 0;
        while (std::getline(in, line)) {
            ++lines;
            EXPECT_EQ(line.substr(line.rfind(' ') + 1), "81");
        }
        EXPECT_EQ(lines, 81);
    }
}

TEST_F(Cli, MmCheckLemmaOne) {
    ASSERT_EQ(run({"construct", "--family", "binomial-general", "--k", "1", "--a1", "g^3", "--sign", "-",
                   "--out", path("t.tbf")})
                  .code,
              0);
    const auto r = run({"mm-check", "--table", path("t.tbf"), "--V", "lemma1", "--a1", "g^3", "--sign", "-",
                        "--out", path("t.log")});
    EXPECT_EQ(r.code, 0) << r.err;
    const std::string log = slurp(path("t.log"));
    EXPECT_NE(log.find("CHECK pi-bijective PASS"), std::string::npos);
    EXPECT_NE(log.find("NOTE result PASS"), std::string::npos);
    EXPECT_EQ(log.find(" FAIL"), std::string::npos);

    write_zero_table("zero.tbf", 4);
    const auto z = run({"mm-check", "--table", path("zero.tbf"), "--V", "lemma1"});
    EXPECT_EQ(z.code, 1);
    EXPECT_NE(z.out.find("CHECK d1-balanced FAIL c="), std::string::npos);
}

TEST_F(Cli, MmCheckLemmaTwo) {
    ASSERT_EQ(run({"construct", "--family", "trinomial", "--k", "3", "--sign", "+", "--out", path("t.tbf")}).code, 0);
    const auto r = run({"mm-check", "--table", path("t.tbf"), "--V", "lemma2", "--sign", "+"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("prop3"), std::string::npos);
    EXPECT_NE(r.out.find("CHECK pi-permutes-W PASS"), std::string::npos);
}

TEST_F(Cli, MmCheckBasisFiles) {
    ASSERT_EQ(run({"construct", "--family", "binomial-general", "--k", "1", "--out", path("t.tbf")}).code, 0);
    {
        std::ofstream v(path("v.txt"));
        v << "g^1\n";
    }
    {
        std::ofstream w(path("w.txt"));
        w << "g^2\ng^3\n";
    }
    const auto r = run({"mm-check", "--table", path("t.tbf"), "--V", "basis-file", "--basis", path("v.txt"),
                        "--W", path("w.txt")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(run({"mm-check", "--table", path("t.tbf"), "--V", "basis-file"}).code, 2);
    EXPECT_EQ(run({"mm-check", "--table", path("t.tbf"), "--V", "lemma9"}).code, 2);
}

TEST_F(Cli, Expand) {
    const auto r = run({"expand", "--family", "T3", "--k", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("Tr_k(x0^4 + x0^3*x2 - x0^3*x3", 0), 0u) << r.out;

    const auto v = run({"expand", "--family", "exceptional-T7", "--k", "1", "--validate"});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_NE(v.out.find("CHECK pointwise-validation PASS"), std::string::npos);
    EXPECT_EQ(run({"expand", "--family", "trinomial", "--k", "3"}).code, 2);
}

TEST_F(Cli, SweepDegreeFour) {
    const auto a = run({"sweep", "--n", "4", "--out", path("a.txt")});
    const auto b = run({"sweep", "--n", "4", "--out", path("b.txt")});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    const std::string text = slurp(path("a.txt"));
    EXPECT_EQ(text, slurp(path("b.txt")));
    EXPECT_NE(text.find("summary n=4 rows=80 bent=80 regular=80 degree4=80"), std::string::npos);
    std::istringstream in(text);
    std::string line;
    int rows = 0;
    while (std::getline(in, line))
        if (line.rfind("a1=", 0) == 0) {
            ++rows;
            EXPECT_NE(line.find("degree=4"), std::string::npos);
        }
    EXPECT_EQ(rows, 80);
}

TEST_F(Cli, SweepSamplingIsSeeded) {
    const auto a = run({"sweep", "--n", "8", "--samples", "3", "--seed", "7"});
    const auto b = run({"sweep", "--n", "8", "--samples", "3", "--seed", "7"});
    const auto c = run({"sweep", "--n", "8", "--samples", "3", "--seed", "8"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_NE(a.out.find("rows=6 bent=6"), std::string::npos);
}
