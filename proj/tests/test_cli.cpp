#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypermat_cli.hpp"

using namespace hypermat;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    const auto dir = std::filesystem::path(HYPERMAT_TEST_TMPDIR) / "cli";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string write(const std::string& name, const std::string& text) {
    const std::string p = tmp(name);
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, PermmatDeltaAndDense) {
    const CliRun r = run({"permmat", "--dims", "2,2,2", "--sigma", "2,3,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d8[1,3,5,7,2,4,6,8]\n");
    EXPECT_EQ(run({"permmat", "--dims", "2,2,2", "--sigma", "2,3,1"}).out, r.out);

    const CliRun d = run({"permmat", "--dims", "2", "--sigma", "1", "--dense"});
    EXPECT_EQ(d.out, "1 0\n0 1\n");

    const CliRun deg = run({"permmat", "--dims", "1,2", "--sigma", "2,1"});
    EXPECT_EQ(deg.code, 0);
    EXPECT_EQ(deg.out, "d2[1,2]\n");
    EXPECT_NE(deg.err.find("warning"), std::string::npos);
}

TEST(Cli, UsageAndDataErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"permmat", "--dims", "2,2"}).code, 1);
    EXPECT_EQ(run({"stp", "--op", "xx", "a", "b"}).code, 1);
    EXPECT_EQ(run({"permmat", "--dims", "2,2", "--sigma", "1,1"}).code, 2);
    EXPECT_EQ(run({"permmat", "--dims", "2,2", "--sigma", "1,2,3"}).code, 2);
    const CliRun missing = run({"transpose", "--sigma", "1", tmp("nope.hm"), tmp("out.hm")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("nope.hm"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Transpose) {
    const std::string in = write("t_in.hm", R"({"shape":[2,3],"data":[1,2,3,4,5,6]})");
    const std::string out = tmp("t_out.hm");
    ASSERT_EQ(run({"transpose", "--sigma", "2,1", in, out}).code, 0);
    EXPECT_EQ(slurp(out), "{\"shape\":[3,2],\"data\":[1,4,2,5,3,6],\"scalar_kind\":\"int\"}\n");
}

TEST(Cli, MatrixExpression) {
    const std::string in = write("m_in.hm", R"({"shape":[2,3],"data":[1,2,3,4,5,6]})");
    const CliRun r = run({"mexpr", "--rows", "2", in});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"rows\":[2],\"cols\":[1],\"dims\":[2,3],\"matrix\":[[1,4],[2,5],[3,6]],\"scalar_kind\":\"int\"}\n");
    const CliRun v = run({"mexpr", "--rows", "", in});
    EXPECT_EQ(v.out, "{\"rows\":[],\"cols\":[1,2],\"dims\":[2,3],\"matrix\":[[1,2,3,4,5,6]],\"scalar_kind\":\"int\"}\n");
    EXPECT_EQ(run({"mexpr", "--rows", "1,x", in}).code, 2);
    EXPECT_EQ(run({"mexpr", "--rows", "3", in}).code, 2);
}

TEST(Cli, ContractMethodsWriteIdenticalFiles) {
    const std::string a = write("c_a.hm", R"({"shape":[2,3,4],"data":[)" + [] {
        std::string s;
        for (int k = 0; k < 24; ++k) s += (k ? "," : "") + std::to_string(k * 7 % 11 - 5);
        return s;
    }() + "]}");
    const std::string b = write("c_b.hm", R"({"shape":[4,5,3],"data":[)" + [] {
        std::string s;
        for (int k = 0; k < 60; ++k) s += (k ? "," : "") + std::to_string(k * 5 % 13 - 6);
        return s;
    }() + "]}");
    const std::string o1 = tmp("c_brute.hm"), o2 = tmp("c_expr.hm");
    ASSERT_EQ(run({"contract", "--a", a, "--b", b, "--a-axes", "2,3", "--b-axes", "3,1", "--method", "brute", o1}).code, 0);
    ASSERT_EQ(run({"contract", "--a", a, "--b", b, "--a-axes", "2,3", "--b-axes", "3,1", "--method", "expr", o2}).code, 0);
    EXPECT_EQ(slurp(o1), slurp(o2));
    EXPECT_NE(slurp(o1).find("\"shape\":[2,5]"), std::string::npos);
    EXPECT_EQ(run({"contract", "--a", a, "--b", b, "--a-axes", "1", "--b-axes", "1", o1}).code, 2);
}

TEST(Cli, StpOperations) {
    const std::string x = write("x.hm", R"({"shape":[2],"data":[1,2]})");
    const std::string y = write("y.hm", R"({"shape":[3],"data":[1,1,1]})");
    const CliRun vv = run({"stp", "--op", "vv", x, y});
    EXPECT_EQ(vv.code, 0);
    EXPECT_EQ(vv.out, "9\n");

    const std::string xf = write("xf.hm", R"({"shape":[2],"data":[0.5,2]})");
    EXPECT_EQ(run({"stp", "--op", "vv", xf, y}).out, "7.5\n");

    const std::string a = write("a.hm", R"({"shape":[2,2],"data":[1,1,1,-1]})");
    const std::string v = write("v.hm", R"({"shape":[4],"data":[1,2,3,4]})");
    EXPECT_EQ(run({"stp", "--op", "mv", a, v}).out, "{\"shape\":[4],\"data\":[4,6,-2,-2],\"scalar_kind\":\"int\"}\n");
    const std::string row = write("row.hm", R"({"shape":[1,2],"data":[1,2]})");
    const std::string col = write("col.hm", R"({"shape":[4,1],"data":[1,0,0,0]})");
    EXPECT_EQ(run({"stp", "--op", "mm", row, col}).out, "{\"shape\":[2,1],\"data\":[1,0],\"scalar_kind\":\"int\"}\n");

    const std::string cube = write("cube.hm", R"({"shape":[2,2,2],"data":[1,2,3,4,5,6,7,8]})");
    EXPECT_EQ(run({"stp", "--op", "mm", cube, a}).code, 2);
}

TEST(Cli, YangBaxter) {
    const std::string zero = write("r0.hm", R"({"shape":[2,2,2,2],"data":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})");
    const CliRun res = run({"ybe", "--r", zero});
    EXPECT_EQ(res.code, 0);
    EXPECT_EQ(res.out, "0.0\n");
    std::string data;
    for (int k = 0; k < 16; ++k) data += (k ? "," : "") + std::to_string(k % 3 - 1);
    const std::string r = write("r.hm", R"({"shape":[2,2,2,2],"data":[)" + data + "]}");
    for (const char* side : {"lhs", "rhs"}) {
        const CliRun brute = run({"ybe", "--r", r, "--side", side, "--method", "brute"});
        const CliRun matrix = run({"ybe", "--r", r, "--side", side, "--method", "matrix"});
        EXPECT_EQ(brute.code, 0);
        EXPECT_EQ(brute.out, matrix.out);
    }
    const std::string bad = write("rbad.hm", R"({"shape":[2,2],"data":[0,0,0,0]})");
    EXPECT_EQ(run({"ybe", "--r", bad}).code, 2);
}

TEST(Cli, VerifyAppendix) {
    const CliRun r = run({"verify-appendix"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("summary: 31 pass, 35 expected-mismatch, 0 mismatch, 0 stale"), std::string::npos);
    EXPECT_NE(r.out.find("PASS d=3 n=2 #4"), std::string::npos);
    EXPECT_EQ(r.out.find("@@"), std::string::npos);
    EXPECT_NE(run({"verify-appendix", "--verbose"}).out.find("@@"), std::string::npos);

    const std::string empty = write("errata_empty.json", R"({"version":1,"errata":[]})");
    const CliRun strict = run({"verify-appendix", "--errata", empty});
    EXPECT_EQ(strict.code, 3);
    EXPECT_NE(strict.out.find("MISMATCH"), std::string::npos);
    EXPECT_NE(strict.out.find("--- published"), std::string::npos);

    const std::string stale = write("errata_stale.json",
                                    R"({"version":1,"errata":[{"d":3,"n":2,"label":1,"kind":"garbled"}]})");
    const CliRun st = run({"verify-appendix", "--errata", stale});
    EXPECT_EQ(st.code, 3);
    EXPECT_NE(st.out.find("STALE"), std::string::npos);

    const std::string broken = write("errata_broken.json", R"({"errata":[{"d":3}]})");
    EXPECT_EQ(run({"verify-appendix", "--errata", broken}).code, 2);
}
