#include "sigcheck/cli.h"
#include "sigcheck/script.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sigcheck;
using namespace sigcheck::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class F>
Run run(F&& f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Verify, DefaultVerifies) {
    const auto r = run([](auto& o, auto& e) { return cmd_verify({}, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("result VERIFIED"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(Verify, OffThresholdRefused) {
    VerifyOptions opt;
    opt.p = 1.410;
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    EXPECT_EQ(r.code, kExitRefused);
    EXPECT_NE(r.out.find("NOT VERIFIED"), std::string::npos);
}

TEST(Verify, BadThresholdIsUsageError) {
    VerifyOptions opt;
    opt.p = 1.0;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); }).code, kExitUsage);
}

TEST(Verify, MissingScriptIsIoError) {
    VerifyOptions opt;
    opt.script = "/nonexistent/script.json";
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    EXPECT_EQ(r.code, kExitIo);
    EXPECT_NE(r.err.find("/nonexistent/script.json"), std::string::npos);
}

TEST(Verify, DumpedScriptRoundTrips) {
    VerifyOptions opt;
    opt.dump_script = true;
    const auto dumped = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    ASSERT_EQ(dumped.code, kExitOk);
    VerifyOptions again;
    again.script = write_temp("dumped_script.json", dumped.out);
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(again, o, e); });
    const auto builtin = run([](auto& o, auto& e) { return cmd_verify({}, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, builtin.out);
    std::remove(again.script.c_str());
}

TEST(Verify, ScriptWithoutLastCaseLeavesGap) {
    ProofScript s = builtin_paper_script();
    s.claims.erase(std::remove_if(s.claims.begin(), s.claims.end(),
                                  [](const ClaimSpec& c) { return c.id == "lemma-8.3"; }),
                   s.claims.end());
    VerifyOptions opt;
    opt.script = write_temp("gap_script.json", to_json(s).dump());
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    EXPECT_EQ(r.code, kExitRefused);
    EXPECT_NE(r.out.find("uncovered (10,10)"), std::string::npos) << r.out;
    std::remove(opt.script.c_str());
}

TEST(Verify, ClaimErrorsExitTwo) {
    ProofScript s = builtin_paper_script();
    for (auto& c : s.claims) {
        if (c.id == "lemma-6.5") c.steps[0].derives->count = 10;
    }
    VerifyOptions opt;
    opt.script = write_temp("bad_chain.json", to_json(s).dump());
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("lemma-6.5"), std::string::npos) << r.err;
    std::remove(opt.script.c_str());
}

TEST(Verify, StructuralErrorExitTwo) {
    VerifyOptions opt;
    opt.script = write_temp("not_a_script.json", R"({"format":"x","version":1,"claims":[]})");
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); }).code, kExitUsage);
    std::remove(opt.script.c_str());
}

TEST(Verify, JsonFormat) {
    VerifyOptions opt;
    opt.format = Format::Json;
    const auto r = run([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["verified"].get<bool>());
}

TEST(Sweep, CsvRowsAndErrors) {
    SweepOptions opt;
    opt.threads = 2;
    const auto r = run([&](auto& o, auto& e) { return cmd_sweep(opt, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
    opt.from = 1.5;
    opt.to = 1.4;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_sweep(opt, o, e); }).code, kExitUsage);
}

TEST(Sig, StdinListingAndSummary) {
    SigOptions opt;
    std::istringstream in("0 0\n1 0\n3 0\n");
    const auto r = run([&](auto& o, auto& e) { return cmd_sig(opt, in, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("# sig closed n=3 edges=3\n", 0), 0u);
    // equal radii share an edge half and half; the larger ball's edges count for its smaller neighbours
    EXPECT_NE(r.out.find("w 0 1.5\nw 1 1.5\nw 2 0\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("# closed edges 3\n# open edges 2\n"), std::string::npos);

    opt.variant = SigVariant::Open;
    opt.summary_only = true;
    std::istringstream again("0 0\n1 0\n3 0\n");
    const auto s = run([&](auto& o, auto& e) { return cmd_sig(opt, again, o, e); });
    EXPECT_EQ(s.out.find("# sig"), std::string::npos);
}

TEST(Sig, InputErrors) {
    SigOptions opt;
    std::istringstream bad("0 0\n1 q\n");
    const auto r = run([&](auto& o, auto& e) { return cmd_sig(opt, bad, o, e); });
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    std::istringstream dup("0 0\n0 0\n");
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_sig(opt, dup, o, e); }).code, kExitUsage);
    std::istringstream unused;
    opt.input = "/nonexistent/points.txt";
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_sig(opt, unused, o, e); }).code, kExitIo);
}

TEST(Lattice, PointsFeedSig) {
    LatticeOptions opt;
    opt.rows = 10;
    opt.cols = 10;
    const auto pts = run([&](auto& o, auto& e) { return cmd_lattice(opt, o, e); });
    EXPECT_EQ(pts.code, kExitOk);
    SigOptions sig;
    sig.summary_only = true;
    std::istringstream in(pts.out);
    const auto r = run([&](auto& o, auto& e) { return cmd_sig(sig, in, o, e); });
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("# vertices 100\n"), std::string::npos);

    opt.report = true;
    const auto rep = run([&](auto& o, auto& e) { return cmd_lattice(opt, o, e); });
    EXPECT_NE(rep.out.find("# interior degree histogram 18:16\n"), std::string::npos) << rep.out;
}

TEST(Experiment, ReproducibleAndThreadIndependent) {
    ExperimentOptions opt;
    opt.trials = 30;
    opt.n = 40;
    opt.seed = 11;
    opt.threads = 1;
    const auto a = run([&](auto& o, auto& e) { return cmd_experiment(opt, o, e); });
    opt.threads = 4;
    const auto b = run([&](auto& o, auto& e) { return cmd_experiment(opt, o, e); });
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    opt.n = 1;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_experiment(opt, o, e); }).code, kExitUsage);
}
