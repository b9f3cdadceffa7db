// End-to-end CLI checks: runs the built `greenkern` binary and inspects
// stdout/stderr and exit codes.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        (env.empty() ? std::string() : "env " + env + " ") + GREENKERN_CLI_PATH + " " + args +
        " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST(Cli, EvalFree3d) {
    const RunResult r = run("eval --model free3d --zeta -1 --r 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("2.9274915762159"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("closed_form"), std::string::npos);
}

TEST(Cli, EvalJsonRoundTrip) {
    const RunResult r = run("eval --model landau3d --xi 1 --zeta -1 --dx 0,0,1 --json");
    EXPECT_EQ(r.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    EXPECT_EQ(j.at("model"), "landau3d");
    EXPECT_EQ(j.at("method"), "quadrature");
    EXPECT_NEAR(j.at("value_re").get<double>(), 0.0142173075595659, 1e-9);
    EXPECT_LT(j.at("abs_error").get<double>(), 1e-8);
    EXPECT_EQ(j.at("params").at("xi").get<double>(), 1.0);
}

TEST(Cli, CoulombReducesToFree) {
    const RunResult c = run("eval --model coulomb3d --q 0 --zeta -1 --x 1,0,0 --y 0,0,0 --json");
    const RunResult f = run("eval --model free3d --zeta -1 --r 1 --json");
    ASSERT_EQ(c.exit_code, 0);
    ASSERT_EQ(f.exit_code, 0);
    const double vc = nlohmann::json::parse(c.output).at("value_re").get<double>();
    const double vf = nlohmann::json::parse(f.output).at("value_re").get<double>();
    EXPECT_NEAR(vc, vf, 1e-9);
}

TEST(Cli, EvalInvertedOscillator) {
    const RunResult r = run("eval --model invosc1d --omega 1 --zeta 0,1 --x 0 --y 1 --json");
    EXPECT_EQ(r.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    EXPECT_NEAR(j.at("value_re").get<double>(), -0.0057437754406300, 1e-9);
    EXPECT_NEAR(j.at("value_im").get<double>(), 0.2326984672269047, 1e-9);
}

TEST(Cli, RenormExtrapolates) {
    const RunResult r = run("renorm --model free3d --zeta -1 --json");
    EXPECT_EQ(r.exit_code, 0);
    // last JSON line carries the extrapolated value
    const size_t pos = r.output.rfind("{");
    ASSERT_NE(pos, std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(r.output.substr(pos));
    EXPECT_EQ(j.at("tag"), "extrapolated");
    EXPECT_NEAR(j.at("ren_re").get<double>(), -0.0795774715459477, 1e-8);
}

TEST(Cli, FitSingularCoefficients) {
    const RunResult r =
        run("fit --model free3d --zeta -1 --radii 1e-2:1e-4:12 --basis inv1,const");
    EXPECT_EQ(r.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    EXPECT_NEAR(j.at("c_inv1_re").get<double>(), 0.0795774715459477, 1e-6);
}

TEST(Cli, ZetaProbe) {
    const RunResult r =
        run("zeta-probe --model free4d --zeta1 -1 --zeta2 -2 --radii 1e-2:1e-4:12");
    EXPECT_EQ(r.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    EXPECT_FALSE(j.at("bounded").get<bool>());
    EXPECT_NEAR(j.at("fitted_log_slope_re").get<double>(), -0.0126651479552922, 2e-4);
}

TEST(Cli, KreinBoundStates) {
    const std::string path = std::string(::testing::TempDir()) + "/system.json";
    {
        std::ofstream out(path);
        out << R"({"base":{"model":"free3d"},"points":[[0,0,0]],"alphas":[-1.0]})";
    }
    const RunResult r = run("krein --system " + path + " --window -200,-50 --tol 1e-10");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("-1.5791367041"), std::string::npos) << r.output;

    // repulsive coupling: empty list, still exit 0
    {
        std::ofstream out(path);
        out << R"({"base":{"model":"free3d"},"points":[[0,0,0]],"alphas":[1.0]})";
    }
    const RunResult r2 = run("krein --system " + path + " --window -200,-50 --tol 1e-10");
    EXPECT_EQ(r2.exit_code, 0);
    EXPECT_EQ(r2.output, "energy,multiplicity\n");
}

TEST(Cli, ExitCodes) {
    // usage error
    EXPECT_EQ(run("eval --model nosuch --zeta -1 --r 1").exit_code, 3);
    EXPECT_EQ(run("eval --nosuchflag").exit_code, 2);
    EXPECT_EQ(run("").exit_code, 2);
    // domain error: zeta on the spectrum, typed name on stderr, no table rows
    const RunResult d = run("eval --model free3d --zeta 1 --r 1");
    EXPECT_EQ(d.exit_code, 3);
    EXPECT_NE(d.output.find("DomainError"), std::string::npos);
    EXPECT_EQ(d.output.find("closed_form"), std::string::npos);
    // window touching the spectrum
    const std::string path = std::string(::testing::TempDir()) + "/system2.json";
    {
        std::ofstream out(path);
        out << R"({"base":{"model":"free3d"},"points":[[0,0,0]],"alphas":[-1.0]})";
    }
    const RunResult w = run("krein --system " + path + " --window -10,5 --tol 1e-9");
    EXPECT_EQ(w.exit_code, 3);
    EXPECT_NE(w.output.find("WindowTouchesSpectrum"), std::string::npos);
    EXPECT_EQ(w.output.find("energy,"), std::string::npos);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
    auto run_with_threads = [](const char* n) {
        return run(std::string("renorm --model free3d --zeta -1 --radii 1e-1:1e-5:12"),
                   std::string("GREENKERN_THREADS=") + n);
    };
    const RunResult one = run_with_threads("1");
    const RunResult many = run_with_threads("8");
    EXPECT_EQ(one.exit_code, 0);
    EXPECT_EQ(one.output, many.output);
}

TEST(Cli, VerifySingleSuite) {
    const RunResult r = run("verify hermite");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("PASS hermite"), std::string::npos) << r.output;
    const RunResult p = run("verify pbm-identity");
    EXPECT_EQ(p.exit_code, 0);
    EXPECT_NE(p.output.find("PASS pbm-identity"), std::string::npos) << p.output;
    const RunResult j = run("verify hermite --json");
    const nlohmann::json jj = nlohmann::json::parse(j.output);
    EXPECT_TRUE(jj.at("checks")[0].at("pass").get<bool>());
    EXPECT_EQ(run("verify nosuchsuite").exit_code, 3);
}

TEST(Cli, RenormCoulombLogSingularity) {
    // the Coulomb singularity used by renorm carries the (q/4 pi) log d term,
    // so the extrapolated value is the finite diagonal constant
    const RunResult r = run("renorm --model coulomb3d --q 1 --zeta -1 --json");
    EXPECT_EQ(r.exit_code, 0);
    const size_t pos = r.output.rfind("{");
    ASSERT_NE(pos, std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(r.output.substr(pos));
    EXPECT_EQ(j.at("tag"), "extrapolated");
    EXPECT_NEAR(j.at("ren_re").get<double>(), -0.0092255368885859, 1e-4);
}
