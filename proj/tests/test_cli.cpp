#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string cap = R"({"k":2,"ell":0,"pairs":[[1,2]]})";
const std::string cup = R"({"k":0,"ell":2,"pairs":[[1,2]]})";
const std::string e1 = R"({"k":2,"ell":2,"pairs":[[1,2],[3,4]]})";

} // namespace

TEST(Cli, CapAfterCupIsOneLoop) {
    const Result r = run({"compose", "--a", cap, "--b", cup});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"diagram\":{\"k\":0,\"ell\":0,\"pairs\":[]},\"loops\":1}\n");
}

TEST(Cli, ComposeSumsAndOriented) {
    const std::string sum = R"({"valency":[2,2],"terms":[{"pairs":[[1,2],[3,4]],"coeff":[["2",0]]}]})";
    const Result r = run({"compose", "--a", sum, "--b", e1});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"valency\":[2,2],\"terms\":[{\"pairs\":[[1,2],[3,4]],\"coeff\":[[\"2\",1]]}]}\n");
    const std::string aplus = R"({"k":2,"ell":0,"pairs":[[1,2]],"source":"-+","target":""})";
    const std::string uminus = R"({"k":0,"ell":2,"pairs":[[1,2]],"source":"","target":"-+"})";
    EXPECT_EQ(run({"oriented-compose", "--a", aplus, "--b", uminus}).out,
              "{\"diagram\":{\"k\":0,\"ell\":0,\"pairs\":[],\"tails\":[],\"source\":\"\",\"target\":\"\"},\"loops\":1}\n");
}

TEST(Cli, RenderE1) {
    const Result r = run({"render", "--in", e1});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "o   o\n'---'\n.---.\no   o\n\n");
}

TEST(Cli, SigmaSuitePasses) {
    const Result r = run({"suite", "--name", "sigma-lemmas"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos);
    EXPECT_EQ(r.out.find("\"pass\":false"), std::string::npos);
    const Result p = run({"--pretty", "suite", "--name", "sigma-lemmas"});
    EXPECT_NE(p.out.find("all 38 checks passed"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"compose", "--a", cap}).code, 2);
    const Result mismatch = run({"compose", "--a", cap, "--b", cap});
    EXPECT_EQ(mismatch.code, 2);
    EXPECT_NE(mismatch.err.find("cannot compose"), std::string::npos);
    EXPECT_EQ(run({"compose", "--a", "{not json", "--b", cup}).code, 2);
    EXPECT_EQ(run({"suite", "--name", "nope"}).code, 2);
    EXPECT_EQ(run({"--max-entries", "10", "functor", "--group", "o3", "--in", e1}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    // a trace between different diagrams is a verification failure
    EXPECT_EQ(run({"trace", "--a", "0 X 0", "--b", "valency 2 2"}).code, 1);
}

TEST(Cli, WordsAndTraces) {
    EXPECT_EQ(run({"eval-word", "--word", "0 A 0;0 U 0"}).out,
              "{\"diagram\":{\"k\":0,\"ell\":0,\"pairs\":[]},\"loops\":1,\"slices\":2}\n");
    const Result t = run({"trace", "--a", "0 X 0;0 X 0", "--b", "valency 2 2"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("\"ok\":true"), std::string::npos);
    EXPECT_EQ(run({"equiv", "--a", "0 X 0", "--b", "0 X 0;0 X 0;0 X 0"}).out, "{\"equivalent\":true,\"loops\":[0,0]}\n");
}

TEST(Cli, ReportsAndChecks) {
    EXPECT_EQ(run({"fft", "--group", "o3", "--k", "2", "--l", "2"}).code, 0);
    const Result s = run({"sft", "--group", "sp2", "--r", "2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("\"lhs\":\"1\""), std::string::npos);
    EXPECT_EQ(run({"enhanced", "--m", "2", "--check", "forced"}).code, 0);
    EXPECT_EQ(run({"adjoint", "--group", "osp1|2", "--in", e1}).code, 0);
    EXPECT_EQ(run({"supertrace", "--group", "sp2", "--in", e1}).out,
              "{\"supertrace\":\"-2\",\"closure\":\"-2\",\"pass\":true}\n");
    EXPECT_EQ(run({"ep", "--m", "2", "--p", "1"}).code, 0);
}

TEST(Cli, OutputIndependentOfThreads) {
    const auto one = run({"--threads", "1", "ideal", "--gen",
                          R"({"valency":[2,2],"terms":[{"pairs":[[1,3],[2,4]],"coeff":"1"},{"pairs":[[1,4],[2,3]],"coeff":"-1"}]})",
                          "--delta", "1", "--tensor", "--k", "2", "--l", "2"});
    const auto three = run({"--threads", "3", "ideal", "--gen",
                            R"({"valency":[2,2],"terms":[{"pairs":[[1,3],[2,4]],"coeff":"1"},{"pairs":[[1,4],[2,3]],"coeff":"-1"}]})",
                            "--delta", "1", "--tensor", "--k", "2", "--l", "2"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, three.out);
    EXPECT_NE(one.out.find("\"dim\":2"), std::string::npos);
}
