#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "lusztig/json_io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = lusztig::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChambersText) {
  const Result r = run({"chambers", "--n", "3", "--word", "1,3,2,1,3,2", "--format", "text"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("set 134 "), std::string::npos);
  EXPECT_NE(r.out.find("set 3 "), std::string::npos);
  EXPECT_NE(r.out.find("set 13 "), std::string::npos);
}

TEST(Cli, VerifyExhaustive) {
  const Result r = run({"verify", "--n", "3", "--mode", "exhaustive"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "16 words, 0 mismatches\n");
}

TEST(Cli, VerifySampleJsonRoundTrips) {
  const Result r = run({"verify", "--n", "5", "--mode", "sample", "--count", "20", "--seed", "3", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  const auto report = lusztig::json::report_from(json::parse(r.out));
  EXPECT_EQ(report.checked, 20u);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(run({"verify", "--n", "5", "--mode", "sample", "--count", "20", "--seed", "3", "--format", "json",
                 "--jobs", "3"})
                .out,
            r.out);
}

TEST(Cli, MemberReportsViolatedRow) {
  const Result r = run({"member", "--n", "3", "--word", "1,3,2,1,3,2", "--point", "0,0,1,0,0,0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("false\n", 0), 0u);
  EXPECT_NE(r.out.find("violated row: chamber(3,6)"), std::string::npos);
  const Result j = run({"member", "--n", "3", "--word", "1,3,2,1,3,2", "--point", "0,0,1,1,1,1", "--format", "json"});
  EXPECT_EQ(json::parse(j.out)["member"], true);
}

TEST(Cli, DecomposeAndNotInCone) {
  const Result r = run({"decompose", "--n", "2", "--word", "1,2,1", "--point", "2,3,0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("simple(1) 2"), std::string::npos);
  EXPECT_NE(r.out.find("chamber(1,3) 1"), std::string::npos);
  const Result bad = run({"decompose", "--n", "2", "--word", "1,2,1", "--point", "1,0,0"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(json::parse(bad.err)["error"]["kind"], "not-in-cone");
}

TEST(Cli, DomainErrorsAreStructuredJson) {
  const Result r = run({"roots", "--n", "3", "--word", "1,2,2,1,3,2"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "input");
  const Result pq = run({"pq", "--n", "3", "--set", "1,2"});
  EXPECT_EQ(pq.status, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"nonsense"}).status, 2);
  EXPECT_EQ(run({"chambers", "--n", "3"}).status, 2);
  EXPECT_EQ(run({"chambers", "--n", "x", "--word", "1"}).status, 2);
  EXPECT_EQ(run({"render", "--n", "1", "--word", "1", "--format", "pdf"}).status, 2);
  EXPECT_EQ(run({"verify", "--n", "3", "--mode", "bogus"}).status, 2);
}

TEST(Cli, JsonOutputsRoundTrip) {
  const std::vector<std::string> base{"--n", "3", "--word", "1,3,2,1,3,2", "--format", "json"};
  auto with = [&](std::string cmd) {
    std::vector<std::string> a{cmd};
    a.insert(a.end(), base.begin(), base.end());
    return run(a);
  };
  const auto cone = lusztig::json::cone_from(json::parse(with("cone-matrix").out));
  EXPECT_EQ(cone.size(), 6u);
  const json roots = json::parse(with("roots").out);
  EXPECT_EQ(lusztig::json::word_from(roots).to_string(), "1,3,2,1,3,2");
  const json spanning = json::parse(with("spanning").out);
  ASSERT_EQ(spanning["vectors"].size(), 6u);
  for (const auto& v : spanning["vectors"]) {
    EXPECT_TRUE(v["formula_matches"].get<bool>());
    EXPECT_EQ(lusztig::json::vector_from(v["root"]), lusztig::json::vector_from(v["position"]));
    lusztig::json::label_from(v["label"]);
  }
  const json chambers = json::parse(with("chambers").out);
  EXPECT_EQ(chambers["chambers"].size(), 3u);
}

TEST(Cli, EnumerateAndCommutationClass) {
  const Result all = run({"enumerate", "--n", "3", "--format", "json"});
  EXPECT_EQ(json::parse(all.out)["count"], 16);
  const Result cls = run({"enumerate", "--n", "3", "--word", "1,3,2,1,3,2", "--commutation-class"});
  EXPECT_EQ(std::count(cls.out.begin(), cls.out.end(), '\n'), 4);
}

TEST(Cli, BfzWordAndPq) {
  const Result r = run({"bfz-word", "--quiver", "RLRL"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), lusztig::bfz_word(lusztig::Quiver::from_left_edges({2, 4}, 5)).to_string());
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  const Result pq = run({"pq", "--pq", "LR", "--format", "json"});
  EXPECT_EQ(pq.status, 0);
  EXPECT_EQ(json::parse(pq.out)["set"], json::parse("[1,3]"));
  const Result set = run({"pq", "--n", "3", "--set", "1,3,4"});
  EXPECT_NE(set.out.find("partial-quiver -R"), std::string::npos);
}

TEST(Cli, RenderSvgIsStable) {
  const std::vector<std::string> args{"render", "--n", "3", "--word", "1,3,2,1,3,2", "--format", "svg"};
  const Result a = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(a.out.rfind("<?xml", 0), 0u);
}
