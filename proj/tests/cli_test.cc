#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct ToolRun {
  int code = -1;
  std::string out;
};

ToolRun tool(const std::string &args, const std::string &env = {}) {
  const std::string cmd = env + " " + TENSORDEG_BIN + " " + args + " 2>/dev/null";
  ToolRun r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
    r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const char *name) {
  return (std::string(::testing::TempDir()) + "/" + name);
}

} // namespace

TEST(Cli, DegreeOfQuaternion) {
  const ToolRun r = tool("degree --group Q8 --kinds tensor");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d_tensor(Q8) = 1/4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("approx"), std::string::npos) << r.out;
}

TEST(Cli, DegreeOfTrivialGroup) {
  const ToolRun r = tool("degree --group C1 --kinds tensor");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d_tensor(C1) = 1/1"), std::string::npos) << r.out;
}

TEST(Cli, DegreeJson) {
  const ToolRun r = tool("degree --group D8 --format json");
  ASSERT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d_tensor"], "5/16");
  EXPECT_EQ(j["d_ext"], "7/16");
  EXPECT_EQ(j["d"], "5/8");
  EXPECT_EQ(j["order"], 8);
}

TEST(Cli, BadSpecExitsTwo) {
  EXPECT_EQ(tool("degree --group D7").code, 2);
  EXPECT_EQ(tool("degree --group Q12 --kinds tensor").code, 2);
  EXPECT_EQ(tool("degree --group Q8 --kinds nonsense").code, 2);
  EXPECT_EQ(tool("degree").code, 2);
  EXPECT_EQ(tool("bogus").code, 2);
}

TEST(Cli, TensorSummaries) {
  ToolRun r = tool("tensor --group 'ESp(3,1)'");
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order_T"], 729);
  EXPECT_EQ(j["T_invariants"], nlohmann::json({3, 3, 3, 3, 3, 3}));
  r = tool("tensor --group C2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["order_T"], 2);
  r = tool("tensor --group C1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["order_T"], 1);
}

TEST(Cli, ResourceLimitExitsThree) {
  EXPECT_EQ(tool("enumerate 'a |'").code, 3);
  EXPECT_EQ(tool("enumerate 'a, b | a^3, b^3'").code, 3);
  EXPECT_EQ(tool("tensor --group C2^3", "MAX_COSETS=64").code, 3);
  EXPECT_EQ(tool("degree --group Q8", "MAX_COSETS=4").code, 3);
}

TEST(Cli, Enumerate) {
  ToolRun r = tool("enumerate 'a | a^5'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cosets: 5"), std::string::npos) << r.out;
  r = tool("enumerate 'a,b | a^2, b^2, (a b)^3' --realize");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cosets: 6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("abelian: no"), std::string::npos) << r.out;
  r = tool("enumerate 'a,b | a^2, b^2, (a b)^3' --subgroup a");
  EXPECT_NE(r.out.find("cosets: 3"), std::string::npos) << r.out;
  EXPECT_EQ(tool("enumerate 'a,b | a^2, c'").code, 2);
}

TEST(Cli, VerifyExitsZeroWhenAllHold) {
  const ToolRun r = tool("verify --max-order 16 --suites chain,thm23");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("fails  "), std::string::npos);
  EXPECT_NE(r.out.find(" 0 fails"), std::string::npos) << r.out;
}

TEST(Cli, VerifyReportFormats) {
  const std::string csv = temp_path("report.csv"), json = temp_path("report.json");
  ToolRun r = tool("verify --max-order 8 --suites chain --format csv --report " + csv);
  ASSERT_EQ(r.code, 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "check,group,status,lhs,rhs,witnesses,notes");

  r = tool("verify --max-order 8 --suites chain --format json --report " + json);
  ASSERT_EQ(r.code, 0);
  std::ifstream jin(json);
  const nlohmann::json j = nlohmann::json::parse(jin);
  EXPECT_TRUE(j.contains("tool_version"));
  EXPECT_TRUE(j.contains("generated_at"));
  EXPECT_EQ(j["summary"]["fails"], 0);
  EXPECT_EQ(j["rows"].size(), j["summary"]["holds"].get<std::size_t>());
}

TEST(Cli, VerifyIsDeterministic) {
  const ToolRun a = tool("verify --max-order 10 --suites chain,abelian --format csv --jobs 1");
  const ToolRun b = tool("verify --max-order 10 --suites chain,abelian --format csv --jobs 3");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UnwritableReportExitsFour) {
  EXPECT_EQ(tool("verify --max-order 4 --suites chain --report /nonexistent/dir/r.csv").code, 4);
}

TEST(Cli, UnknownSuiteExitsTwo) {
  EXPECT_EQ(tool("verify --suites nope").code, 2);
}
