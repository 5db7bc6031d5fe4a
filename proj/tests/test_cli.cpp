#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(REGGE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, SixjFixture) {
  const CliRun r = run("sixj 1 1 1 1 2 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"square_den\":\"36\""), std::string::npos) << r.out;
}

TEST(Cli, OrbitContainsReggeImage) {
  const CliRun r = run("orbit 4 2 2 2 4 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1,3,3,3,4,2"), std::string::npos) << r.out;
}

TEST(Cli, TetraRegge) {
  const CliRun r = run("tetra regge 4 2 2 2 4 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"1\""), std::string::npos) << r.out;
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run("sixj 1 2 3").status, 2);
  EXPECT_EQ(run("verify nosuchsuite").status, 2);
  EXPECT_EQ(run("tetra regge 10 1 1 1 1 1").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  const CliRun a = run("verify cm --samples 50 --seed 4");
  const CliRun b = run("verify cm --samples 50 --seed 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("verify regge --max 3").status, 0);
}
