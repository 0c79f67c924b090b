#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

const std::string kCli = K3LAT_CLI;
const std::filesystem::path kFixtures = K3LAT_FIXTURES;

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("k3lat_cli_test_" + name);
}

TEST(Cli, LatticeInfo) {
  const CliResult r = run("lattice info " + (kFixtures / "Gamma_2.json").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("det:         -1024"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("signature:   (1, 9)"), std::string::npos);
}

TEST(Cli, LatticeRoots) {
  const CliResult r = run("lattice roots " + (kFixtures / "E8.json").string() + " --norm -2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("norm -2: 240 vectors"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 241);
  EXPECT_EQ(run("lattice roots " + (kFixtures / "U.json").string()).code, 2);
}

TEST(Cli, CaseBuildAndVerify) {
  const auto path = temp_file("cert.json");
  EXPECT_EQ(run("case build --sigma 2 --d 3 --out " + path.string()).code, 0);
  EXPECT_EQ(run("case verify " + path.string()).code, 0);

  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const auto pos = text.find("\"det_t\": 48");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 11, "\"det_t\": 49");
  const auto bad = temp_file("cert_bad.json");
  std::ofstream(bad) << text;
  EXPECT_EQ(run("case verify " + bad.string()).code, 1);
  std::ofstream(bad) << "{not json";
  EXPECT_EQ(run("case verify " + bad.string()).code, 1);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST(Cli, Decide) {
  CliResult r = run("decide --p 19 --sigma 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("No (SigmaBoundExceeded)"), std::string::npos) << r.out;
  r = run("decide --p 11 --sigma 5 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"answer\": \"Yes\""), std::string::npos);
}

TEST(Cli, Survey) {
  const auto csv = temp_file("survey.csv");
  const CliResult r = run("survey --pmax 31 --csv " + csv.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(csv));
  std::filesystem::remove(csv);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("decide --p 2 --sigma 3").code, 2);
  EXPECT_EQ(run("decide --p 15 --sigma 3").code, 2);
  EXPECT_EQ(run("decide --p 13").code, 2);
  EXPECT_EQ(run("case build --sigma 7 --d 1").code, 2);
  EXPECT_EQ(run("case build --sigma 3 --d 0").code, 2);
  EXPECT_EQ(run("case verify /nonexistent/cert.json").code, 2);
  EXPECT_EQ(run("lattice info /nonexistent/l.json").code, 2);
  EXPECT_EQ(run("survey --pmax 1").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
