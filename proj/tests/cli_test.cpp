#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(DCUT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dcut-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string gen(const std::string& name, const std::string& args) {
    auto r = run("gen " + args);
    EXPECT_EQ(r.code, 0) << args;
    return write(name, r.out);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, EnumerateExamples) {
  EXPECT_EQ(lines(run("enumerate --input " + gen("p4", "path -n 4") + " -d 1 --param vc --variant all").out), 4u);
  EXPECT_EQ(lines(run("enumerate --input " + gen("s6", "star -n 6") + " -d 1 --param nd --variant min").out), 6u);
  EXPECT_EQ(lines(run("enumerate --input " + gen("sf", "star-forest --k 3 --m 2") + " -d 1 --param vc --variant max").out),
            8u);
  EXPECT_EQ(lines(run("enumerate --input " + gen("k4", "clique -n 4") + " -d 2 --param vc --variant all").out), 3u);
}

TEST_F(Cli, EnumerateWritesJsonLinesAndReport) {
  const auto g = gen("sf", "star-forest --k 3 --m 2 --partition " + path("sf.part"));
  const auto report = path("report.json");
  auto r = run("enumerate --input " + g + " --param pc --partition " + path("sf.part") + " --variant max --json-report " +
               report);
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ASSERT_NO_THROW((void)nlohmann::json::parse(line)) << line;
    ++n;
  }
  EXPECT_EQ(n, 8u);
  std::ifstream rep(report);
  const auto j = nlohmann::json::parse(rep);
  EXPECT_EQ(j["solutions"], 8);
  EXPECT_EQ(j["param"], "pc");
}

TEST_F(Cli, ComposeFamily) {
  const auto a = gen("a", "clique -n 3");
  const auto b = gen("b", "path -n 3");
  auto r = run("gen compose -d 1 --inputs " + a + " " + b);
  ASSERT_EQ(r.code, 0);
  const auto g = write("c", r.out);
  EXPECT_EQ(run("verify --input " + g).code, 0);
}

TEST_F(Cli, MalformedInputExitsWithTwo) {
  EXPECT_EQ(run("enumerate --input " + write("bad", "3 1\n0 7\n")).code, 2);
  EXPECT_EQ(run("enumerate --input " + write("worse", "not a graph\n")).code, 2);
  EXPECT_EQ(run("enumerate").code, 2);
  EXPECT_EQ(run("enumerate --input x --variant some").code, 2);
}

TEST_F(Cli, OracleRefusalExitsWithFour) {
  const auto g = gen("p12", "path -n 12");
  EXPECT_EQ(run("verify --input " + g + " --oracle-limit 8").code, 4);
}

TEST_F(Cli, VerifySmallCorpus) {
  auto r = run("verify --max-n 4 --random 5 --structured 4 --structured-max-n 10 --full-vc-max");
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, BenchPrintsReport) {
  const auto g = gen("star", "star -n 300");
  auto r = run("bench --input " + g + " --param vc --variant all");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["solutions"], 300);
  EXPECT_GE(j["max_delay_ms"].get<double>(), 0.0);
}

}  // namespace
