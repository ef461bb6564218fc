#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef CUBESIZE_BIN
#error "CUBESIZE_BIN must point at the cubesize binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CUBESIZE_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_fixture(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream f(path);
  f << body;
  return path;
}

std::string triangle_file() { return write_fixture("triangle.txt", "2 3\n0 0\n1 0\n2 3\n"); }

std::string block_file() {
  return write_fixture("block.txt", "3 6\n0 3 1\n5 2 3\n4 0 4\n2 5 4\n1 3 0\n3 4 5\n");
}

std::vector<std::string> data_rows(const std::string& table) {
  std::vector<std::string> rows;
  std::istringstream ss(table);
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (!line.empty()) rows.push_back(line);
  }
  return rows;
}

std::string strip_ms_column(const std::string& row) {
  auto pos = row.find_last_of(' ');
  return pos == std::string::npos ? row : row.substr(0, pos);
}

}  // namespace

TEST(Cli, SizeHumanReadable) {
  auto r = run_cli("size " + triangle_file());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("ls 2"), std::string::npos);
  EXPECT_NE(r.out.find("w 2"), std::string::npos);
}

TEST(Cli, SizeJsonSchema) {
  auto r = run_cli("size --json " + triangle_file());
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["ls"], 2);
  EXPECT_EQ(j["w"], 2);
  ASSERT_TRUE(j.contains("matrix"));
  ASSERT_TRUE(j.contains("translation"));
  ASSERT_TRUE(j.contains("image"));
  ASSERT_TRUE(j.contains("iterations"));
  ASSERT_TRUE(j.contains("ms"));
  // determinant +-1 and image inside [0,2]^2
  auto m = j["matrix"];
  long det = m[0][0].get<long>() * m[1][1].get<long>() - m[0][1].get<long>() * m[1][0].get<long>();
  EXPECT_EQ(std::abs(det), 1);
  for (const auto& p : j["image"])
    for (const auto& c : p) {
      EXPECT_GE(c.get<long>(), 0);
      EXPECT_LE(c.get<long>(), 2);
    }
}

TEST(Cli, JsonIsDeterministicApartFromTiming) {
  auto a = nlohmann::json::parse(run_cli("size --json " + block_file()).out);
  auto b = nlohmann::json::parse(run_cli("size --json " + block_file()).out);
  a.erase("ms");
  b.erase("ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, WidthOfAPoint) {
  auto path = write_fixture("point.txt", "3 1\n5 5 5\n");
  auto r = run_cli("width --json " + path);
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["w"], 0);
  EXPECT_EQ(j["w2"], 0);
  EXPECT_EQ(j["ls"], 0);
}

TEST(Cli, BoxCommand3D) {
  auto r = run_cli("box --json " + block_file());
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["w"], 4);
  EXPECT_EQ(j["w2"], 4);
  EXPECT_EQ(j["ls"], 4);
  for (const auto& p : j["image"])
    for (const auto& c : p) {
      EXPECT_GE(c.get<long>(), 0);
      EXPECT_LE(c.get<long>(), 4);
    }
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli("size " + write_fixture("bad1.txt", "2 2\n0 0\nx 1\n")).exit_code, 2);
  EXPECT_EQ(run_cli("size " + write_fixture("bad2.txt", "banana\n")).exit_code, 2);
  EXPECT_EQ(run_cli("size " + write_fixture("bad3.txt", "2 2\n0 0 0\n1 1\n")).exit_code, 2);
  EXPECT_EQ(run_cli("size " + write_fixture("bad4.txt", "2 3\n0 0\n1 1\n")).exit_code, 2);
  EXPECT_EQ(run_cli("size /nonexistent/file.txt").exit_code, 2);
}

TEST(Cli, DuplicatePointsAreAccepted) {
  auto path = write_fixture("dup.txt", "2 5\n0 0\n1 0\n2 3\n0 0\n2 3\n");
  auto r = run_cli("size --json " + path);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["ls"], 2);
}

TEST(Cli, VerifyOnDegenerateInput) {
  auto path = write_fixture("planar.txt", "3 4\n0 0 3\n3 0 0\n0 3 3\n3 3 0\n");
  auto r = run_cli("box --json --verify " + path);
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["w"], 0);
  EXPECT_EQ(j["w2"], 3);
  EXPECT_EQ(j["ls"], 3);
  EXPECT_EQ(j["oracle_agrees"], true);
}

TEST(Cli, UnsupportedDimensionExitsFour) {
  auto path = write_fixture("dim4.txt", "4 2\n0 0 0 0\n1 1 1 1\n");
  EXPECT_EQ(run_cli("size " + path).exit_code, 4);
}

TEST(Cli, VerifyAgreesOnTheBlock) {
  auto r = run_cli("size --json --verify " + block_file());
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ls"], 4);
  EXPECT_EQ(j["oracle_agrees"], true);
}

TEST(Cli, NaiveModeMatches) {
  auto a = nlohmann::json::parse(run_cli("size --json " + block_file()).out);
  auto b = nlohmann::json::parse(run_cli("size --json --naive-3d " + block_file()).out);
  EXPECT_EQ(a["ls"], b["ls"]);
}

TEST(Cli, OracleCommand) {
  auto r = run_cli("oracle --json " + triangle_file());
  ASSERT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ls"], 2);
  EXPECT_EQ(j["inconclusive"], false);
}

TEST(Cli, OracleBudgetExhaustionExitsFive) {
  auto r = run_cli("oracle --json --budget 1 " + triangle_file());
  ASSERT_EQ(r.exit_code, 5);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["inconclusive"], true);
}

TEST(Cli, BenchTwoDimensional) {
  auto r = run_cli("bench --dim 2 --count 10 --coord-max 6 --seed 1");
  ASSERT_EQ(r.exit_code, 0);
  auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& row : rows) EXPECT_NE(row.find(" ok "), std::string::npos) << row;
}

TEST(Cli, BenchThreeDimensional) {
  auto r = run_cli("bench --dim 3 --count 5 --coord-max 4 --seed 7");
  ASSERT_EQ(r.exit_code, 0);
  auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& row : rows) EXPECT_NE(row.find(" ok "), std::string::npos) << row;
}

TEST(Cli, BenchZeroCount) {
  auto r = run_cli("bench --dim 2 --count 0 --seed 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(data_rows(r.out).empty());
}

TEST(Cli, BenchDeterministicUnderFixedSeed) {
  auto a = run_cli("bench --dim 3 --count 4 --coord-max 4 --seed 11");
  auto b = run_cli("bench --dim 3 --count 4 --coord-max 4 --seed 11");
  auto ra = data_rows(a.out), rb = data_rows(b.out);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i)
    EXPECT_EQ(strip_ms_column(ra[i]), strip_ms_column(rb[i]));
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli("size").exit_code, 1);            // missing path
  EXPECT_EQ(run_cli("frobnicate x").exit_code, 1);    // unknown subcommand
  EXPECT_EQ(run_cli("bench --dim 5").exit_code, 1);   // bad dimension choice
}
