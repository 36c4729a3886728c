#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun lscat(const std::string& args, bool capture_stderr = false) {
  std::string cmd = std::string(LSCAT_BIN) + " " + args + (capture_stderr ? " 2>&1 >/dev/null" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ComputeCircle4) {
  const CliRun r = lscat("compute --space circle4 --subset full --invariant all");
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  for (const char* name : {"nu_H", "nu_LS", "nu_c", "nu_CL", "cuplength"})
    EXPECT_EQ(doc["result"][name]["value"], 2) << name;
  EXPECT_EQ(doc["manifest"]["space"], "circle4");
}

TEST(Cli, ComputeComplexCuplength) {
  const CliRun r = lscat("compute --complex rp2_6 --invariant cuplength");
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["betti"], json({1, 1, 1}));
  EXPECT_EQ(doc["result"]["cuplength"]["value"], 3);
}

TEST(Cli, BadInputsGiveStructuredErrors) {
  const CliRun unknown = lscat("compute --space circle4 --invariant nu_X", true);
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(json::parse(unknown.out)["error"]["kind"], "input");

  const auto bad = temp_file("lscat_bad.json", "{\n\"points\": [\"a\",\n");
  const CliRun parse = lscat("compute --space " + bad.string(), true);
  EXPECT_EQ(parse.code, 2);
  const json err = json::parse(parse.out)["error"];
  EXPECT_EQ(err["kind"], "parse");
  EXPECT_TRUE(err.contains("line"));

  const auto cyc = temp_file("lscat_cycle.json", R"({"points": ["a","b"], "order": [["a","b"],["b","a"]]})");
  const CliRun cycle = lscat("compute --space " + cyc.string(), true);
  EXPECT_EQ(cycle.code, 2);
  EXPECT_EQ(json::parse(cycle.out)["error"]["kind"], "input");
  std::filesystem::remove(bad);
  std::filesystem::remove(cyc);
}

TEST(Cli, Relations) {
  const CliRun prop33 = lscat("relations --space circle4 --check prop33");
  ASSERT_EQ(prop33.code, 0);
  EXPECT_EQ(json::parse(prop33.out)["result"]["status"], "skipped");

  const CliRun chain = lscat("relations --space wedge2circles --check chain");
  EXPECT_EQ(chain.code, 0);

  const CliRun axioms = lscat("axioms --space circle4 --nu nu_H");
  EXPECT_EQ(axioms.code, 0);
}

TEST(Cli, ReplayReproducesReport) {
  const auto path = std::filesystem::temp_directory_path() / "lscat_replay.json";
  const CliRun first = lscat("relations --space 'sphere(2)' --check lemma41:2 --nu all --out " + path.string());
  ASSERT_EQ(first.code, 0);
  std::ifstream in(path);
  const std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const CliRun again = lscat("replay " + path.string());
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(again.out, saved);
  std::filesystem::remove(path);
}
