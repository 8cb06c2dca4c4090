#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SUMCOLOUR_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SUMCOLOUR_SAMPLES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, AnalyzeOrderFour) {
  auto r = run("analyze -i " + sample("z4.txt"));
  EXPECT_EQ(r.code, 2);
  auto j = json_of(r);
  EXPECT_EQ(j["verdict"], "order-4 present");
  EXPECT_EQ(j["analysis"]["has_order_four"], true);
}

TEST(Cli, AnalyzeZ2Z6) {
  auto r = run("analyze -i " + sample("z2_z6.txt"));
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["analysis"]["invariant_factors"], nlohmann::json({"2", "6"}));
  EXPECT_EQ(j["analysis"]["decomposition"]["text"], "Z_2 + Z_2 + Z_3");
  EXPECT_EQ(j["verdict"], "4-free");
}

TEST(Cli, AnalyzeFree) {
  auto r = run("analyze -i " + sample("free3.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["analysis"]["decomposition"]["free_rank"], 3);
}

TEST(Cli, ParseErrorsAreReportedWithLocation) {
  auto bad = temp_file("bad_pres.txt", "generators: 2\nrelations:\n 1 2 3\n");
  auto r = run("analyze -i " + bad);
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("bad_pres.txt:3: relation has 3 entries, expected 2"), std::string::npos) << r.out;
  EXPECT_EQ(run("analyze -i /nonexistent/file.txt").code, 4);
  EXPECT_EQ(run("verify --mode sideways").code, 4);
}

TEST(Cli, Embed) {
  auto r = run("embed -i " + sample("mixed.txt"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["embedding"]["signature"], "prufer=3;s=1;r=1;mode=rational");
  EXPECT_EQ(j["embedding"]["generator_images"][1], "d:{0=1/9};t:0;q:(0)");
  EXPECT_EQ(run("embed -i " + sample("z4.txt")).code, 2);
}

TEST(Cli, Colour) {
  auto r = run("colour --signature 'prufer=3,5;s=0;r=2' 'd:{};t:;q:(0,0)' 'd:{0=1/9,1=2/5};t:;q:(0,3/2)'");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["colours"][0]["colour"], "D[];Y[];H1");
  EXPECT_EQ(j["colours"][1]["colour"], "D[1/9,2/5];Y[3/2];H1");
  auto bad = run("colour --signature 'prufer=3;s=0;r=0' 'd:{0=1/2};t:;q:()'");
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("not a power of 3"), std::string::npos);
  EXPECT_EQ(run("colour --signature 'prufer=3' 'nonsense'").code, 4);
}

TEST(Cli, VerifyDefaultSignature) {
  auto r = run("verify --no-timing");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["config"]["signature"], "prufer=3,5;s=2;r=2;mode=rational");
  EXPECT_EQ(j["triples"]["sample_size"], 44100);
  EXPECT_EQ(j["triples"]["violation_count"], 0);
  EXPECT_EQ(j["coset_uniqueness"]["passed"], true);
}

TEST(Cli, VerifyDropLayer) {
  auto r = run("verify --signature 'prufer=3;s=2;r=1' --prufer-depth 1 --q-bound 1 --q-den-bound 1 "
               "--drop-layer halvable --no-timing");
  EXPECT_EQ(r.code, 1);
  auto j = json_of(r);
  EXPECT_GT(j["triples"]["violation_count"].get<int>(), 0);
  EXPECT_EQ(j["verdict"], "violations found");
}

TEST(Cli, VerifyRefusesOrderFour) {
  auto r = run("verify -i " + sample("z4.txt"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["verdict"], "order-4 present");
}

TEST(Cli, VerifyPresentationImage) {
  auto r = run("verify -i " + sample("z2_z6.txt") + " --no-timing");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["sample"]["kind"], "embedded-image");
  EXPECT_EQ(j["triples"]["sample_size"], 12);
}

TEST(Cli, VerifyCapExceeded) {
  EXPECT_EQ(run("verify --cap 100").code, 3);
}

TEST(Cli, ReportsAreReproducible) {
  const std::string args = "verify --mode random --count 2000 --seed 9 --drop-layer y --no-timing";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  // Re-running from the echoed config reproduces the report.
  auto cfg = json_of(a)["config"];
  auto c = run("verify --mode " + cfg["mode"].get<std::string>() + " --count " + std::to_string(cfg["count"].get<int>()) +
               " --seed " + std::to_string(cfg["seed"].get<int>()) + " --drop-layer " +
               cfg["drop_layer"].get<std::string>() + " --signature '" + cfg["signature"].get<std::string>() +
               "' --prufer-depth " + std::to_string(cfg["prufer_depth"].get<int>()) + " --q-bound " +
               std::to_string(cfg["q_bound"].get<int>()) + " --q-den-bound " +
               std::to_string(cfg["q_den_bound"].get<int>()) + " --cap " + std::to_string(cfg["cap"].get<int>()) +
               " --no-timing");
  EXPECT_EQ(c.out, a.out);

  auto par = json_of(run(args + " --parallel 3"));
  auto ser = json_of(a);
  EXPECT_EQ(par["triples"].dump(), ser["triples"].dump());
  EXPECT_EQ(par["coset_uniqueness"].dump(), ser["coset_uniqueness"].dump());
}

TEST(Cli, Demo) {
  auto r = run("demo");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r)["demo"];
  EXPECT_EQ(j["g"], "(1,0)");
  EXPECT_EQ(j["h"], "(0,1)");
  EXPECT_EQ(j["order_g_minus_h"], 4);
  EXPECT_EQ(json_of(run("demo --group 2,2,3"))["demo"]["witness_found"], false);
}

TEST(Cli, Search) {
  auto r = run("search --group 4 -c 2 --no-timing");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r)["forced"];
  EXPECT_EQ(j["verdict"], "not_forced");
  EXPECT_EQ(j["witness"], nlohmann::json({0, 0, 1, 0}));
  auto budget = run("search --group 4 -c 2 --budget 0");
  EXPECT_EQ(budget.code, 3);
  EXPECT_EQ(json_of(budget)["forced"]["verdict"], "unknown");
  auto m = run("search --group 4");
  EXPECT_EQ(json_of(m)["min_colours"]["min_colours"], 2);
  EXPECT_EQ(run("search --group 4,x").code, 4);
}
