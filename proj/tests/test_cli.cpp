#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "sedq/cli.h"
#include "sedq/oracles.h"
#include "test_support.h"

using namespace sedq;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sedq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  fs::path d = fs::temp_directory_path() / "sedq_cli_test";
  fs::create_directories(d);
  return d / name;
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
  return n;
}

}  // namespace

TEST(Gen, ReproduciblePerSeedAndSeedPrinted) {
  CliRun a = cli({"gen", "-n", "3", "--seed", "1"});
  CliRun b = cli({"gen", "-n", "3", "--seed", "1"});
  CliRun c = cli({"gen", "-n", "3", "--seed", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(lines(a.out).size(), 3u);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_NE(a.err.find("seed: 1"), std::string::npos);
  // no seed given: one is still reported
  CliRun d = cli({"gen", "-n", "2"});
  EXPECT_TRUE(std::regex_search(d.err, std::regex("seed: [0-9]+")));
}

TEST(Gen, Distributions) {
  auto circle = generate_points(500, Distribution::Circle, 5);
  for (const Point& p : circle) EXPECT_NEAR(std::hypot(p.x - 0.5, p.y - 0.5), 0.5, 1e-9);
  auto clustered = generate_points(4000, Distribution::Clustered, 5);
  ASSERT_EQ(clustered.size(), 4000u);
  // on a 10 x 10 histogram a uniform sample puts ~40 in each cell; eight
  // tight clusters pile hundreds into a few
  std::vector<int> hist(100);
  for (const Point& p : clustered) {
    int cx = std::clamp(static_cast<int>(p.x * 10), 0, 9), cy = std::clamp(static_cast<int>(p.y * 10), 0, 9);
    ++hist[cy * 10 + cx];
  }
  EXPECT_GT(*std::max_element(hist.begin(), hist.end()), 200);
  fs::path f = tmp("clustered.txt");
  ASSERT_EQ(cli({"gen", "-n", "100", "--dist", "clustered", "--seed", "3", "-o", f.string()}).code, 0);
  EXPECT_EQ(read_points(f.string()).size(), 100u);
}

TEST(Files, ParseErrorsNameTheLine) {
  fs::path p = tmp("bad_points.txt");
  write(p, "0 0\n# note\n\n1 x\n");
  try {
    read_points(p.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  fs::path q = tmp("bad_queries.txt");
  write(q, "0 0 1 1\n1 1 0 0\n");
  EXPECT_THROW(read_queries(q.string()), Error);
  EXPECT_THROW(read_points(tmp("missing").string()), Error);
}

TEST(Query, TwoPointsGiveTheDiameterDiskInEveryEngine) {
  fs::path p = tmp("two.txt"), q = tmp("two_q.txt");
  write(p, "0 0\n2 0\n9 9\n");
  write(q, "-1 -1 3 1\n5 5 6 6\n");
  for (std::string e : {"deterministic", "randomized", "brute"}) {
    CliRun r = cli({"query", p.string(), q.string(), "--engine", e, "--seed", "3", "--format", "json-lines"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    QueryReport a = parse_report_json(ls[0]);
    EXPECT_FALSE(a.empty);
    EXPECT_EQ(a.cx, 1);
    EXPECT_EQ(a.cy, 0);
    EXPECT_EQ(a.radius_sq, 1);
    EXPECT_EQ(a.line, 1);
    QueryReport b = parse_report_json(ls[1]);
    EXPECT_TRUE(b.empty);
    EXPECT_EQ(b.line, 2);
  }
  CliRun t = cli({"query", p.string(), q.string()});
  EXPECT_NE(t.out.find("empty"), std::string::npos);
  EXPECT_NE(t.out.find("radius 1 "), std::string::npos);
}

TEST(Query, DeterministicMatchesBruteOnRandomQueries) {
  sedq::testing::Rng rng(91);
  auto pts = sedq::testing::uniform_points(rng, 3000);
  RangeIndex index(pts);
  std::vector<Point> kept(index.points().begin(), index.points().end());
  for (int k = 0; k < 100; ++k) {
    Rect r = sedq::testing::random_rect(rng);
    QueryReport det = run_query(index, kept, QuerySpec{r, Engine::Deterministic, {}}, SelectMode::Pruned);
    QueryReport bru = run_query(index, kept, QuerySpec{r, Engine::Brute, {}}, SelectMode::Pruned);
    ASSERT_EQ(det.empty, bru.empty);
    if (det.empty) continue;
    // both report the disk of the same defining points
    EXPECT_EQ(det.cx, bru.cx) << k;
    EXPECT_EQ(det.cy, bru.cy) << k;
    EXPECT_EQ(det.radius_sq, bru.radius_sq) << k;
  }
}

TEST(Report, JsonRoundTrip) {
  QueryReport r;
  r.line = 17;
  r.engine = Engine::Randomized;
  r.empty = false;
  r.cx = 0.1 + 0.2;
  r.cy = -1e-300;
  r.radius_sq = 1.0 / 3;
  r.m = 9;
  r.sections = 4;
  r.oracle_calls = 123;
  r.separating_edges = 7;
  r.dist_comparisons = 4567;
  r.base_cases = 5;
  r.seconds = 1.25e-5;
  EXPECT_EQ(parse_report_json(report_json(r)), r);
  QueryReport e;
  e.line = 2;
  EXPECT_EQ(parse_report_json(report_json(e)), e);
  EXPECT_THROW(parse_report_json("{\"line\": 1}"), Error);
}

TEST(Verify, AgreementExitsZero) {
  fs::path p = tmp("verify.txt");
  write_points(p.string(), generate_points(1500, Distribution::Clustered, 8));
  CliRun r = cli({"verify", p.string(), "--random", "150", "--seed", "4"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("0 mismatches"), std::string::npos);
  EXPECT_NE(r.err.find("seed: 4"), std::string::npos);
  CliRun full = cli({"verify", p.string(), "--random", "50", "--seed", "5", "--mode", "full", "--engine", "randomized"});
  EXPECT_EQ(full.code, 0) << full.out;
  EXPECT_NE(full.out.find("50 engine runs"), std::string::npos);
}

TEST(Verify, CocircularInput) {
  fs::path p = tmp("circle.txt");
  write_points(p.string(), generate_points(800, Distribution::Circle, 2));
  CliRun r = cli({"verify", p.string(), "--random", "100", "--seed", "6"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Bench, RowsAndRatio) {
  CliRun two = cli({"bench", "--sizes", "256", "1024", "--queries", "20", "--seed", "1", "--format", "json-lines"});
  ASSERT_EQ(two.code, 0) << two.err;
  auto ls = lines(two.out);
  ASSERT_EQ(ls.size(), 2u * 3 + 3);  // size x engine rows, one ratio per engine
  EXPECT_EQ(count(two.out, "\"ratio\""), 3);
  CliRun one = cli({"bench", "--sizes", "512", "--queries", "10", "--seed", "1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(lines(one.out).size(), 1u + 3);  // header and three engines
  EXPECT_EQ(count(one.out, "ratio"), 0);
  EXPECT_EQ(cli({"bench", "--sizes", "1024", "256"}).code, 2);
}

TEST(Render, TriangleTwoPointsAndTooFew) {
  fs::path tri = tmp("tri.txt"), two = tmp("pair.txt"), one = tmp("one.txt"), svg = tmp("out.svg");
  write(tri, "0 0\n4 0\n1 3\n");
  ASSERT_EQ(cli({"render", tri.string(), "-o", svg.string()}).code, 0);
  std::stringstream s;
  s << std::ifstream(svg).rdbuf();
  std::string text = s.str();
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(text, "<line"), 3);  // three rays from the one vertex
  EXPECT_EQ(count(text, "class=\"disk\""), 1);
  EXPECT_EQ(count(text, "class=\"hull\""), 1);

  write(two, "0 0\n1 1\n");
  ASSERT_EQ(cli({"render", two.string(), "-o", svg.string()}).code, 0);
  std::stringstream s2;
  s2 << std::ifstream(svg).rdbuf();
  EXPECT_EQ(count(s2.str(), "<line"), 1);  // the bisector

  write(one, "0 0\n5 5\n");
  CliRun r = cli({"render", one.string(), "--rect", "-1", "-1", "1", "1", "-o", svg.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("TooFewPoints"), std::string::npos);
}

TEST(Render, RectDiskCoversExactlyTheInsidePoints) {
  sedq::testing::Rng rng(92);
  auto pts = sedq::testing::uniform_points(rng, 100);
  Rect q{0.2, 0.7, 0.1, 0.8};
  std::string svg = render_svg(pts, q);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("class=\"disk\" cx=\"([^\"]+)\" cy=\"([^\"]+)\" r=\"([^\"]+)\"")));
  Disk want = welzl(filter_rect(pts, q));
  EXPECT_NEAR(std::stod(m[3]), std::sqrt(want.radius_sq), 1e-8);
}

TEST(Binary, ExitCodes) {
  const char* bin = std::getenv("SEDQ_CLI");
  if (!bin) GTEST_SKIP() << "SEDQ_CLI not set";
  fs::path p = tmp("bin_points.txt"), q = tmp("bin_q.txt"), bad = tmp("bin_bad.txt");
  write(p, "0 0\n1 0\n0 1\n1 1\n");
  write(q, "0 0 1 1\n");
  write(bad, "0 0 1\n");
  auto run = [&](const std::string& args) {
    int s = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(run("query " + p.string() + " " + q.string()), 0);
  EXPECT_EQ(run("query " + p.string() + " " + bad.string()), 2);
  EXPECT_EQ(run("query " + p.string() + " " + q.string() + " --engine nope"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("verify " + p.string() + " " + q.string() + " --seed 1"), 0);
}
