#include "sedq/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sedq/error.h"
#include "sedq/fpvd.h"
#include "sedq/hull.h"
#include "sedq/oracles.h"
#include "sedq/sed_multi.h"
#include "sedq/sed_randomized.h"

namespace sedq {

using nlohmann::json;

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Deterministic: return "deterministic";
    case Engine::Randomized: return "randomized";
    case Engine::Brute: return "brute";
  }
  return "?";
}

std::optional<Engine> parse_engine(const std::string& s) {
  for (Engine e : {Engine::Deterministic, Engine::Randomized, Engine::Brute})
    if (s == engine_name(e)) return e;
  return std::nullopt;
}

std::optional<Distribution> parse_distribution(const std::string& s) {
  if (s == "uniform") return Distribution::Uniform;
  if (s == "clustered") return Distribution::Clustered;
  if (s == "circle") return Distribution::Circle;
  return std::nullopt;
}

std::string report_json(const QueryReport& r) {
  json j = {{"line", r.line},
            {"engine", engine_name(r.engine)},
            {"empty", r.empty},
            {"m", r.m},
            {"sections", r.sections},
            {"oracle_calls", r.oracle_calls},
            {"separating_edges", r.separating_edges},
            {"dist_comparisons", r.dist_comparisons},
            {"base_cases", r.base_cases},
            {"seconds", r.seconds}};
  if (!r.empty) {
    j["center"] = {r.cx, r.cy};
    j["radius"] = std::sqrt(r.radius_sq);
    j["radius_sq"] = r.radius_sq;
  }
  return j.dump();
}

QueryReport parse_report_json(const std::string& line) {
  QueryReport r;
  try {
    json j = json::parse(line);
    r.line = j.at("line").get<std::int64_t>();
    auto e = parse_engine(j.at("engine").get<std::string>());
    if (!e) throw Error(ErrorCode::ParseError, "unknown engine in report");
    r.engine = *e;
    r.empty = j.at("empty").get<bool>();
    r.m = j.at("m").get<std::int64_t>();
    r.sections = j.at("sections").get<std::int64_t>();
    r.oracle_calls = j.at("oracle_calls").get<std::int64_t>();
    r.separating_edges = j.at("separating_edges").get<std::int64_t>();
    r.dist_comparisons = j.at("dist_comparisons").get<std::int64_t>();
    r.base_cases = j.at("base_cases").get<std::int64_t>();
    r.seconds = j.at("seconds").get<double>();
    if (!r.empty) {
      r.cx = j.at("center").at(0).get<double>();
      r.cy = j.at("center").at(1).get<double>();
      r.radius_sq = j.at("radius_sq").get<double>();
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + ex.what());
  }
  return r;
}

std::string report_text(const QueryReport& r) {
  std::ostringstream os;
  os << "query " << r.line << " [" << engine_name(r.engine) << "] ";
  if (r.empty) {
    os << "empty";
  } else {
    os << std::setprecision(17) << "center (" << r.cx << ", " << r.cy << ") radius " << std::sqrt(r.radius_sq);
  }
  os << std::setprecision(6) << " | m=" << r.m << " sections=" << r.sections << " oracle_calls=" << r.oracle_calls
     << " separating_edges=" << r.separating_edges << " dist_comparisons=" << r.dist_comparisons
     << " base_cases=" << r.base_cases << " time=" << r.seconds * 1e6 << "us";
  return os.str();
}

namespace {

// Whitespace-separated finite doubles of one line; nothing for a blank or
// comment line.
std::optional<std::vector<double>> numbers(const std::string& s, std::int64_t line, std::size_t want) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i == s.size() || s[i] == '#') return std::nullopt;
  std::vector<double> out;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    double v = 0;
    const char* b = s.data() + i;
    const char* e = s.data() + j;
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || !std::isfinite(v))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" + s.substr(i, j - i) + "'");
    out.push_back(v);
    i = j;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  if (out.size() != want)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected " + std::to_string(want) +
                                           " numbers, got " + std::to_string(out.size()));
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return in;
}

}  // namespace

std::vector<Point> read_points(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<Point> out;
  std::string s;
  for (std::int64_t line = 1; std::getline(in, s); ++line)
    if (auto v = numbers(s, line, 2)) out.push_back(Point{(*v)[0], (*v)[1], static_cast<std::int32_t>(out.size())});
  return out;
}

void write_points(const std::string& path, std::span<const Point> pts) {
  std::ofstream o(path);
  if (!o) throw Error(ErrorCode::IoError, "cannot write " + path);
  o << std::setprecision(17);
  for (const Point& p : pts) o << p.x << ' ' << p.y << '\n';
  if (!o) throw Error(ErrorCode::IoError, "write failed: " + path);
}

std::vector<std::pair<std::int64_t, Rect>> read_queries(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::pair<std::int64_t, Rect>> out;
  std::string s;
  for (std::int64_t line = 1; std::getline(in, s); ++line) {
    auto v = numbers(s, line, 4);
    if (!v) continue;
    Rect r{(*v)[0], (*v)[2], (*v)[1], (*v)[3]};
    if (!r.valid()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": lo exceeds hi");
    out.emplace_back(line, r);
  }
  return out;
}

std::vector<Point> generate_points(int n, Distribution d, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::TooFewPoints, "n must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point> out;
  out.reserve(n);
  switch (d) {
    case Distribution::Uniform:
      for (int i = 0; i < n; ++i) {
        double x = u(rng);
        out.push_back(Point{x, u(rng), i});
      }
      break;
    case Distribution::Clustered: {
      std::uniform_real_distribution<double> c(0.1, 0.9);
      std::normal_distribution<double> g(0, 0.03);
      std::vector<Point> centers;
      for (int k = 0; k < 8; ++k) {
        double x = c(rng);
        centers.push_back(Point{x, c(rng), k});
      }
      for (int i = 0; i < n; ++i) {
        const Point& o = centers[rng() % centers.size()];
        double x = o.x + g(rng);
        out.push_back(Point{x, o.y + g(rng), i});
      }
      break;
    }
    case Distribution::Circle: {
      const double two_pi = 2 * std::acos(-1.0);
      for (int i = 0; i < n; ++i) {
        double a = two_pi * u(rng);
        out.push_back(Point{0.5 + 0.5 * std::cos(a), 0.5 + 0.5 * std::sin(a), i});
      }
      break;
    }
  }
  return out;
}

Disk report_disk_brute(std::span<const Point> kept, const Rect& q) {
  std::vector<Point> in = filter_rect(kept, q);
  if (in.empty()) throw Error(ErrorCode::EmptyQuery, "no points in the rectangle");
  return welzl(in);
}

QueryReport run_query(const RangeIndex& index, std::span<const Point> kept, const QuerySpec& q,
                      SelectMode mode) {
  QueryReport r;
  r.engine = q.engine;
  WorkCounters before = counters();
  auto t0 = std::chrono::steady_clock::now();
  std::optional<Disk> disk;
  switch (q.engine) {
    case Engine::Deterministic: {
      QueryResult res = sed_query(index, q.rect, mode);
      r.m = res.m;
      r.sections = res.detail.sections;
      if (!res.empty) disk = res.disk;
      break;
    }
    case Engine::Randomized: {
      CanonicalSelection sel = index.query(q.rect, mode);
      r.m = static_cast<std::int64_t>(sel.sets.size());
      if (!sel.sets.empty()) {
        DmdResult res = dmd_query(sel, q.seed.value_or(0));
        r.base_cases = res.stats.base_cases_solved;
        disk = res.disk;
      }
      break;
    }
    case Engine::Brute: {
      std::vector<Point> in = filter_rect(kept, q.rect);
      if (!in.empty()) disk = welzl(in);
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const WorkCounters& after = counters();
  r.oracle_calls = static_cast<std::int64_t>(after.oracle_calls - before.oracle_calls);
  r.separating_edges = static_cast<std::int64_t>(after.separating_edges - before.separating_edges);
  r.dist_comparisons = static_cast<std::int64_t>(after.dist_comparisons - before.dist_comparisons);
  if (disk) {
    r.empty = false;
    r.cx = disk->center.x;
    r.cy = disk->center.y;
    r.radius_sq = disk->radius_sq;
  }
  return r;
}

// --------------------------------------------------------------------------
// SVG

namespace {

struct View {
  double x0, y0, x1, y1;  // world box
  double sx(double x) const { return x - x0; }
  double sy(double y) const { return y1 - y; }  // flip
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

}  // namespace

std::string render_svg(std::span<const Point> pts, const std::optional<Rect>& rect) {
  std::vector<Point> in;
  for (const Point& p : pts)
    if (!rect || rect->contains(p)) in.push_back(p);
  if (in.size() < 2) throw Error(ErrorCode::TooFewPoints, "render needs at least two points in range");

  Hull hull = build_hull(in);
  Fpvd diagram = build_fpvd(hull);
  FpvdView f = diagram.view();
  Disk disk = welzl(in);
  if (rect) {
    RangeIndex index(pts);
    QueryResult res = sed_query(index, *rect, SelectMode::Pruned);
    disk = res.disk;
  }

  double r = std::sqrt(disk.radius_sq);
  double x0 = disk.center.x - r, x1 = disk.center.x + r, y0 = disk.center.y - r, y1 = disk.center.y + r;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  double pad = 0.08 * std::max({x1 - x0, y1 - y0, 1e-9});
  View v{x0 - pad, y0 - pad, x1 + pad, y1 + pad};
  double w = v.x1 - v.x0, hgt = v.y1 - v.y0;
  double dot = 0.006 * std::max(w, hgt), stroke = 0.002 * std::max(w, hgt);
  double far = 4 * std::hypot(w, hgt);  // rays leave the view well before this

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(hgt)
    << "\" width=\"800\" height=\"" << fmt(800 * hgt / w) << "\">\n";
  o << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(hgt)
    << "\"/></clipPath></defs>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(hgt) << "\" fill=\"white\"/>\n";
  if (rect)
    o << "<rect class=\"query\" x=\"" << fmt(v.sx(rect->x_lo)) << "\" y=\"" << fmt(v.sy(rect->y_hi)) << "\" width=\""
      << fmt(rect->x_hi - rect->x_lo) << "\" height=\"" << fmt(rect->y_hi - rect->y_lo)
      << "\" fill=\"#eef4ff\" stroke=\"#7799cc\" stroke-width=\"" << fmt(stroke) << "\"/>\n";

  o << "<g class=\"fpvd\" clip-path=\"url(#view)\" stroke=\"#cc4444\" stroke-width=\"" << fmt(stroke) << "\">\n";
  for (std::int32_t e = 0; e < f.ne; ++e) {
    std::int32_t a = f.edge_vertex(e, 0), b = f.edge_vertex(e, 1);
    Point p, q;
    if (a >= 0 && b >= 0) {
      p = f.vertex_position(a);
      q = f.vertex_position(b);
    } else {
      Point d = f.unbounded_direction(e);
      double len = std::hypot(d.x, d.y);
      d.x /= len;
      d.y /= len;
      if (a < 0 && b < 0) {  // two points: the whole bisector
        const Point& s = f.hull[0];
        const Point& t = f.hull[1];
        Point mid{(s.x + t.x) / 2, (s.y + t.y) / 2, -1};
        p = Point{mid.x - far * d.x, mid.y - far * d.y, -1};
        q = Point{mid.x + far * d.x, mid.y + far * d.y, -1};
      } else {
        p = f.vertex_position(a >= 0 ? a : b);
        q = Point{p.x + far * d.x, p.y + far * d.y, -1};
      }
    }
    o << "<line x1=\"" << fmt(v.sx(p.x)) << "\" y1=\"" << fmt(v.sy(p.y)) << "\" x2=\"" << fmt(v.sx(q.x))
      << "\" y2=\"" << fmt(v.sy(q.y)) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<polygon class=\"hull\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" << fmt(stroke) << "\" points=\"";
  for (std::int32_t i = 0; i < hull.size(); ++i)
    o << (i ? " " : "") << fmt(v.sx(hull[i].x)) << ',' << fmt(v.sy(hull[i].y));
  o << "\"/>\n";

  o << "<circle class=\"disk\" cx=\"" << fmt(v.sx(disk.center.x)) << "\" cy=\"" << fmt(v.sy(disk.center.y))
    << "\" r=\"" << fmt(r) << "\" fill=\"none\" stroke=\"#228833\" stroke-width=\"" << fmt(1.5 * stroke) << "\"/>\n";

  o << "<g class=\"points\">\n";
  for (const Point& p : pts) {
    bool inside = !rect || rect->contains(p);
    o << "<circle cx=\"" << fmt(v.sx(p.x)) << "\" cy=\"" << fmt(v.sy(p.y)) << "\" r=\"" << fmt(dot)
      << "\" fill=\"" << (inside ? "#111111" : "#bbbbbb") << "\"/>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

// --------------------------------------------------------------------------
// command line

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& s, std::ostream& err) {
  std::uint64_t v = s ? *s
                      : static_cast<std::uint64_t>(
                            std::chrono::high_resolution_clock::now().time_since_epoch().count());
  err << "seed: " << v << '\n';
  return v;
}

SelectMode parse_mode(const std::string& s) { return s == "full" ? SelectMode::Full : SelectMode::Pruned; }

std::vector<std::pair<std::int64_t, Rect>> random_queries(std::span<const Point> pts, int k, std::uint64_t seed) {
  double x0 = pts[0].x, x1 = x0, y0 = pts[0].y, y1 = y0;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::vector<std::pair<std::int64_t, Rect>> out;
  for (int i = 0; i < k; ++i) {
    double a = ux(rng), b = ux(rng), c = uy(rng), d = uy(rng);
    out.emplace_back(i + 1, Rect{std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)});
  }
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0 : s / static_cast<double>(v.size());
}

struct Options {
  std::string points, queries, out, dist = "uniform", engine = "deterministic", mode = "pruned",
                                    format = "text", verify_engine = "all";
  std::optional<std::uint64_t> seed;
  int n = 0;
  int random = 0;
  int per_size = 100;
  double tol = 1e-9;
  std::vector<int> sizes;
  std::vector<double> rect;
};

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = resolve_seed(o.seed, err);
  auto pts = generate_points(o.n, *parse_distribution(o.dist), seed);
  if (o.out.empty() || o.out == "-") {
    out << std::setprecision(17);
    for (const Point& p : pts) out << p.x << ' ' << p.y << '\n';
  } else {
    write_points(o.out, pts);
  }
  return 0;
}

int cmd_build_info(const Options& o, std::ostream& out) {
  auto pts = read_points(o.points);
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "no points in " + o.points);
  RangeIndex index(pts);
  const IndexStats& s = index.stats();
  if (o.format == "json-lines") {
    json j = {{"points", s.points},
              {"duplicates", s.duplicates},
              {"primary_nodes", s.primary_nodes},
              {"secondary_nodes", s.secondary_nodes},
              {"stored_points", s.stored_points},
              {"stored_constant", s.stored_constant()},
              {"hull_vertices", s.hull_vertices},
              {"block_ints", s.block_ints},
              {"build_seconds", s.build_seconds}};
    out << j.dump() << '\n';
  } else {
    out << "points " << s.points << "\nduplicates " << s.duplicates << "\nprimary_nodes " << s.primary_nodes
        << "\nsecondary_nodes " << s.secondary_nodes << "\nstored_points " << s.stored_points
        << "\nstored_points / (n log2^2 n) " << s.stored_constant() << "\nhull_vertices " << s.hull_vertices
        << "\ndiagram_ints " << s.block_ints << "\nbuild_seconds " << s.build_seconds << '\n';
  }
  return 0;
}

int cmd_query(const Options& o, std::ostream& out, std::ostream& err) {
  Engine engine = *parse_engine(o.engine);
  std::uint64_t seed = engine == Engine::Randomized ? resolve_seed(o.seed, err) : o.seed.value_or(0);
  auto pts = read_points(o.points);
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "no points in " + o.points);
  auto queries = read_queries(o.queries);
  RangeIndex index(pts);
  std::vector<Point> kept(index.points().begin(), index.points().end());
  for (const auto& [line, rect] : queries) {
    QueryReport r = run_query(index, kept, QuerySpec{rect, engine, seed + static_cast<std::uint64_t>(line)},
                              parse_mode(o.mode));
    r.line = line;
    out << (o.format == "json-lines" ? report_json(r) : report_text(r)) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = resolve_seed(o.seed, err);
  auto pts = read_points(o.points);
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "no points in " + o.points);
  auto queries = o.queries.empty() ? random_queries(pts, o.random > 0 ? o.random : 100, seed) : read_queries(o.queries);
  RangeIndex index(pts);
  std::vector<Point> kept(index.points().begin(), index.points().end());
  std::vector<Engine> engines;
  if (o.verify_engine != "randomized") engines.push_back(Engine::Deterministic);
  if (o.verify_engine != "deterministic") engines.push_back(Engine::Randomized);
  std::int64_t checked = 0, bad = 0;
  for (const auto& [line, rect] : queries) {
    std::vector<Point> in = filter_rect(kept, rect);
    std::optional<Disk> want;
    if (!in.empty()) want = welzl(in);
    for (Engine e : engines) {
      QueryReport r =
          run_query(index, kept, QuerySpec{rect, e, seed + static_cast<std::uint64_t>(line)}, parse_mode(o.mode));
      ++checked;
      bool ok = r.empty == !want.has_value();
      if (ok && want) {
        Disk got;
        got.center = Point{r.cx, r.cy, -1};
        got.radius_sq = r.radius_sq;
        ok = same_disk(got, *want, o.tol);
      }
      if (!ok) {
        ++bad;
        r.line = line;
        out << "MISMATCH " << report_text(r) << '\n';
      }
    }
  }
  out << "verified " << checked << " engine runs over " << queries.size() << " queries, " << bad << " mismatches\n";
  return bad == 0 ? 0 : 1;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = resolve_seed(o.seed, err);
  std::vector<int> sizes = o.sizes;
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw Error(ErrorCode::ParseError, "sizes must be ascending");
  std::vector<Point> file;
  if (!o.points.empty()) file = read_points(o.points);
  const bool js = o.format == "json-lines";
  std::vector<Engine> engines = {Engine::Deterministic, Engine::Randomized, Engine::Brute};
  // mean distance comparisons per engine and size
  std::vector<std::vector<double>> dist_means(engines.size());
  if (!js)
    out << std::left << std::setw(9) << "n" << std::setw(15) << "engine" << std::setw(8) << "m" << std::setw(14)
        << "dist_mean" << std::setw(14) << "dist_median" << std::setw(12) << "oracle" << std::setw(10) << "sepedges"
        << std::setw(10) << "bases" << "us_median\n";
  for (int n : sizes) {
    std::vector<Point> pts;
    if (!file.empty()) {
      if (static_cast<std::size_t>(n) > file.size())
        throw Error(ErrorCode::TooFewPoints, "size " + std::to_string(n) + " exceeds the point file");
      pts.assign(file.begin(), file.begin() + n);
    } else {
      pts = generate_points(n, Distribution::Uniform, seed + static_cast<std::uint64_t>(n));
    }
    RangeIndex index(pts);
    std::vector<Point> kept(index.points().begin(), index.points().end());
    auto queries = random_queries(kept, o.per_size, seed ^ static_cast<std::uint64_t>(n));
    for (std::size_t k = 0; k < engines.size(); ++k) {
      std::vector<double> m, dist, oracle, sep, bases, secs;
      for (const auto& [line, rect] : queries) {
        QueryReport r = run_query(index, kept, QuerySpec{rect, engines[k], seed + static_cast<std::uint64_t>(line)},
                                  parse_mode(o.mode));
        if (r.empty) continue;
        m.push_back(static_cast<double>(r.m));
        dist.push_back(static_cast<double>(r.dist_comparisons));
        oracle.push_back(static_cast<double>(r.oracle_calls));
        sep.push_back(static_cast<double>(r.separating_edges));
        bases.push_back(static_cast<double>(r.base_cases));
        secs.push_back(r.seconds);
      }
      dist_means[k].push_back(mean(dist));
      if (js) {
        json j = {{"n", n},
                  {"engine", engine_name(engines[k])},
                  {"queries", dist.size()},
                  {"m_mean", mean(m)},
                  {"dist_comparisons_mean", mean(dist)},
                  {"dist_comparisons_median", median(dist)},
                  {"oracle_calls_mean", mean(oracle)},
                  {"separating_edges_mean", mean(sep)},
                  {"base_cases_mean", mean(bases)},
                  {"seconds_mean", mean(secs)},
                  {"seconds_median", median(secs)}};
        out << j.dump() << '\n';
      } else {
        out << std::left << std::setw(9) << n << std::setw(15) << engine_name(engines[k]) << std::setw(8)
            << std::setprecision(4) << mean(m) << std::setw(14) << std::setprecision(8) << mean(dist)
            << std::setw(14) << median(dist) << std::setw(12) << mean(oracle) << std::setw(10) << mean(sep)
            << std::setw(10) << mean(bases) << std::setprecision(6) << median(secs) * 1e6 << '\n';
      }
    }
  }
  if (sizes.size() >= 2) {
    double lg0 = std::log2(sizes.front()), lg1 = std::log2(sizes.back());
    double poly = std::pow(lg1 / lg0, 4);
    for (std::size_t k = 0; k < engines.size(); ++k) {
      double ratio = dist_means[k].front() > 0 ? dist_means[k].back() / dist_means[k].front() : 0;
      if (js) {
        json j = {{"ratio", "dist_comparisons"},
                  {"engine", engine_name(engines[k])},
                  {"from", sizes.front()},
                  {"to", sizes.back()},
                  {"value", ratio},
                  {"log4_ratio", poly}};
        out << j.dump() << '\n';
      } else {
        out << "ratio dist_comparisons " << engine_name(engines[k]) << " n=" << sizes.back() << "/n=" << sizes.front()
            << ": " << ratio << " (log^4 ratio " << poly << ")\n";
      }
    }
  }
  return 0;
}

int cmd_render(const Options& o) {
  auto pts = read_points(o.points);
  std::optional<Rect> rect;
  if (!o.rect.empty()) {
    rect = Rect{o.rect[0], o.rect[2], o.rect[1], o.rect[3]};
    if (!rect->valid()) throw Error(ErrorCode::ParseError, "--rect: lo exceeds hi");
  }
  std::string svg = render_svg(pts, rect);
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + o.out);
  f << svg;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smallest enclosing disk range queries"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> engines = {"deterministic", "randomized", "brute"};
  const std::vector<std::string> formats = {"text", "json-lines"};
  const std::vector<std::string> modes = {"pruned", "full"};

  auto* gen = app.add_subcommand("gen", "write random points, one \"x y\" per line");
  gen->add_option("-n,--n", o.n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--dist", o.dist, "uniform | clustered | circle")
      ->check(CLI::IsMember({"uniform", "clustered", "circle"}));
  gen->add_option("--seed", o.seed, "RNG seed (default: time-derived, printed)");
  gen->add_option("-o,--out", o.out, "output file (default stdout)");

  auto* info = app.add_subcommand("build-info", "build the index and print its size");
  info->add_option("points", o.points)->required();
  info->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* query = app.add_subcommand("query", "answer \"x_lo y_lo x_hi y_hi\" queries");
  query->add_option("points", o.points)->required();
  query->add_option("queries", o.queries)->required();
  query->add_option("--engine", o.engine)->check(CLI::IsMember(engines));
  query->add_option("--seed", o.seed, "base seed of the randomized engine (query line added)");
  query->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  query->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "compare engines with Welzl on the filtered points");
  verify->add_option("points", o.points)->required();
  verify->add_option("queries", o.queries, "query file (default: random rectangles)");
  verify->add_option("--random", o.random, "number of random rectangles")->check(CLI::PositiveNumber);
  verify->add_option("--engine", o.verify_engine)->check(CLI::IsMember({"all", "deterministic", "randomized"}));
  verify->add_option("--seed", o.seed);
  verify->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  verify->add_option("--tol", o.tol, "relative tolerance on radius and center")->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "work counters per engine and size");
  bench->add_option("--sizes", o.sizes, "ascending point counts")->required()->check(CLI::PositiveNumber);
  bench->add_option("--points", o.points, "take prefixes of this file instead of uniform points");
  bench->add_option("--queries", o.per_size, "queries per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed);
  bench->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  bench->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* render = app.add_subcommand("render", "SVG of points, hull, diagram and disk");
  render->add_option("points", o.points)->required();
  render->add_option("--rect", o.rect, "x_lo y_lo x_hi y_hi")->expected(4);
  render->add_option("-o,--out", o.out)->required();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(o, out, err);
    if (*info) return cmd_build_info(o, out);
    if (*query) return cmd_query(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
    if (*render) return cmd_render(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    // a failed internal check is a failed verification, not bad input
    return e.code() == ErrorCode::InvariantViolation ? 1 : 2;
  }
  return 2;
}

}  // namespace sedq
