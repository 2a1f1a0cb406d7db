#ifndef SEDQ_CLI_H
#define SEDQ_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedq/geom.h"
#include "sedq/range_index.h"

namespace sedq {

enum class Engine : std::uint8_t { Deterministic, Randomized, Brute };
const char* engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& s);

struct QuerySpec {
  Rect rect;
  Engine engine = Engine::Deterministic;
  std::optional<std::uint64_t> seed;
};

struct QueryReport {
  std::int64_t line = 0;  // 1-based line of the query file
  Engine engine = Engine::Deterministic;
  bool empty = true;
  double cx = 0, cy = 0, radius_sq = 0;
  std::int64_t m = 0;
  std::int64_t sections = 0;
  std::int64_t oracle_calls = 0;
  std::int64_t separating_edges = 0;
  std::int64_t dist_comparisons = 0;
  std::int64_t base_cases = 0;
  double seconds = 0;
  bool operator==(const QueryReport&) const = default;
};

std::string report_json(const QueryReport& r);
QueryReport parse_report_json(const std::string& line);
std::string report_text(const QueryReport& r);

// "x y" per line; blank lines and lines starting with '#' are skipped. Ids
// follow the order of the points. ParseError names the line.
std::vector<Point> read_points(const std::string& path);
void write_points(const std::string& path, std::span<const Point> pts);
// "x_lo y_lo x_hi y_hi" per line, with the file line of each rectangle.
std::vector<std::pair<std::int64_t, Rect>> read_queries(const std::string& path);

enum class Distribution : std::uint8_t { Uniform, Clustered, Circle };
std::optional<Distribution> parse_distribution(const std::string& s);
// uniform: [0,1]^2. clustered: 8 clusters, centers uniform in [0.1,0.9]^2,
// offsets N(0, 0.03) per axis. circle: on the circle of radius 0.5 about
// (0.5, 0.5).
std::vector<Point> generate_points(int n, Distribution d, std::uint64_t seed);

// Runs one query; `kept` are the index's deduplicated points (for brute).
QueryReport run_query(const RangeIndex& index, std::span<const Point> kept, const QuerySpec& q,
                      SelectMode mode);
Disk report_disk_brute(std::span<const Point> kept, const Rect& q);

// Points, hull, diagram (rays clipped to the view) and the disk of the
// points inside rect (all points without one).
std::string render_svg(std::span<const Point> pts, const std::optional<Rect>& rect);

// The whole command line; returns the exit code (0 ok, 1 verification
// failure, 2 usage or input error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sedq

#endif
