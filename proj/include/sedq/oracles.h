#ifndef SEDQ_ORACLES_H
#define SEDQ_ORACLES_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sedq/fpvd.h"
#include "sedq/geom.h"
#include "sedq/hull.h"

namespace sedq {

// Smallest enclosing disk by randomized incremental construction.
Disk welzl(std::span<const Point> points, std::uint64_t seed = 0x5eed);

// Whether the disk is defined by an antipodal pair or a non-obtuse triangle
// of points on its boundary, and covers every point.
bool is_valid_sed(const Disk& d, std::span<const Point> points);

std::vector<Point> filter_rect(std::span<const Point> points, const Rect& q);

// Gift-wrapping hull, clockwise from the lexicographic minimum.
Hull jarvis_hull(std::span<const Point> points);

// Diagram by enumerating all triples of hull points. Co-circular groups of
// four or more are triangulated as a fan from their smallest hull index.
struct BruteFpvd {
  Fpvd fpvd;
  std::vector<Point> positions;  // long double circumcenters, per vertex
};
BruteFpvd brute_fpvd(std::span<const Point> points);
// Assembles a diagram from its vertex triples (hull indices).
Fpvd assemble_fpvd(const Hull& hull, std::span<const std::array<std::int32_t, 3>> triples);

// Set families for the lifted minidisk: `all` holds every set, S and R are
// indices into it.
using PointSet = std::vector<Point>;
struct BaseCase {
  std::vector<int> sets;
  Disk disk;
};
std::vector<BaseCase> fcases(const std::vector<PointSet>& all, const std::vector<int>& S,
                             const std::vector<int>& R);

struct MiniDisk {
  bool defined = false;
  Disk disk;
};
// Sets are drawn in the given order (the first one still present each time).
MiniDisk set_minidisk(const std::vector<PointSet>& all, const std::vector<int>& S,
                      const std::vector<int>& R, std::span<const int> order);
MiniDisk set_minidisk(const std::vector<PointSet>& all, const std::vector<int>& S,
                      const std::vector<int>& R, std::uint64_t seed);

// Fixture searches for the lifted minidisk failures, over singleton sets.
// Five points where SetMiniDisk, drawing S5, S4, S3, reaches the undefined
// smd({S1,S2},{S4,S5}) (indices 0..4 are S1..S5).
std::optional<std::vector<Point>> find_minidisk_counterexample(std::uint64_t seed, int tries);
// Four points with smd({S1,S4},{S2,S3}) undefined.
std::optional<std::vector<Point>> find_undefined_four(std::uint64_t seed, int tries);

}  // namespace sedq

#endif
