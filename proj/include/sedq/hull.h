#ifndef SEDQ_HULL_H
#define SEDQ_HULL_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sedq/geom.h"

namespace sedq {

/* Read-only view of a clockwise hull, starting at the lexicographic minimum.
   Vertices are base[idx[i]] when idx is set, base[i] otherwise. */
struct HullView {
  const Point* base = nullptr;
  const std::int32_t* idx = nullptr;
  std::int32_t size = 0;

  const Point& operator[](std::int32_t i) const { return idx ? base[idx[i]] : base[i]; }
  std::int32_t next(std::int32_t i) const { return i + 1 == size ? 0 : i + 1; }
  std::int32_t prev(std::int32_t i) const { return i == 0 ? size - 1 : i - 1; }
  std::int32_t wrap(std::int64_t i) const {
    return static_cast<std::int32_t>(((i % size) + size) % size);
  }
};

struct Hull {
  std::vector<Point> vertices;

  std::int32_t size() const { return static_cast<std::int32_t>(vertices.size()); }
  const Point& operator[](std::int32_t i) const { return vertices[i]; }
  HullView view() const { return HullView{vertices.data(), nullptr, size()}; }
};

// Clockwise run a..b (inclusive, wrapping) of a hull owned by canonical set `owner`.
struct Section {
  std::int32_t owner = -1;
  std::int32_t a = 0;
  std::int32_t b = 0;
  bool closed = false;  // the run is the whole union hull, so b is followed by a
};

// Number of points in the run a..b of a hull with h vertices.
inline std::int32_t cyc_len(std::int32_t h, std::int32_t a, std::int32_t b) {
  return ((b - a) % h + h) % h + 1;
}
// Whether index i lies in the run a..b.
inline bool cyc_contains(std::int32_t h, std::int32_t a, std::int32_t b, std::int32_t i) {
  return ((i - a) % h + h) % h <= ((b - a) % h + h) % h;
}
// Offset of i from a in clockwise steps.
inline std::int32_t cyc_pos(std::int32_t h, std::int32_t a, std::int32_t i) {
  return ((i - a) % h + h) % h;
}
// The run strictly between a and b, or nothing when a and b are adjacent.
std::optional<Section> inner_section(std::int32_t h, std::int32_t a, std::int32_t b,
                                     std::int32_t owner = -1);

Hull build_hull(std::span<const Point> points);
Hull merge_hulls(const HullView& h1, const HullView& h2);
// Hull of already lexicographically sorted, duplicate-free points.
void hull_from_sorted(std::span<const Point> sorted, std::vector<Point>& out);
// Vertices of a hull in lexicographic order, in linear time.
void lex_sorted_vertices(const HullView& h, std::vector<Point>& out);

std::vector<Point> section_points(const HullView& h, const Section& s);

enum class Side { Right, Left };

// Vertex t such that every vertex of h lies on `side` of, or on, the directed
// line x -> h[t]; among collinear candidates the one farthest from x. x must
// not lie in the interior of h.
std::int32_t tangent_from_point(const HullView& h, const Point& x, Side side);
std::int32_t tangent_from_point_linear(const HullView& h, const Point& x, Side side);

// Outer common tangent as met by a clockwise walk of the union hull: it
// leaves one hull at `from` and reaches the other at `to`, with every vertex
// of both hulls on its right or on it.
struct Bridge {
  std::int32_t from = -1;
  std::int32_t to = -1;
};
struct Tangents {
  Bridge h1_to_h2;
  Bridge h2_to_h1;
};
Bridge bridge(const HullView& p, const HullView& q);
// Nothing when no union hull edge leads from p to q (q hidden behind p).
std::optional<Bridge> find_bridge(const HullView& p, const HullView& q);
Tangents tangent_between(const HullView& h1, const HullView& h2);
Tangents tangent_between_brute(const HullView& h1, const HullView& h2);

// Index of the lexicographically largest vertex (binary search on the
// lexicographically bitonic vertex order).
std::int32_t lex_max_index(const HullView& h);
// A vertex maximising (ux, uy) . p; floating-point direction test.
std::int32_t extreme_vertex(const HullView& h, double ux, double uy);
// Whether p lies strictly inside the hull (h >= 3).
bool strictly_inside(const HullView& h, const Point& p);
// Every vertex of inner strictly inside outer (outer.size >= 3); one exact
// extreme-vertex probe per outer edge.
bool hull_strictly_inside(const HullView& outer, const HullView& inner);

}  // namespace sedq

#endif
