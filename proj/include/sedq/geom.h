#ifndef SEDQ_GEOM_H
#define SEDQ_GEOM_H

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sedq/error.h"

namespace sedq {

struct Point {
  double x = 0;
  double y = 0;
  std::int32_t id = -1;
};

inline bool same_position(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Rect {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
  // closed rectangle
  bool contains(const Point& p) const {
    return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
  }
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

// Disk with the input points that define it (1-3 of them, sorted by id).
struct Disk {
  Point center;
  double radius_sq = 0;
  int support_size = 0;
  std::array<Point, 3> support{};
};

// Per-thread work accounting used by the benchmarks and the bound checks.
struct WorkCounters {
  std::uint64_t predicates = 0;
  std::uint64_t exact_fallbacks = 0;
  std::uint64_t dist_comparisons = 0;
  std::uint64_t searches = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t max_search_calls = 0;
  // smallest (bound - calls) over all searches; never negative once checked
  std::int64_t min_search_slack = 1 << 30;
  std::uint64_t separating_edges = 0;
  void reset() { *this = WorkCounters{}; }
};
WorkCounters& counters();

// ---------------------------------------------------------------------------
// Number types for filtered evaluation: Approx is a double with a running
// absolute error bound, Rational is exact.

struct Approx {
  double v = 0;
  double e = 0;
  Approx() = default;
  Approx(double value) : v(value), e(0) {}  // NOLINT: exact lift
  Approx(double value, double err) : v(value), e(err) {}

  std::optional<int> sign() const {
    if (!std::isfinite(v) || !std::isfinite(e)) return std::nullopt;
    if (v > e) return 1;
    if (-v > e) return -1;
    if (v == 0 && e == 0) return 0;
    return std::nullopt;
  }
};

namespace detail {
constexpr double kU = 1.1102230246251565e-16;  // 2^-53
constexpr double kGrow = 1.0 + 8 * kU;
constexpr double kTiny = std::numeric_limits<double>::denorm_min();
}  // namespace detail

inline Approx operator+(const Approx& a, const Approx& b) {
  double v = a.v + b.v;
  if (a.e == 0 && b.e == 0 && v == 0) return {0.0, 0.0};
  return {v, (a.e + b.e + detail::kU * std::fabs(v)) * detail::kGrow + detail::kTiny};
}
inline Approx operator-(const Approx& a, const Approx& b) {
  double v = a.v - b.v;
  if (a.e == 0 && b.e == 0 && v == 0) return {0.0, 0.0};
  return {v, (a.e + b.e + detail::kU * std::fabs(v)) * detail::kGrow + detail::kTiny};
}
inline Approx operator-(const Approx& a) { return {-a.v, a.e}; }
inline Approx operator*(const Approx& a, const Approx& b) {
  double v = a.v * b.v;
  double e = std::fabs(a.v) * b.e + std::fabs(b.v) * a.e + a.e * b.e + detail::kU * std::fabs(v);
  if ((a.v == 0 && a.e == 0) || (b.v == 0 && b.e == 0)) return {0.0, 0.0};
  return {v, e * detail::kGrow + detail::kTiny};
}
inline Approx operator/(const Approx& a, const Approx& b) {
  double bv = std::fabs(b.v);
  if (!(bv > b.e * detail::kGrow)) {
    return {a.v / b.v, std::numeric_limits<double>::infinity()};
  }
  double v = a.v / b.v;
  double e = (a.e + std::fabs(v) * b.e) / ((bv - b.e) / detail::kGrow) + detail::kU * std::fabs(v);
  return {v, e * detail::kGrow + detail::kTiny};
}

using Rational = mpq_class;

template <class T>
inline T num(double v) {
  return T(v);
}

inline int exact_sign(const Rational& r) { return sgn(r); }

// Evaluates f<Approx>() first and falls back to f<Rational>() when the sign is
// not certified.
template <class F>
int filtered_sign(F&& f) {
  WorkCounters& c = counters();
  ++c.predicates;
  Approx a = f.template operator()<Approx>();
  if (auto s = a.sign()) return *s;
  ++c.exact_fallbacks;
  Rational r = f.template operator()<Rational>();
  return exact_sign(r);
}

template <class T>
struct P2 {
  T x, y;
};

template <class T>
inline P2<T> lift(const Point& p) {
  return {num<T>(p.x), num<T>(p.y)};
}

template <class T>
inline P2<T> circumcenter_t(const P2<T>& a, const P2<T>& b, const P2<T>& c) {
  T bx = b.x - a.x, by = b.y - a.y, cx = c.x - a.x, cy = c.y - a.y;
  T d = num<T>(2.0) * (bx * cy - by * cx);
  T b2 = bx * bx + by * by;
  T c2 = cx * cx + cy * cy;
  T ux = (cy * b2 - by * c2) / d;
  T uy = (bx * c2 - cx * b2) / d;
  return {a.x + ux, a.y + uy};
}

template <class T>
inline P2<T> midpoint_t(const P2<T>& a, const P2<T>& b) {
  T h = num<T>(0.5);
  return {(a.x + b.x) * h, (a.y + b.y) * h};
}

// A point given implicitly by input points, so predicates on it stay exact.
struct SymPoint {
  enum class Kind : std::uint8_t { Explicit, Midpoint, Circumcenter, RayHit };
  Kind kind = Kind::Explicit;
  // Explicit: p[0]. Midpoint: p[0],p[1]. Circumcenter: p[0..2].
  // RayHit: on the ray from circumcenter(p[0..2]) away from p[3], the point
  // equidistant from p[3] and p[4].
  std::array<Point, 5> p{};

  static SymPoint at(const Point& a);
  static SymPoint at_xy(double x, double y);
  static SymPoint mid(const Point& a, const Point& b);
  static SymPoint circ(const Point& a, const Point& b, const Point& c);
  static SymPoint ray_hit(const Point& a, const Point& b, const Point& c, const Point& from,
                          const Point& to);

  template <class T>
  P2<T> lift() const {
    switch (kind) {
      case Kind::Explicit:
        return sedq::lift<T>(p[0]);
      case Kind::Midpoint:
        return midpoint_t(sedq::lift<T>(p[0]), sedq::lift<T>(p[1]));
      case Kind::Circumcenter:
        return circumcenter_t(sedq::lift<T>(p[0]), sedq::lift<T>(p[1]), sedq::lift<T>(p[2]));
      case Kind::RayHit: {
        P2<T> v = circumcenter_t(sedq::lift<T>(p[0]), sedq::lift<T>(p[1]), sedq::lift<T>(p[2]));
        P2<T> a = sedq::lift<T>(p[3]);
        P2<T> b = sedq::lift<T>(p[4]);
        T dx = v.x - a.x, dy = v.y - a.y;
        T vax = v.x - a.x, vay = v.y - a.y, vbx = v.x - b.x, vby = v.y - b.y;
        T f = (vbx * vbx + vby * vby) - (vax * vax + vay * vay);
        T den = num<T>(2.0) * (dx * (b.x - a.x) + dy * (b.y - a.y));
        T t = f / den;
        return {v.x + t * dx, v.y + t * dy};
      }
    }
    return sedq::lift<T>(p[0]);
  }

  Point approx() const;
};

// ---------------------------------------------------------------------------
// Predicates and constructions.

Orientation orientation(const Point& a, const Point& b, const Point& c);
int orient_sign(const Point& a, const Point& b, const Point& c);  // +1 ccw, -1 cw, 0
double dist_sq(const Point& a, const Point& b);

// sign(|q-a|^2 - |q-b|^2), exact.
int cmp_dist(const SymPoint& q, const Point& a, const Point& b);
// sign of the dot product (a-o).(b-o), exact.
int dot_sign(const Point& o, const Point& a, const Point& b);
// sign of orient(q, q + dir, r) with dir = q - from; i.e. which side of the
// ray leaving q away from `from` the point r lies on. +1 left.
int ray_side(const SymPoint& q, const Point& from, const SymPoint& r);
// sign((s - mid(a,b)) . n_right(b - a)) where n_right(d) = (d.y, -d.x).
int bisector_offset_sign(const SymPoint& s, const Point& a, const Point& b);
// +1 when d is strictly inside the circle through a,b,c, 0 on it, -1 outside.
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);
// sign(R(a,b,c)^2 - R(d,e,f)^2) for two non-degenerate triangles.
int cmp_circumradius(const Point& a, const Point& b, const Point& c, const Point& d,
                     const Point& e, const Point& f);
bool sym_equal(const SymPoint& q, const Point& a);

Point circumcenter(const Point& a, const Point& b, const Point& c);
Disk disk_from_point(const Point& a);
Disk disk_from_pair(const Point& a, const Point& b);
Disk disk_circum(const Point& a, const Point& b, const Point& c);
Disk disk_from_triple(const Point& a, const Point& b, const Point& c);
bool disk_contains(const Disk& d, const Point& p, double tol);
// Exact containment against the disk's defining points (closed disk).
bool disk_contains_exact(const Disk& d, const Point& p);
SymPoint disk_center_sym(const Disk& d);
// Same disk: same radius (rel. tol) and centers within tol * radius.
bool same_disk(const Disk& a, const Disk& b, double tol);

}  // namespace sedq

#endif
