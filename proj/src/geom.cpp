#include "sedq/geom.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sedq {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotOnBisector: return "NotOnBisector";
    case ErrorCode::NoVertices: return "NoVertices";
    case ErrorCode::InconsistentOracle: return "InconsistentOracle";
    case ErrorCode::HullsOverlap: return "HullsOverlap";
    case ErrorCode::OverlapDetected: return "OverlapDetected";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

void fail_invariant(const char* expr, const char* file, int line) {
  std::ostringstream os;
  os << expr << " (" << file << ":" << line << ")";
  throw Error(ErrorCode::InvariantViolation, os.str());
}

WorkCounters& counters() {
  thread_local WorkCounters c;
  return c;
}

SymPoint SymPoint::at(const Point& a) {
  SymPoint s;
  s.kind = Kind::Explicit;
  s.p[0] = a;
  return s;
}

SymPoint SymPoint::at_xy(double x, double y) { return at(Point{x, y, -1}); }

SymPoint SymPoint::mid(const Point& a, const Point& b) {
  SymPoint s;
  s.kind = Kind::Midpoint;
  s.p[0] = a;
  s.p[1] = b;
  return s;
}

SymPoint SymPoint::circ(const Point& a, const Point& b, const Point& c) {
  SymPoint s;
  s.kind = Kind::Circumcenter;
  s.p[0] = a;
  s.p[1] = b;
  s.p[2] = c;
  return s;
}

SymPoint SymPoint::ray_hit(const Point& a, const Point& b, const Point& c, const Point& from,
                           const Point& to) {
  SymPoint s;
  s.kind = Kind::RayHit;
  s.p = {a, b, c, from, to};
  return s;
}

Point SymPoint::approx() const {
  if (kind == Kind::Explicit) return Point{p[0].x, p[0].y, -1};
  P2<double> q = lift<double>();
  return Point{q.x, q.y, -1};
}

int orient_sign(const Point& a, const Point& b, const Point& c) {
  return filtered_sign([&]<class T>() {
    P2<T> A = lift<T>(a), B = lift<T>(b), C = lift<T>(c);
    T r = (B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x);
    return r;
  });
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  int s = orient_sign(a, b, c);
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

double dist_sq(const Point& a, const Point& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

int cmp_dist(const SymPoint& q, const Point& a, const Point& b) {
  ++counters().dist_comparisons;
  return filtered_sign([&]<class T>() {
    P2<T> Q = q.lift<T>();
    P2<T> A = lift<T>(a), B = lift<T>(b);
    // |q-a|^2 - |q-b|^2 = (b-a).(2q-a-b)
    T two = num<T>(2.0);
    T r = (B.x - A.x) * (two * Q.x - A.x - B.x) + (B.y - A.y) * (two * Q.y - A.y - B.y);
    return r;
  });
}

int dot_sign(const Point& o, const Point& a, const Point& b) {
  return filtered_sign([&]<class T>() {
    P2<T> O = lift<T>(o), A = lift<T>(a), B = lift<T>(b);
    T r = (A.x - O.x) * (B.x - O.x) + (A.y - O.y) * (B.y - O.y);
    return r;
  });
}

int ray_side(const SymPoint& q, const Point& from, const SymPoint& r) {
  return filtered_sign([&]<class T>() {
    P2<T> Q = q.lift<T>();
    P2<T> F = lift<T>(from);
    P2<T> R = r.lift<T>();
    T dx = Q.x - F.x, dy = Q.y - F.y;
    T res = dx * (R.y - Q.y) - dy * (R.x - Q.x);
    return res;
  });
}

int bisector_offset_sign(const SymPoint& s, const Point& a, const Point& b) {
  ++counters().dist_comparisons;
  return filtered_sign([&]<class T>() {
    P2<T> S = s.lift<T>();
    P2<T> A = lift<T>(a), B = lift<T>(b);
    T two = num<T>(2.0);
    T dx = B.x - A.x, dy = B.y - A.y;
    T ox = two * S.x - A.x - B.x, oy = two * S.y - A.y - B.y;
    T r = ox * dy - oy * dx;
    return r;
  });
}

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o = orient_sign(a, b, c);
  if (o == 0) return 0;
  ++counters().dist_comparisons;
  int s = filtered_sign([&]<class T>() {
    P2<T> A = lift<T>(a), B = lift<T>(b), C = lift<T>(c), D = lift<T>(d);
    T adx = A.x - D.x, ady = A.y - D.y;
    T bdx = B.x - D.x, bdy = B.y - D.y;
    T cdx = C.x - D.x, cdy = C.y - D.y;
    T ad = adx * adx + ady * ady;
    T bd = bdx * bdx + bdy * bdy;
    T cd = cdx * cdx + cdy * cdy;
    T r = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
    return r;
  });
  return s * o;
}

namespace {

// R(abc)^2 vs R(def)^2, cross-multiplied: |ab|^2 |bc|^2 |ca|^2 / (4 cross^2).
template <class T>
T circumradius_diff(const P2<T>* p) {
  auto part = [](const P2<T>& a, const P2<T>& b, const P2<T>& c, T& len, T& cr2) {
    T ux = b.x - a.x, uy = b.y - a.y, vx = c.x - b.x, vy = c.y - b.y, wx = a.x - c.x, wy = a.y - c.y;
    len = (ux * ux + uy * uy) * (vx * vx + vy * vy) * (wx * wx + wy * wy);
    T cr = ux * (c.y - a.y) - uy * (c.x - a.x);
    cr2 = cr * cr;
  };
  T l1, x1, l2, x2;
  part(p[0], p[1], p[2], l1, x1);
  part(p[3], p[4], p[5], l2, x2);
  return l1 * x2 - l2 * x1;
}

// The comparison sees only coordinate differences and is homogeneous, so all
// coordinates can be written as integers over one common power of two. mpz
// avoids the gcd work of mpq, which dominates on co-circular input.
int circumradius_sign_exact(const Point* const* pts) {
  int emin = std::numeric_limits<int>::max();
  for (int i = 0; i < 6; ++i)
    for (double v : {pts[i]->x, pts[i]->y}) {
      if (v == 0) continue;
      int e;
      std::frexp(v, &e);
      emin = std::min(emin, e - 53);
    }
  auto as_int = [&](double v) {
    mpz_class z;
    if (v == 0) return z;
    int e;
    double m = std::frexp(v, &e);
    mpz_set_d(z.get_mpz_t(), std::ldexp(m, 53));
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(e - 53 - emin));
    return z;
  };
  P2<mpz_class> q[6];
  for (int i = 0; i < 6; ++i) q[i] = {as_int(pts[i]->x), as_int(pts[i]->y)};
  return sgn(circumradius_diff(q));
}

}  // namespace

int cmp_circumradius(const Point& a, const Point& b, const Point& c, const Point& d,
                     const Point& e, const Point& f) {
  WorkCounters& wc = counters();
  ++wc.dist_comparisons;
  ++wc.predicates;
  const Point* pts[6] = {&a, &b, &c, &d, &e, &f};
  P2<Approx> q[6];
  for (int i = 0; i < 6; ++i) q[i] = lift<Approx>(*pts[i]);
  if (auto s = circumradius_diff(q).sign()) return *s;
  ++wc.exact_fallbacks;
  return circumradius_sign_exact(pts);
}

bool sym_equal(const SymPoint& q, const Point& a) {
  int sx = filtered_sign([&]<class T>() {
    P2<T> Q = q.lift<T>();
    T r = Q.x - num<T>(a.x);
    return r;
  });
  if (sx != 0) return false;
  int sy = filtered_sign([&]<class T>() {
    P2<T> Q = q.lift<T>();
    T r = Q.y - num<T>(a.y);
    return r;
  });
  return sy == 0;
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
  if (orient_sign(a, b, c) == 0) {
    throw Error(ErrorCode::CollinearInput, "circumcenter of collinear points");
  }
  P2<double> r = circumcenter_t(lift<double>(a), lift<double>(b), lift<double>(c));
  return Point{r.x, r.y, -1};
}

namespace {

void sort_support(Disk& d) {
  std::sort(d.support.begin(), d.support.begin() + d.support_size,
            [](const Point& u, const Point& v) {
              if (u.id != v.id) return u.id < v.id;
              return lex_less(u, v);
            });
}

}  // namespace

Disk disk_from_point(const Point& a) {
  Disk d;
  d.center = Point{a.x, a.y, -1};
  d.radius_sq = 0;
  d.support_size = 1;
  d.support[0] = a;
  return d;
}

Disk disk_from_pair(const Point& a, const Point& b) {
  if (same_position(a, b)) return disk_from_point(a.id <= b.id ? a : b);
  Disk d;
  d.support_size = 2;
  d.support[0] = a;
  d.support[1] = b;
  sort_support(d);
  const Point& u = d.support[0];
  const Point& v = d.support[1];
  d.center = Point{(u.x + v.x) * 0.5, (u.y + v.y) * 0.5, -1};
  d.radius_sq = dist_sq(u, v) / 4;
  return d;
}

Disk disk_circum(const Point& a, const Point& b, const Point& c) {
  Disk d;
  d.support_size = 3;
  d.support = {a, b, c};
  sort_support(d);
  d.center = circumcenter(d.support[0], d.support[1], d.support[2]);
  d.radius_sq = dist_sq(d.center, d.support[0]);
  return d;
}

Disk disk_from_triple(const Point& a, const Point& b, const Point& c) {
  if (orient_sign(a, b, c) == 0) {
    // farthest pair of three collinear points: the third lies between them
    if (dot_sign(c, a, b) <= 0) return disk_from_pair(a, b);
    if (dot_sign(a, b, c) <= 0) return disk_from_pair(b, c);
    return disk_from_pair(c, a);
  }
  if (dot_sign(a, b, c) < 0) return disk_from_pair(b, c);
  if (dot_sign(b, c, a) < 0) return disk_from_pair(c, a);
  if (dot_sign(c, a, b) < 0) return disk_from_pair(a, b);
  return disk_circum(a, b, c);
}

bool disk_contains(const Disk& d, const Point& p, double tol) {
  return dist_sq(d.center, p) <= d.radius_sq * (1 + tol);
}

SymPoint disk_center_sym(const Disk& d) {
  switch (d.support_size) {
    case 1: return SymPoint::at(d.support[0]);
    case 2: return SymPoint::mid(d.support[0], d.support[1]);
    case 3: return SymPoint::circ(d.support[0], d.support[1], d.support[2]);
    default: break;
  }
  return SymPoint::at(d.center);
}

bool disk_contains_exact(const Disk& d, const Point& p) {
  switch (d.support_size) {
    case 1: return same_position(d.support[0], p);
    case 2: return dot_sign(p, d.support[0], d.support[1]) <= 0;
    case 3: return cmp_dist(disk_center_sym(d), p, d.support[0]) <= 0;
    default: break;
  }
  return disk_contains(d, p, 0);
}

bool same_disk(const Disk& a, const Disk& b, double tol) {
  double r = std::max(a.radius_sq, b.radius_sq);
  if (std::fabs(a.radius_sq - b.radius_sq) > tol * r) return false;
  return dist_sq(a.center, b.center) <= tol * tol * r;
}

}  // namespace sedq
