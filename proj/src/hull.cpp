#include "sedq/hull.h"

#include <algorithm>
#include <bit>

namespace sedq {

std::optional<Section> inner_section(std::int32_t h, std::int32_t a, std::int32_t b,
                                     std::int32_t owner) {
  if (cyc_len(h, a, b) <= 2) return std::nullopt;
  return Section{owner, (a + 1) % h, (b - 1 + h) % h};
}

void hull_from_sorted(std::span<const Point> v, std::vector<Point>& out) {
  out.clear();
  if (v.empty()) return;
  if (v.size() == 1) {
    out.push_back(v[0]);
    return;
  }
  std::vector<Point> up, lo;
  up.reserve(v.size());
  lo.reserve(v.size());
  for (const Point& p : v) {
    while (up.size() >= 2 && orient_sign(up[up.size() - 2], up.back(), p) >= 0) up.pop_back();
    up.push_back(p);
    while (lo.size() >= 2 && orient_sign(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  out = up;
  for (std::size_t i = lo.size() - 1; i-- > 1;) out.push_back(lo[i]);
}

namespace {

void sort_unique(std::vector<Point>& v) {
  std::sort(v.begin(), v.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Point& a, const Point& b) { return same_position(a, b); }),
          v.end());
}

}  // namespace

Hull build_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of no points");
  std::vector<Point> v(points.begin(), points.end());
  sort_unique(v);
  Hull h;
  hull_from_sorted(v, h.vertices);
  return h;
}

void lex_sorted_vertices(const HullView& h, std::vector<Point>& out) {
  out.clear();
  if (h.size == 0) return;
  std::int32_t r = 0;
  for (std::int32_t i = 1; i < h.size; ++i)
    if (lex_less(h[r], h[i])) r = i;
  // 0..r ascending, h-1..r+1 ascending
  std::int32_t i = 0, j = h.size - 1;
  while (i <= r || j > r) {
    if (j <= r || (i <= r && lex_less(h[i], h[j]))) {
      out.push_back(h[i++]);
    } else {
      out.push_back(h[j--]);
    }
  }
}

Hull merge_hulls(const HullView& h1, const HullView& h2) {
  std::vector<Point> a, b, m;
  lex_sorted_vertices(h1, a);
  lex_sorted_vertices(h2, b);
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m),
             [](const Point& p, const Point& q) {
               if (p.x != q.x) return p.x < q.x;
               if (p.y != q.y) return p.y < q.y;
               return p.id < q.id;
             });
  m.erase(std::unique(m.begin(), m.end(),
                      [](const Point& p, const Point& q) { return same_position(p, q); }),
          m.end());
  Hull h;
  hull_from_sorted(m, h.vertices);
  return h;
}

std::vector<Point> section_points(const HullView& h, const Section& s) {
  std::vector<Point> out;
  std::int32_t n = cyc_len(h.size, s.a, s.b);
  out.reserve(n);
  for (std::int32_t k = 0, i = s.a; k < n; ++k, i = h.next(i)) out.push_back(h[i]);
  return out;
}

namespace {

// Most counter-clockwise (Right) or most clockwise (Left) vertex seen from x.
// greater(i, j): vertex i is strictly further in the wanted rotation than j.
struct TangentOrder {
  const HullView& h;
  const Point& x;
  int want;  // +1: counter-clockwise is larger
  bool greater(std::int32_t i, std::int32_t j) const {
    return orient_sign(x, h[j], h[i]) * want > 0;
  }
};

std::int32_t farthest_collinear(const HullView& h, const Point& x, std::int32_t t) {
  // neighbours on the same ray from x are only possible on either side of t
  for (std::int32_t nb : {h.prev(t), h.next(t)}) {
    if (nb == t) continue;
    if (orient_sign(x, h[t], h[nb]) == 0 && dot_sign(x, h[t], h[nb]) > 0 &&
        dist_sq(x, h[nb]) > dist_sq(x, h[t]))
      t = nb;
  }
  return t;
}

}  // namespace

std::int32_t tangent_from_point_linear(const HullView& h, const Point& x, Side side) {
  TangentOrder ord{h, x, side == Side::Right ? 1 : -1};
  std::int32_t best = 0;
  for (std::int32_t k = 1; k < h.size; ++k) {
    if (ord.greater(k, best)) {
      best = k;
    } else if (orient_sign(x, h[best], h[k]) == 0 && dot_sign(x, h[best], h[k]) > 0 &&
               dist_sq(x, h[k]) > dist_sq(x, h[best])) {
      best = k;
    }
  }
  return best;
}

std::int32_t tangent_from_point(const HullView& h, const Point& x, Side side) {
  const std::int32_t n = h.size;
  if (n <= 8) return tangent_from_point_linear(h, x, side);
  TangentOrder ord{h, x, side == Side::Right ? 1 : -1};
  auto at = [&](std::int64_t i) { return static_cast<std::int32_t>(i % n); };
  auto up = [&](std::int64_t k) { return ord.greater(at(k + 1), at(k)); };
  auto down = [&](std::int64_t k) { return ord.greater(at(k), at(k + 1)); };
  auto local_max = [&](std::int64_t c) { return !up(c) && !down(c + n - 1); };

  if (local_max(0)) return farthest_collinear(h, x, 0);
  std::int64_t lo = 0, hi = n;
  const int cap = 4 * std::bit_width(static_cast<unsigned>(n)) + 8;
  for (int it = 0; it < cap && hi - lo >= 2; ++it) {
    std::int64_t c = (lo + hi) / 2;
    if (local_max(c)) return farthest_collinear(h, x, at(c));
    bool up_lo = up(lo), up_c = up(c);
    if (up_lo) {
      if (!up_c || !ord.greater(at(c), at(lo))) {
        hi = c;
      } else {
        lo = c;
      }
    } else {
      if (up_c || !ord.greater(at(c), at(lo))) {
        lo = c;
      } else {
        hi = c;
      }
    }
  }
  return tangent_from_point_linear(h, x, side);
}

namespace {

// Local check of a candidate bridge p[l] -> q[a]: neighbours on the right, and
// any collinear neighbour strictly between the two ends, so p[l] is the
// backmost and q[a] the frontmost point of the union on that line.
bool bridge_ok(const HullView& p, const HullView& q, std::int32_t l, std::int32_t a) {
  const Point& A = p[l];
  const Point& B = q[a];
  if (same_position(A, B)) return false;
  auto fine = [&](const Point& n) {
    int o = orient_sign(A, B, n);
    if (o > 0) return false;
    return o < 0 || (dot_sign(A, B, n) > 0 && dot_sign(B, A, n) > 0);
  };
  for (std::int32_t k : {p.prev(l), p.next(l)})
    if (k != l && !fine(p[k])) return false;
  for (std::int32_t k : {q.prev(a), q.next(a)})
    if (k != a && !fine(q[k])) return false;
  return true;
}

// Union hull of both vertex lists with owner tags; the bridge is the edge
// leaving a p-vertex for a q-vertex. Linear; used when the fast path meets a
// degenerate (touching or collinear) configuration.
std::optional<Bridge> bridge_linear(const HullView& p, const HullView& q) {
  struct Tag {
    Point pt;
    int owner;
    std::int32_t idx;
  };
  std::vector<Tag> all;
  all.reserve(p.size + q.size);
  for (std::int32_t i = 0; i < p.size; ++i) all.push_back({p[i], 0, i});
  for (std::int32_t i = 0; i < q.size; ++i) all.push_back({q[i], 1, i});
  std::sort(all.begin(), all.end(), [](const Tag& u, const Tag& v) { return lex_less(u.pt, v.pt); });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Tag& u, const Tag& v) { return same_position(u.pt, v.pt); }),
            all.end());
  std::vector<Point> pts(all.size()), hull;
  for (std::size_t k = 0; k < all.size(); ++k) pts[k] = Point{all[k].pt.x, all[k].pt.y, int(k)};
  hull_from_sorted(pts, hull);
  const std::size_t n = hull.size();
  for (std::size_t k = 0; k < n && n >= 2; ++k) {
    const Tag& u = all[hull[k].id];
    const Tag& v = all[hull[(k + 1) % n].id];
    if (u.owner == 0 && v.owner == 1) return Bridge{u.idx, v.idx};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Bridge> find_bridge(const HullView& p, const HullView& q) {
  // alternate tangents: from p[l] with all of q on the right, then from q[a]
  // with all of p on its left (so p is on the right of p[l] -> q[a])
  std::int32_t l = 0, a = -1;
  const int cap = 2 * (p.size + q.size) + 8;
  for (int it = 0; it < cap; ++it) {
    std::int32_t na = tangent_from_point(q, p[l], Side::Right);
    std::int32_t nl = tangent_from_point(p, q[na], Side::Left);
    if (na == a && nl == l) break;
    a = na;
    l = nl;
  }
  if (a < 0 || !bridge_ok(p, q, l, a)) return bridge_linear(p, q);
  return Bridge{l, a};
}

Bridge bridge(const HullView& p, const HullView& q) {
  auto b = find_bridge(p, q);
  if (!b) throw Error(ErrorCode::HullsOverlap, "no common tangent");
  return *b;
}

Tangents tangent_between(const HullView& h1, const HullView& h2) {
  if (h1.size == 0 || h2.size == 0) throw Error(ErrorCode::EmptyInput, "empty hull");
  if (strictly_inside(h1, h2[0]) || strictly_inside(h2, h1[0]))
    throw Error(ErrorCode::HullsOverlap, "hull interiors overlap");
  return Tangents{bridge(h1, h2), bridge(h2, h1)};
}

namespace {

// All vertex pairs; a valid line supports both hulls, and along it the
// backmost point of the union belongs to p and the frontmost to q.
Bridge bridge_brute(const HullView& p, const HullView& q) {
  Bridge best;
  for (std::int32_t i = 0; i < p.size; ++i) {
    for (std::int32_t j = 0; j < q.size; ++j) {
      const Point& A = p[i];
      const Point& B = q[j];
      if (same_position(A, B)) continue;
      bool ok = true;
      for (std::int32_t k = 0; k < p.size && ok; ++k) {
        int o = orient_sign(A, B, p[k]);
        if (o > 0 || (o == 0 && (dot_sign(A, B, p[k]) < 0 || dot_sign(B, A, p[k]) < 0))) ok = false;
      }
      for (std::int32_t k = 0; k < q.size && ok; ++k) {
        int o = orient_sign(A, B, q[k]);
        if (o > 0 || (o == 0 && (dot_sign(A, B, q[k]) < 0 || dot_sign(B, A, q[k]) < 0))) ok = false;
      }
      if (!ok) continue;
      if (best.from >= 0 && (best.from != i || best.to != j))
        throw Error(ErrorCode::HullsOverlap, "several tangent lines");
      best = Bridge{i, j};
    }
  }
  if (best.from < 0) throw Error(ErrorCode::HullsOverlap, "no common tangent");
  return best;
}

}  // namespace

Tangents tangent_between_brute(const HullView& h1, const HullView& h2) {
  return Tangents{bridge_brute(h1, h2), bridge_brute(h2, h1)};
}

std::int32_t lex_max_index(const HullView& h) {
  // lex order rises on 0..r and falls on r..h-1
  std::int32_t lo = 0, hi = h.size - 1;
  while (lo < hi) {
    std::int32_t m = (lo + hi) / 2;
    if (lex_less(h[m], h[m + 1])) {
      lo = m + 1;
    } else {
      hi = m;
    }
  }
  return lo;
}

std::int32_t extreme_vertex(const HullView& h, double ux, double uy) {
  if (h.size <= 3) {
    std::int32_t best = 0;
    for (std::int32_t i = 1; i < h.size; ++i)
      if (ux * h[i].x + uy * h[i].y > ux * h[best].x + uy * h[best].y) best = i;
    return best;
  }
  std::int32_t r = lex_max_index(h);
  auto val = [&](std::int32_t i) { return ux * h[i].x + uy * h[i].y; };
  // upper chain 0..r for upward directions, lower chain r..h (h == 0) otherwise
  std::int32_t lo, hi;
  if (uy > 0 || (uy == 0 && ux < 0)) {
    lo = 0;
    hi = r;
  } else {
    lo = r;
    hi = h.size;
  }
  while (lo < hi) {
    std::int32_t m = (lo + hi) / 2;
    if (val(h.wrap(m + 1)) > val(h.wrap(m))) {
      lo = m + 1;
    } else {
      hi = m;
    }
  }
  return h.wrap(lo);
}

bool strictly_inside(const HullView& h, const Point& p) {
  if (h.size < 3) return false;
  // clockwise hull: interior is on the right of every edge
  std::int32_t r = lex_max_index(h);
  if (!lex_less(h[0], p) || !lex_less(p, h[r])) {
    // outside the lex range, or at an extreme: cannot be interior
    return false;
  }
  if (orient_sign(h[0], h[r], p) == 0) {
    // on the chord between the extremes; boundary when the chord is an edge
    return r != 1 && r != h.size - 1;
  }
  bool upper = orient_sign(h[0], h[r], p) > 0;
  // find the edge of the relevant chain spanning p in lex order
  std::int32_t lo, hi;
  if (upper) {
    lo = 0;
    hi = r;
    while (hi - lo > 1) {
      std::int32_t m = (lo + hi) / 2;
      if (lex_less(p, h[m])) {
        hi = m;
      } else {
        lo = m;
      }
    }
    return orient_sign(h[lo], h[hi], p) < 0;
  }
  lo = r;
  hi = h.size;
  while (hi - lo > 1) {
    std::int32_t m = (lo + hi) / 2;
    if (lex_less(h[m], p)) {
      hi = m;
    } else {
      lo = m;
    }
  }
  return orient_sign(h[lo], h[h.wrap(hi)], p) < 0;
}

}  // namespace sedq

namespace sedq {

namespace {

// sign of cross(b - a, w - v)
int cross_diff_sign(const Point& a, const Point& b, const Point& v, const Point& w) {
  return filtered_sign([&]<class T>() {
    P2<T> A = lift<T>(a), B = lift<T>(b), V = lift<T>(v), W = lift<T>(w);
    T r = (B.x - A.x) * (W.y - V.y) - (B.y - A.y) * (W.x - V.x);
    return r;
  });
}

}  // namespace

bool hull_strictly_inside(const HullView& outer, const HullView& inner) {
  for (std::int32_t i = 0; i < outer.size; ++i) {
    const Point& a = outer[i];
    const Point& b = outer[outer.next(i)];
    // outside of a clockwise edge is to its left
    std::int32_t v = extreme_vertex(inner, a.y - b.y, b.x - a.x);
    // the double direction can be slightly off: climb exactly
    for (bool moved = true; moved && inner.size > 1;) {
      moved = false;
      for (std::int32_t w : {inner.next(v), inner.prev(v)}) {
        if (cross_diff_sign(a, b, inner[v], inner[w]) > 0) {
          v = w;
          moved = true;
          break;
        }
      }
    }
    if (orient_sign(a, b, inner[v]) >= 0) return false;
  }
  return true;
}

}  // namespace sedq
