#include "sedq/oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace sedq {

namespace {

Disk disk_through(const Point& q1, const Point& q2, const Point& r) {
  if (orient_sign(q1, q2, r) == 0) return disk_from_triple(q1, q2, r);
  return disk_circum(q1, q2, r);
}

}  // namespace

Disk welzl(std::span<const Point> points, std::uint64_t seed) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "smallest disk of no points");
  std::vector<Point> p(points.begin(), points.end());
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  Disk d = disk_from_point(p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (disk_contains_exact(d, p[i])) continue;
    // p[i] on the boundary
    d = disk_from_point(p[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (disk_contains_exact(d, p[j])) continue;
      // p[i] and p[j] on the boundary
      d = disk_from_pair(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (disk_contains_exact(d, p[k])) continue;
        d = disk_through(p[i], p[j], p[k]);
      }
    }
  }
  return d;
}

bool is_valid_sed(const Disk& d, std::span<const Point> points) {
  for (const Point& p : points)
    if (!disk_contains_exact(d, p)) return false;
  if (d.support_size == 3) {
    const auto& s = d.support;
    if (dot_sign(s[0], s[1], s[2]) < 0 || dot_sign(s[1], s[2], s[0]) < 0 ||
        dot_sign(s[2], s[0], s[1]) < 0)
      return false;
  }
  return d.support_size >= 1;
}

std::vector<Point> filter_rect(std::span<const Point> points, const Rect& q) {
  std::vector<Point> out;
  for (const Point& p : points)
    if (q.contains(p)) out.push_back(p);
  return out;
}

Hull jarvis_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of no points");
  std::vector<Point> v;
  for (const Point& p : points) {
    bool dup = false;
    for (Point& q : v) {
      if (same_position(p, q)) {
        if (p.id < q.id) q = p;
        dup = true;
      }
    }
    if (!dup) v.push_back(p);
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (lex_less(v[i], v[start])) start = i;
  Hull h;
  if (v.size() == 1) {
    h.vertices.push_back(v[0]);
    return h;
  }
  std::size_t cur = start;
  do {
    h.vertices.push_back(v[cur]);
    std::size_t cand = cur == 0 ? 1 : 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (r == cur || r == cand) continue;
      int o = orient_sign(v[cur], v[cand], v[r]);
      if (o > 0 || (o == 0 && dot_sign(v[cur], v[cand], v[r]) > 0 &&
                    dist_sq(v[cur], v[r]) > dist_sq(v[cur], v[cand])))
        cand = r;
    }
    cur = cand;
    SEDQ_CHECK(h.vertices.size() <= v.size());
  } while (cur != start);
  return h;
}

Fpvd assemble_fpvd(const Hull& hull, std::span<const std::array<std::int32_t, 3>> triples) {
  const std::int32_t h = hull.size();
  if (h < 2) throw Error(ErrorCode::TooFewPoints, "diagram needs two hull points");
  const std::int32_t nv = fpvd_vertex_count(h), ne = fpvd_edge_count(h);
  if (static_cast<std::int32_t>(triples.size()) != nv) {
    throw Error(ErrorCode::InvariantViolation, "vertex count differs from h - 2");
  }
  Fpvd f;
  f.hull = hull;
  f.block.assign(fpvd_block_size(h), -1);
  std::int32_t* tri = f.block.data();
  std::int32_t* vedge = tri + 3 * nv;
  std::int32_t* epair = vedge + 3 * nv;
  std::int32_t* evert = epair + 2 * ne;
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::int32_t>> by_pair;
  for (std::int32_t v = 0; v < nv; ++v) {
    std::array<std::int32_t, 3> t = triples[v];
    std::sort(t.begin(), t.end());
    std::copy(t.begin(), t.end(), tri + 3 * v);
    by_pair[{t[0], t[1]}].push_back(v);
    by_pair[{t[1], t[2]}].push_back(v);
    by_pair[{t[0], t[2]}].push_back(v);
  }
  if (h == 2) by_pair[{0, 1}];
  if (static_cast<std::int32_t>(by_pair.size()) != ne) {
    throw Error(ErrorCode::InvariantViolation, "edge count differs from 2h - 3");
  }
  std::int32_t e = 0;
  for (const auto& [pair, vs] : by_pair) {
    epair[2 * e] = pair.first;
    epair[2 * e + 1] = pair.second;
    bool adjacent = pair.second == pair.first + 1 || (pair.first == 0 && pair.second == h - 1);
    if (vs.size() == 2) {
      evert[2 * e] = vs[0];
      evert[2 * e + 1] = vs[1];
    } else if (vs.size() == 1 && adjacent) {
      evert[2 * e] = vs[0];
      evert[2 * e + 1] = -1;
    } else if (vs.empty() && h == 2) {
      evert[2 * e] = evert[2 * e + 1] = -1;
    } else {
      throw Error(ErrorCode::InvariantViolation, "pair shared by an invalid number of vertices");
    }
    for (std::int32_t v : vs) {
      const std::int32_t* t = tri + 3 * v;
      int k = (pair.first == t[0] && pair.second == t[1]) ? 0
              : (pair.first == t[1] && pair.second == t[2]) ? 1
                                                              : 2;
      vedge[3 * v + k] = e;
    }
    ++e;
  }
  finish_fpvd_block(hull.view(), f.block.data());
  return f;
}

BruteFpvd brute_fpvd(std::span<const Point> points) {
  Hull hull = jarvis_hull(points);
  const std::int32_t h = hull.size();
  if (h > 64) throw Error(ErrorCode::TooLarge, "brute diagram limited to 64 hull points");
  if (h < 2) throw Error(ErrorCode::TooFewPoints, "diagram needs two hull points");
  std::vector<std::array<std::int32_t, 3>> triples;
  for (std::int32_t i = 0; i < h; ++i) {
    for (std::int32_t j = i + 1; j < h; ++j) {
      for (std::int32_t k = j + 1; k < h; ++k) {
        SymPoint c = SymPoint::circ(hull[i], hull[j], hull[k]);
        std::vector<std::int32_t> tied{i, j, k};
        bool ok = true;
        for (std::int32_t l = 0; l < h && ok; ++l) {
          if (l == i || l == j || l == k) continue;
          int s = cmp_dist(c, hull[l], hull[i]);
          if (s > 0) ok = false;
          if (s == 0) tied.push_back(l);
        }
        if (!ok) continue;
        if (tied.size() > 3) {
          // fan from the smallest index over the co-circular group
          std::sort(tied.begin(), tied.end());
          auto pos = std::find(tied.begin(), tied.end(), j) - tied.begin();
          if (tied[0] != i || tied[pos + 1] != k) continue;
        }
        triples.push_back({i, j, k});
      }
    }
  }
  BruteFpvd out{assemble_fpvd(hull, triples), {}};
  FpvdView f = out.fpvd.view();
  for (std::int32_t v = 0; v < f.nv; ++v) {
    using L = long double;
    const Point& a = f.def_point(v, 0);
    const Point& b = f.def_point(v, 1);
    const Point& c = f.def_point(v, 2);
    L d = 2 * (L(a.x) * (L(b.y) - L(c.y)) + L(b.x) * (L(c.y) - L(a.y)) +
               L(c.x) * (L(a.y) - L(b.y)));
    L a2 = L(a.x) * a.x + L(a.y) * a.y, b2 = L(b.x) * b.x + L(b.y) * b.y,
      c2 = L(c.x) * c.x + L(c.y) * c.y;
    L ux = (a2 * (L(b.y) - c.y) + b2 * (L(c.y) - a.y) + c2 * (L(a.y) - b.y)) / d;
    L uy = (a2 * (L(c.x) - b.x) + b2 * (L(a.x) - c.x) + c2 * (L(b.x) - a.x)) / d;
    out.positions.push_back(Point{static_cast<double>(ux), static_cast<double>(uy), -1});
  }
  return out;
}

namespace {

std::vector<Point> pool(const std::vector<PointSet>& all, const std::vector<int>& idx) {
  std::vector<Point> out;
  for (int i : idx) out.insert(out.end(), all[i].begin(), all[i].end());
  return out;
}

}  // namespace

std::vector<BaseCase> fcases(const std::vector<PointSet>& all, const std::vector<int>& S,
                             const std::vector<int>& R) {
  SEDQ_CHECK(R.size() <= 3);
  std::vector<int> everything = R;
  everything.insert(everything.end(), S.begin(), S.end());
  std::vector<Point> pts = pool(all, everything);
  std::vector<BaseCase> out;
  const int extra = 3 - static_cast<int>(R.size());
  const int s = static_cast<int>(S.size());
  auto try_case = [&](const std::vector<int>& sel) {
    std::vector<int> c = R;
    for (int i : sel) c.push_back(S[i]);
    if (c.empty()) return;
    std::vector<Point> cp = pool(all, c);
    if (cp.empty()) return;
    Disk d = welzl(cp);
    for (const Point& p : pts)
      if (!disk_contains_exact(d, p)) return;
    std::sort(c.begin(), c.end());
    out.push_back(BaseCase{c, d});
  };
  try_case({});
  if (extra >= 1)
    for (int a = 0; a < s; ++a) try_case({a});
  if (extra >= 2)
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) try_case({a, b});
  if (extra >= 3)
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        for (int c = b + 1; c < s; ++c) try_case({a, b, c});
  return out;
}

MiniDisk set_minidisk(const std::vector<PointSet>& all, const std::vector<int>& S,
                      const std::vector<int>& R, std::span<const int> order) {
  if (S.empty() && R.empty()) {
    // the empty disk, covering nothing
    MiniDisk none{true, {}};
    none.disk.radius_sq = -1;
    return none;
  }
  if (fcases(all, S, R).empty()) return {};
  if (R.size() == 3 || S.empty()) {
    std::vector<Point> pts = pool(all, R);
    if (pts.empty()) return {};
    return {true, welzl(pts)};
  }
  int pick = -1;
  for (int o : order) {
    if (std::find(S.begin(), S.end(), o) != S.end()) {
      pick = o;
      break;
    }
  }
  SEDQ_CHECK(pick >= 0);
  std::vector<int> rest;
  for (int i : S)
    if (i != pick) rest.push_back(i);
  MiniDisk d = set_minidisk(all, rest, R, order);
  if (!d.defined) return d;
  bool covered = d.disk.radius_sq >= 0;
  for (const Point& p : all[pick])
    if (!disk_contains_exact(d.disk, p)) covered = false;
  if (!covered) {
    std::vector<int> r2 = R;
    r2.push_back(pick);
    d = set_minidisk(all, rest, r2, order);
  }
  return d;
}

MiniDisk set_minidisk(const std::vector<PointSet>& all, const std::vector<int>& S,
                      const std::vector<int>& R, std::uint64_t seed) {
  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return set_minidisk(all, S, R, order);
}

namespace {

std::vector<PointSet> singletons(const std::vector<Point>& p) {
  std::vector<PointSet> out;
  for (const Point& q : p) out.push_back({q});
  return out;
}

bool covers(const Disk& d, const Point& p) { return disk_contains_exact(d, p); }

std::vector<Point> random_points(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(0, 100);
  std::vector<Point> p;
  for (int i = 0; i < n; ++i) p.push_back(Point{double(coord(rng)), double(coord(rng)), i});
  return p;
}

}  // namespace

std::optional<std::vector<Point>> find_minidisk_counterexample(std::uint64_t seed, int tries) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    std::vector<Point> p = random_points(rng, 5);
    auto all = singletons(p);
    // S1..S5 are indices 0..4
    Disk d4 = welzl(std::vector<Point>{p[0], p[1], p[2], p[3]});
    if (covers(d4, p[4])) continue;
    auto c123_5 = fcases(all, {0, 1, 2}, {4});
    if (c123_5.empty() || covers(c123_5[0].disk, p[3])) continue;
    if (fcases(all, {0, 1, 2, 3}, {4}).empty()) continue;
    if (fcases(all, {0, 1, 2}, {3, 4}).empty()) continue;
    if (!fcases(all, {0, 1}, {3, 4}).empty()) continue;
    const int order[] = {4, 3, 2, 1, 0};
    if (set_minidisk(all, {0, 1, 2, 3, 4}, {}, order).defined) continue;
    return p;
  }
  return std::nullopt;
}

std::optional<std::vector<Point>> find_undefined_four(std::uint64_t seed, int tries) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    std::vector<Point> p = random_points(rng, 4);
    if (fcases(singletons(p), {0, 3}, {1, 2}).empty()) return p;
  }
  return std::nullopt;
}

}  // namespace sedq
