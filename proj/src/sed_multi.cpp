#include "sedq/sed_multi.h"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "sedq/oracles.h"
#include "sedq/sed_single.h"

namespace sedq {

namespace {

// sign(cross(a - b, c - d))
int cross_sign(const SymPoint& a, const SymPoint& b, const SymPoint& c, const SymPoint& d) {
  return filtered_sign([&]<class T>() {
    P2<T> A = a.lift<T>(), B = b.lift<T>(), C = c.lift<T>(), D = d.lift<T>();
    T r = (A.x - B.x) * (C.y - D.y) - (A.y - B.y) * (C.x - D.x);
    return r;
  });
}

// sign((v - p) . (q - p)): q loses to p along the ray from v away from p
int ray_dot_sign(const SymPoint& v, const Point& p, const Point& q) {
  return filtered_sign([&]<class T>() {
    P2<T> V = v.lift<T>(), P = lift<T>(p), Q = lift<T>(q);
    T r = (V.x - P.x) * (Q.x - P.x) + (V.y - P.y) * (Q.y - P.y);
    return r;
  });
}

// The line v + t (v - p) crosses the ray w + u (w - q), u > 0, at parameter
// t_q. Returns sign(t* - t_q) where t* is the root of
// |x - q|^2 - |x - p|^2 at the crossing (q is farthest in its set there).
int before_sign(const SymPoint& w, const Point& q, const SymPoint& v, const Point& p) {
  return filtered_sign([&]<class T>() {
    P2<T> W = w.lift<T>(), V = v.lift<T>(), P = lift<T>(p), Q = lift<T>(q);
    T two = num<T>(2.0);
    T dx = V.x - P.x, dy = V.y - P.y;
    T ex = W.x - Q.x, ey = W.y - Q.y;
    T den = ex * dy - ey * dx;
    T nn = (V.x - W.x) * dy - (V.y - W.y) * dx;
    T px = P.x - Q.x, py = P.y - Q.y;
    T g0 = two * (W.x * px + W.y * py) + (Q.x * Q.x + Q.y * Q.y) - (P.x * P.x + P.y * P.y);
    T numer = den * g0 + nn * two * (ex * px + ey * py);
    T r = numer * den;
    return r;
  });
}

// sign(t_a - t_b) for the crossings of the line with rays from w away from a, b.
int cmp_crossing(const SymPoint& w, const Point& a, const Point& b, const SymPoint& v,
                 const Point& p) {
  return filtered_sign([&]<class T>() {
    P2<T> W = w.lift<T>(), V = v.lift<T>(), P = lift<T>(p), A = lift<T>(a), B = lift<T>(b);
    T dx = V.x - P.x, dy = V.y - P.y;
    T wx = W.x - V.x, wy = W.y - V.y;
    T eax = W.x - A.x, eay = W.y - A.y, ebx = W.x - B.x, eby = W.y - B.y;
    T na = wx * eay - wy * eax, da = dx * eay - dy * eax;
    T nb = wx * eby - wy * ebx, db = dx * eby - dy * ebx;
    T r = (na * db - nb * da) * da * db;
    return r;
  });
}

struct Ray {
  Point a, b, c;  // defining points of the start vertex
  SymPoint v;
  Point p;
  SymPoint ps;
};

// t_x > t_y for the roots of two foreign points along the ray
bool later(const Ray& r, const Point& x, const Point& y) {
  return cmp_dist(SymPoint::ray_hit(r.a, r.b, r.c, r.p, y), x, r.p) > 0;
}

// The point of f with the largest root along the ray (one that loses to p
// eventually), by centroid search over f. f must beat p at the ray start.
std::int32_t farthest_root(const FpvdView& f, const Ray& r) {
  std::int32_t cand[3];
  int nc = 0;
  if (f.h() <= 2) {
    for (std::int32_t i = 0; i < f.h(); ++i) cand[nc++] = i;
  } else {
    SearchResult res = centroid_search(f, [&](std::int32_t w) {
      SymPoint ws = f.vertex_sym(w);
      int n = cross_sign(r.v, ws, r.v, r.ps);
      auto wedge_of_dir = [&](int dir) {
        for (int k = 0; k < 3; ++k) {
          SymPoint qx = SymPoint::at(f.def_point(w, k)), qy = SymPoint::at(f.def_point(w, (k + 1) % 3));
          bool narrow = cross_sign(ws, qx, ws, qy) < 0;
          int sx = dir * cross_sign(ws, qx, r.v, r.ps);
          int sy = dir * cross_sign(ws, qy, r.v, r.ps);
          bool in = narrow ? (sx <= 0 && sy >= 0) : (sx <= 0 || sy >= 0);
          if (in) return k;
        }
        fail_invariant("wedges around a diagram vertex cover all directions", __FILE__, __LINE__);
      };
      if (n == 0) {
        // the line passes through w
        int c = cmp_dist(ws, f.def_point(w, 0), r.p);
        if (c == 0) return OracleAnswer::success();
        return OracleAnswer::descend(f.slot_edge(w, wedge_of_dir(c)));
      }
      int cross_k[3], dk[3], nk = 0;
      for (int k = 0; k < 3; ++k) {
        int d = cross_sign(ws, SymPoint::at(f.def_point(w, k)), r.v, r.ps);
        if (d != 0 && d == n) {
          cross_k[nk] = k;
          dk[k] = d;
          ++nk;
        }
      }
      if (nk == 0) {
        int k = vertex_region(f, w, r.v);
        SEDQ_CHECK(k >= 0);
        return OracleAnswer::descend(f.slot_edge(w, k));
      }
      // order the crossings along the line
      for (int x = 1; x < nk; ++x)
        for (int y = x; y > 0; --y) {
          if (cmp_crossing(ws, f.def_point(w, cross_k[y]), f.def_point(w, cross_k[y - 1]), r.v, r.p) >= 0) break;
          std::swap(cross_k[y], cross_k[y - 1]);
        }
      int last_before = -1;
      for (int x = 0; x < nk; ++x) {
        int s = before_sign(ws, f.def_point(w, cross_k[x]), r.v, r.p);
        if (s > 0) {
          SEDQ_CHECK(last_before == x - 1);
          last_before = x;
        }
      }
      int wedge;
      if (last_before >= 0) {
        int k = cross_k[last_before];
        wedge = dk[k] > 0 ? (k + 2) % 3 : k;
      } else {
        int k = cross_k[0];
        wedge = dk[k] > 0 ? k : (k + 2) % 3;
      }
      return OracleAnswer::descend(f.slot_edge(w, wedge));
    });
    if (res.kind == SearchResult::Kind::Vertex) {
      for (int k = 0; k < 3; ++k) cand[nc++] = f.def(res.id, k);
    } else {
      SEDQ_CHECK(res.kind == SearchResult::Kind::Edge);
      cand[nc++] = f.edge_def(res.id, 0);
      cand[nc++] = f.edge_def(res.id, 1);
    }
  }
  std::int32_t best = -1;
  for (int k = 0; k < nc; ++k) {
    const Point& q = f.hull[cand[k]];
    if (ray_dot_sign(r.v, r.p, q) <= 0) continue;
    if (best < 0 || later(r, q, f.hull[best])) best = cand[k];
  }
  return best;
}

Ray make_ray(const FpvdView& f, std::int32_t v, std::int32_t t) {
  Ray r;
  r.a = f.def_point(v, 0);
  r.b = f.def_point(v, 1);
  r.c = f.def_point(v, 2);
  r.v = f.vertex_sym(v);
  r.p = f.hull[t];
  r.ps = SymPoint::at(r.p);
  return r;
}

SeparatingEdgeHit finish_hit(const Ray& r, std::span<const FpvdView> sets, std::int32_t owner,
                             std::int32_t index) {
  if (owner < 0) throw Error(ErrorCode::NoIntersection, "the vertex survives; no separating edge");
  SeparatingEdgeHit hit;
  hit.owner = owner;
  hit.index = index;
  hit.p = r.p;
  hit.p_prime = sets[owner].hull[index];
  hit.s = SymPoint::ray_hit(r.a, r.b, r.c, r.p, hit.p_prime);
  return hit;
}

// Whether run [l, l'] lies inside run [x, y] of a hull of size h.
bool run_inside(std::int32_t h, std::int32_t l, std::int32_t lp, std::int32_t x, std::int32_t y) {
  std::int32_t pl = cyc_pos(h, x, l), plp = cyc_pos(h, x, lp), py = cyc_pos(h, x, y);
  return pl <= plp && plp <= py;
}

int slot_with_pair(const FpvdView& f, std::int32_t w, std::int32_t x, std::int32_t y) {
  for (int k = 0; k < 3; ++k) {
    std::int32_t a = f.def(w, k), b = f.def(w, (k + 1) % 3);
    if ((a == x && b == y) || (a == y && b == x)) return k;
  }
  fail_invariant("pair belongs to the vertex", __FILE__, __LINE__);
}

}  // namespace

std::vector<Section> canonical_sections_pooled(std::span<const FpvdView> sets) {
  std::unordered_map<int, std::pair<std::int32_t, std::int32_t>> where;
  std::vector<Point> pool;
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (std::int32_t i = 0; i < sets[s].h(); ++i) {
      pool.push_back(sets[s].hull[i]);
      where[sets[s].hull[i].id] = {static_cast<std::int32_t>(s), i};
    }
  Hull all = build_hull(pool);
  std::vector<Section> out;
  for (std::int32_t k = 0; k < all.size(); ++k) {
    auto [o, i] = where.at(all[k].id);
    if (!out.empty() && out.back().owner == o) {
      out.back().b = i;
    } else {
      out.push_back(Section{o, i, i});
    }
  }
  if (out.size() > 1 && out.front().owner == out.back().owner) {
    out.front().a = out.back().a;
    out.pop_back();
  }
  if (out.size() == 1) out[0].closed = true;
  return out;
}

std::optional<std::vector<Section>> canonical_sections_walk(std::span<const FpvdView> sets) {
  const std::int32_t m = static_cast<std::int32_t>(sets.size());
  if (m == 0) return std::vector<Section>{};
  if (m == 1) return std::vector<Section>{Section{0, 0, sets[0].h() - 1, true}};
  std::vector<std::optional<Bridge>> br(static_cast<std::size_t>(m) * m);
  try {
    for (std::int32_t i = 0; i < m; ++i)
      for (std::int32_t j = 0; j < m; ++j)
        if (i != j) br[i * m + j] = find_bridge(sets[i].hull, sets[j].hull);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::int32_t i0 = 0;
  for (std::int32_t i = 1; i < m; ++i)
    if (lex_less(sets[i].hull[0], sets[i0].hull[0])) i0 = i;
  std::vector<Section> out;
  std::int32_t cur = i0, entry = 0;
  for (std::int32_t iter = 0; iter < 4 * m + 4; ++iter) {
    const std::int32_t h = sets[cur].h();
    std::int32_t exit = -1, best = std::numeric_limits<std::int32_t>::max();
    for (std::int32_t j = 0; j < m; ++j) {
      if (j == cur || !br[cur * m + j]) continue;
      std::int32_t pos = cyc_pos(h, entry, br[cur * m + j]->from);
      if (pos < best) {
        best = pos;
        exit = br[cur * m + j]->from;
      }
    }
    if (exit < 0) {
      // everything else hides inside this hull
      if (out.empty()) return std::vector<Section>{Section{cur, 0, h - 1, true}};
      return std::nullopt;
    }
    if (cur == i0 && !out.empty() && cyc_pos(h, entry, 0) <= best) {
      if (out.front().b != exit) return std::nullopt;
      out.front().a = entry;
      return out;
    }
    out.push_back(Section{cur, entry, exit});
    // the union hull edge leaving exit: every other candidate on its right
    std::int32_t next = -1;
    Point to{};
    const Point& x = sets[cur].hull[exit];
    for (std::int32_t j = 0; j < m; ++j) {
      if (j == cur || !br[cur * m + j] || br[cur * m + j]->from != exit) continue;
      const Point& c = sets[j].hull[br[cur * m + j]->to];
      if (next >= 0) {
        int o = orient_sign(x, to, c);
        if (o < 0 || (o == 0 && dist_sq(x, c) <= dist_sq(x, to))) continue;
      }
      next = j;
      to = c;
    }
    entry = br[cur * m + next]->to;
    cur = next;
  }
  return std::nullopt;
}

std::vector<Section> canonical_sections(std::span<const FpvdView> sets) {
  if (auto w = canonical_sections_walk(sets)) return *w;
  return canonical_sections_pooled(sets);
}

bool vertex_survives(std::span<const FpvdView> sets, std::int32_t i, std::int32_t v) {
  const FpvdView& f = sets[i];
  SymPoint c = f.vertex_sym(v);
  const Point& pa = f.def_point(v, 0);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (static_cast<std::int32_t>(j) == i) continue;
    std::int32_t far = locate_farthest(sets[j], c);
    if (cmp_dist(c, sets[j].hull[far], pa) > 0) return false;
  }
  return true;
}

SeparatingEdgeHit find_separating_edge(std::span<const FpvdView> sets, std::int32_t i,
                                       std::int32_t v, std::int32_t t) {
  ++counters().separating_edges;
  Ray r = make_ray(sets[i], v, t);
  std::int32_t owner = -1, index = -1;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (static_cast<std::int32_t>(j) == i) continue;
    const FpvdView& f = sets[j];
    // sets that p already beats at v never cross the ray ahead of it
    if (cmp_dist(r.v, f.hull[locate_farthest(f, r.v)], r.p) <= 0) continue;
    std::int32_t q = farthest_root(f, r);
    SEDQ_CHECK(q >= 0);
    if (owner < 0 || later(r, f.hull[q], sets[owner].hull[index])) {
      owner = static_cast<std::int32_t>(j);
      index = q;
    }
  }
  return finish_hit(r, sets, owner, index);
}

SeparatingEdgeHit find_separating_edge_linear(std::span<const FpvdView> sets, std::int32_t i,
                                              std::int32_t v, std::int32_t t) {
  Ray r = make_ray(sets[i], v, t);
  std::int32_t owner = -1, index = -1;
  bool beaten = false;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (static_cast<std::int32_t>(j) == i) continue;
    for (std::int32_t q = 0; q < sets[j].h(); ++q) {
      const Point& x = sets[j].hull[q];
      if (cmp_dist(r.v, x, r.p) > 0) beaten = true;
      if (ray_dot_sign(r.v, r.p, x) <= 0) continue;
      if (owner < 0 || later(r, x, sets[owner].hull[index])) {
        owner = static_cast<std::int32_t>(j);
        index = q;
      }
    }
  }
  if (!beaten) owner = -1;
  return finish_hit(r, sets, owner, index);
}

SectionCandidate section_search(std::span<const FpvdView> sets, const Section& sec,
                                MultiTrace* trace) {
  const std::int32_t i = sec.owner;
  const FpvdView& f = sets[i];
  const std::int32_t h = f.h();
  const std::int32_t l = sec.a, lp = sec.b;
  SectionCandidate out;
  if (h <= 2 || cyc_len(h, l, lp) <= 2) {
    out.points = section_points(f.hull, sec);
    return out;
  }
  auto in_sec = [&](std::int32_t x) { return cyc_contains(h, l, lp, x); };
  // hull neighbours of t that follow it along the union hull too
  auto qualifying = [&](std::int32_t t) {
    if (!in_sec(t)) return false;
    if (sec.closed) return true;
    return t != l && t != lp;
  };
  std::vector<Point> center;

  out.search = centroid_search(f, [&](std::int32_t w) -> OracleAnswer {
    if (trace) ++trace->survival_checks;
    if (vertex_survives(sets, i, w)) {
      int k = sed_vertex_step(f, w);
      if (k < 0) {
        center = {f.def_point(w, 0), f.def_point(w, 1), f.def_point(w, 2)};
        return OracleAnswer::success();
      }
      std::int32_t x = f.def(w, k), y = f.def(w, (k + 1) % 3);
      if (!in_sec(x) && !cyc_contains(h, x, y, l)) return OracleAnswer::abort();
      return OracleAnswer::descend(f.slot_edge(w, k));
    }
    std::int32_t q[3];
    int nq = 0;
    for (int k = 0; k < 3; ++k) {
      std::int32_t t = f.def(w, k);
      if (qualifying(t)) q[nq++] = t;
    }
    if (nq == 0) {
      for (int k = 0; k < 3; ++k)
        if (run_inside(h, l, lp, f.def(w, k), f.def(w, (k + 1) % 3)))
          return OracleAnswer::descend(f.slot_edge(w, k));
      fail_invariant("a section without qualifying points lies in one run", __FILE__, __LINE__);
    }
    std::sort(q, q + nq, [&](std::int32_t x, std::int32_t y) { return cyc_pos(h, l, x) < cyc_pos(h, l, y); });
    ArrowEvent ev;
    ev.k = nq;
    for (int x = 0; x < nq; ++x) {
      SeparatingEdgeHit hit = find_separating_edge(sets, i, w, q[x]);
      if (trace) trace->hits.emplace_back(i, hit);
      EdgeDecision d = analyze_edge(hit.s, hit.p, hit.p_prime);
      if (d.kind == EdgeDecision::Kind::CenterFound) {
        center = {hit.p, hit.p_prime};
        return OracleAnswer::success();
      }
      // DiscardAB: nothing after p_t in the section; DiscardBA: nothing before
      ev.arrows[x] = d.kind == EdgeDecision::Kind::DiscardAB ? -1 : 1;
    }
    if (trace) trace->arrows.push_back(ev);
    const auto& a = ev.arrows;
    std::int32_t A, B, C;
    std::int32_t ex, ey;
    if (nq == 3) {
      A = q[0];
      B = q[1];
      C = q[2];
      if (a[0] == a[1] && a[1] == a[2]) {
        ex = C;
        ey = A;
      } else if (a[0] > 0 && a[1] < 0 && a[2] < 0) {
        ex = A;
        ey = B;
      } else if (a[0] > 0 && a[1] > 0 && a[2] < 0) {
        ex = B;
        ey = C;
      } else {
        throw Error(ErrorCode::InvariantViolation, "arrow pattern outside the four cases");
      }
    } else if (nq == 2) {
      A = q[0];
      B = q[1];
      C = f.def(w, 0) + f.def(w, 1) + f.def(w, 2) - A - B;
      if (a[0] < 0 && a[1] < 0) {
        ex = C;
        ey = A;
      } else if (a[0] > 0 && a[1] < 0) {
        ex = A;
        ey = B;
      } else if (a[0] > 0 && a[1] > 0) {
        ex = B;
        ey = C;
      } else {
        throw Error(ErrorCode::InvariantViolation, "arrow pattern outside the four cases");
      }
    } else {
      B = q[0];
      int kb = 0;
      while (f.def(w, kb) != B) ++kb;
      A = f.def(w, (kb + 2) % 3);
      C = f.def(w, (kb + 1) % 3);
      ex = a[0] < 0 ? A : B;
      ey = a[0] < 0 ? B : C;
    }
    return OracleAnswer::descend(f.slot_edge(w, slot_with_pair(f, w, ex, ey)));
  });

  if (!center.empty()) {
    out.kind = SectionCandidate::Kind::GlobalCenter;
    out.points = center;
  } else if (out.search.kind == SearchResult::Kind::Aborted) {
    out.kind = SectionCandidate::Kind::Aborted;
  } else {
    SEDQ_CHECK(out.search.kind == SearchResult::Kind::Edge);
    out.points = {f.hull[f.edge_def(out.search.id, 0)], f.hull[f.edge_def(out.search.id, 1)]};
  }
  return out;
}

MultiResult sed_multi(std::span<const FpvdView> sets, MultiTrace* trace) {
  if (sets.empty()) throw Error(ErrorCode::EmptyQuery, "no canonical sets");
  MultiResult res;
  if (sets.size() == 1) {
    res.disk = sed_of_set(sets[0]);
    res.sections = 1;
    return res;
  }
  std::vector<Section> secs = canonical_sections(sets);
  res.sections = static_cast<std::int32_t>(secs.size());
  std::vector<Point> pool;
  for (const Section& s : secs) {
    SectionCandidate c = section_search(sets, s, trace);
    if (c.kind == SectionCandidate::Kind::GlobalCenter) {
      res.short_circuit = true;
      res.disk = c.points.size() == 2 ? disk_from_pair(c.points[0], c.points[1])
                                      : disk_circum(c.points[0], c.points[1], c.points[2]);
      res.pool = static_cast<std::int32_t>(c.points.size());
      return res;
    }
    pool.insert(pool.end(), c.points.begin(), c.points.end());
  }
  std::sort(pool.begin(), pool.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
  pool.erase(std::unique(pool.begin(), pool.end(), [](const Point& a, const Point& b) { return a.id == b.id; }),
             pool.end());
  res.pool = static_cast<std::int32_t>(pool.size());
  res.disk = welzl(pool);
  return res;
}

QueryResult sed_query(const RangeIndex& index, const Rect& q, SelectMode mode, MultiTrace* trace) {
  CanonicalSelection sel = index.query(q, mode);
  QueryResult out;
  out.full_m = sel.full_count;
  out.m = static_cast<std::int32_t>(sel.sets.size());
  out.points = sel.point_count;
  if (sel.sets.empty()) return out;
  out.empty = false;
  out.detail = sed_multi(sel.sets, trace);
  out.disk = out.detail.disk;
  return out;
}

}  // namespace sedq
