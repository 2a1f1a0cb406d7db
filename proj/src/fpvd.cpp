#include "sedq/fpvd.h"

#include <algorithm>
#include <queue>

#include "sedq/centroid.h"

namespace sedq {

std::int32_t fpvd_vertex_count(std::int32_t h) { return h >= 3 ? h - 2 : 0; }
std::int32_t fpvd_edge_count(std::int32_t h) { return h >= 2 ? 2 * h - 3 : 0; }

std::size_t fpvd_block_size(std::int32_t h) {
  std::size_t v = fpvd_vertex_count(h), e = fpvd_edge_count(h);
  return 9 * v + 6 * e + static_cast<std::size_t>(h) + 2;
}

FpvdView fpvd_view(const HullView& hull, const std::int32_t* block) {
  FpvdView f;
  f.hull = hull;
  f.nv = fpvd_vertex_count(hull.size);
  f.ne = fpvd_edge_count(hull.size);
  const std::int32_t* p = block;
  f.tri = p;
  p += 3 * f.nv;
  f.vedge = p;
  p += 3 * f.nv;
  f.epair = p;
  p += 2 * f.ne;
  f.evert = p;
  p += 2 * f.ne;
  f.cell_off = p;
  p += hull.size + 1;
  f.cell_list = p;
  p += 2 * f.ne;
  f.cchild = p;
  p += 3 * f.nv;
  f.croot = *p;
  return f;
}

int FpvdView::slot_of(std::int32_t v, std::int32_t e) const {
  for (int k = 0; k < 3; ++k)
    if (vedge[3 * v + k] == e) return k;
  return -1;
}

Point FpvdView::vertex_position(std::int32_t v) const {
  return circumcenter(def_point(v, 0), def_point(v, 1), def_point(v, 2));
}

Point FpvdView::unbounded_direction(std::int32_t e) const {
  std::int32_t i = epair[2 * e], j = epair[2 * e + 1];
  std::int32_t from = i, to = j;
  if (!(j == i + 1)) std::swap(from, to);  // the wrapping pair (h-1, 0)
  const Point& a = hull[from];
  const Point& b = hull[to];
  return Point{b.y - a.y, -(b.x - a.x), -1};
}

namespace {

// sign(|a-b|^2 - |c-d|^2)
int cmp_len(const Point& a, const Point& b, const Point& c, const Point& d) {
  return filtered_sign([&]<class T>() {
    P2<T> A = lift<T>(a), B = lift<T>(b), C = lift<T>(c), D = lift<T>(d);
    T ux = A.x - B.x, uy = A.y - B.y, vx = C.x - D.x, vy = C.y - D.y;
    T r = (ux * ux + uy * uy) - (vx * vx + vy * vy);
    return r;
  });
}

// sign of (a - o) x (b - o)
int orient_sym(const SymPoint& o, const Point& a, const Point& b) {
  return filtered_sign([&]<class T>() {
    P2<T> O = o.lift<T>();
    P2<T> A = lift<T>(a), B = lift<T>(b);
    T r = (A.x - O.x) * (B.y - O.y) - (A.y - O.y) * (B.x - O.x);
    return r;
  });
}

int slot_for(const std::int32_t* t, std::int32_t x, std::int32_t y) {
  if (x > y) std::swap(x, y);
  if (x == t[0] && y == t[1]) return 0;
  if (x == t[1] && y == t[2]) return 1;
  SEDQ_CHECK(x == t[0] && y == t[2]);
  return 2;
}

struct Ear {
  std::int32_t p, i, n;
  std::uint32_t stamp;
};

}  // namespace

void build_fpvd_into(const HullView& hull, std::int32_t* block) {
  const std::int32_t h = hull.size;
  if (h < 1) throw Error(ErrorCode::EmptyInput, "diagram of an empty hull");
  if (h == 1) {
    // a single cell covering the plane
    finish_fpvd_block(hull, block);
    return;
  }
  const std::int32_t nv = fpvd_vertex_count(h), ne = fpvd_edge_count(h);
  std::int32_t* tri = block;
  std::int32_t* vedge = tri + 3 * nv;
  std::int32_t* epair = vedge + 3 * nv;
  std::int32_t* evert = epair + 2 * ne;

  std::int32_t edges = 0, verts = 0;
  auto add_edge = [&](std::int32_t x, std::int32_t y, std::int32_t u, std::int32_t w) {
    epair[2 * edges] = std::min(x, y);
    epair[2 * edges + 1] = std::max(x, y);
    evert[2 * edges] = u;
    evert[2 * edges + 1] = w;
    return edges++;
  };

  if (h == 2) {
    add_edge(0, 1, -1, -1);
  } else {
    std::vector<std::int32_t> nxt(h), prv(h), own(h, -1);
    std::vector<std::uint32_t> stamp(h, 0);
    for (std::int32_t i = 0; i < h; ++i) {
      nxt[i] = (i + 1) % h;
      prv[i] = (i + h - 1) % h;
    }
    // larger circumradius first, then larger angle at the ear tip, then smaller index
    auto worse = [&](const Ear& x, const Ear& y) {
      int c = cmp_circumradius(hull[x.p], hull[x.i], hull[x.n], hull[y.p], hull[y.i], hull[y.n]);
      if (c != 0) return c < 0;
      auto cat = [&](const Ear& e) {
        int d = dot_sign(hull[e.i], hull[e.p], hull[e.n]);
        return d < 0 ? 2 : (d == 0 ? 1 : 0);
      };
      int cx = cat(x), cy = cat(y);
      if (cx != cy) return cx < cy;
      int l = cmp_len(hull[x.p], hull[x.n], hull[y.p], hull[y.n]);
      if (cx == 0 && l != 0) return l < 0;
      if (cx == 2 && l != 0) return l > 0;
      return x.i > y.i;
    };
    std::priority_queue<Ear, std::vector<Ear>, decltype(worse)> heap(worse);
    if (h > 3)
      for (std::int32_t i = 0; i < h; ++i) heap.push(Ear{prv[i], i, nxt[i], 0});

    auto make_vertex = [&](std::int32_t a, std::int32_t b, std::int32_t c) {
      std::int32_t v = verts++;
      std::int32_t t[3] = {a, b, c};
      std::sort(t, t + 3);
      std::copy(t, t + 3, tri + 3 * v);
      return v;
    };
    // connects vertex v to the polygon edge (x, nxt[x]) it consumes
    auto attach = [&](std::int32_t v, std::int32_t x) {
      std::int32_t y = nxt[x];
      std::int32_t w = own[x];
      std::int32_t e = add_edge(x, y, w, v);
      if (w < 0) std::swap(evert[2 * e], evert[2 * e + 1]);  // (v, -1)
      vedge[3 * v + slot_for(tri + 3 * v, x, y)] = e;
      if (w >= 0) vedge[3 * w + slot_for(tri + 3 * w, x, y)] = e;
    };

    std::int32_t alive = h;
    while (alive > 3) {
      Ear top = heap.top();
      heap.pop();
      if (top.stamp != stamp[top.i] || nxt[top.i] < 0) continue;
      std::int32_t p = top.p, i = top.i, n = top.n;
      std::int32_t v = make_vertex(p, i, n);
      attach(v, p);
      attach(v, i);
      nxt[p] = n;
      prv[n] = p;
      own[p] = v;
      nxt[i] = -1;
      --alive;
      ++stamp[p];
      ++stamp[n];
      if (alive == 3) break;  // the last triangle is read off below
      heap.push(Ear{prv[p], p, n, stamp[p]});
      heap.push(Ear{p, n, nxt[n], stamp[n]});
    }
    std::int32_t a = 0;
    while (nxt[a] < 0) ++a;
    std::int32_t b = nxt[a], c = nxt[b];
    std::int32_t v = make_vertex(a, b, c);
    attach(v, a);
    attach(v, b);
    attach(v, c);
  }
  SEDQ_CHECK(edges == ne && verts == nv);
  finish_fpvd_block(hull, block);
}

void finish_fpvd_block(const HullView& hull, std::int32_t* block) {
  const std::int32_t h = hull.size;
  const std::int32_t nv = fpvd_vertex_count(h), ne = fpvd_edge_count(h);
  std::int32_t* epair = block + 6 * nv;
  std::int32_t* cell_off = epair + 4 * ne;
  std::int32_t* cell_list = cell_off + h + 1;
  std::int32_t* cchild = cell_list + 2 * ne;
  std::int32_t* croot = cchild + 3 * nv;

  // cells
  std::fill(cell_off, cell_off + h + 1, 0);
  for (std::int32_t e = 0; e < ne; ++e) {
    ++cell_off[epair[2 * e] + 1];
    ++cell_off[epair[2 * e + 1] + 1];
  }
  for (std::int32_t p = 0; p < h; ++p) cell_off[p + 1] += cell_off[p];
  std::vector<std::int32_t> fill(cell_off, cell_off + h);
  for (std::int32_t e = 0; e < ne; ++e) {
    cell_list[fill[epair[2 * e]]++] = e;
    cell_list[fill[epair[2 * e + 1]]++] = e;
  }
  for (std::int32_t p = 0; p < h; ++p) {
    std::sort(cell_list + cell_off[p], cell_list + cell_off[p + 1],
              [&](std::int32_t e1, std::int32_t e2) {
                auto off = [&](std::int32_t e) {
                  std::int32_t q = epair[2 * e] == p ? epair[2 * e + 1] : epair[2 * e];
                  return ((q - p) % h + h) % h;
                };
                return off(e1) < off(e2);
              });
  }

  std::fill(cchild, cchild + 3 * nv, -1);
  *croot = -1;
  if (nv > 0) *croot = build_centroid_into(fpvd_view(hull, block), cchild);
}

Fpvd build_fpvd(const Hull& hull) {
  Fpvd f;
  f.hull = hull;
  f.block.assign(fpvd_block_size(hull.size()), 0);
  build_fpvd_into(f.hull.view(), f.block.data());
  return f;
}

std::vector<std::int32_t> cell_boundary(const FpvdView& f, std::int32_t p) {
  auto c = f.cell(p);
  return std::vector<std::int32_t>(c.begin(), c.end());
}

namespace {

bool at_vertex(const FpvdView& f, std::int32_t w, const SymPoint& q) {
  return cmp_dist(q, f.def_point(w, 0), f.def_point(w, 1)) == 0 &&
         cmp_dist(q, f.def_point(w, 1), f.def_point(w, 2)) == 0;
}

}  // namespace

int vertex_region(const FpvdView& f, std::int32_t w, const SymPoint& q) {
  if (at_vertex(f, w, q)) return -1;
  SymPoint v = f.vertex_sym(w);
  int sig[3];
  for (int k = 0; k < 3; ++k) sig[k] = ray_side(v, f.def_point(w, k), q);
  for (int k = 0; k < 3; ++k) {
    int x = k, y = (k + 1) % 3;
    bool narrow = orient_sym(v, f.def_point(w, x), f.def_point(w, y)) < 0;
    bool in = narrow ? (sig[x] <= 0 && sig[y] >= 0) : (sig[x] <= 0 || sig[y] >= 0);
    if (in) return k;
  }
  fail_invariant("regions around a diagram vertex cover the plane", __FILE__, __LINE__);
}

namespace {

std::int32_t pick_farthest(const HullView& h, const SymPoint& q, const std::int32_t* cand,
                           std::size_t n) {
  std::int32_t best = cand[0];
  for (std::size_t k = 1; k < n; ++k) {
    std::int32_t c = cand[k];
    if (c == best) continue;
    int s = cmp_dist(q, h[c], h[best]);
    if (s > 0 || (s == 0 && h[c].id < h[best].id)) best = c;
  }
  return best;
}

}  // namespace

std::int32_t locate_farthest_linear(const HullView& h, const SymPoint& q) {
  std::vector<std::int32_t> all(h.size);
  for (std::int32_t i = 0; i < h.size; ++i) all[i] = i;
  return pick_farthest(h, q, all.data(), all.size());
}

std::int32_t locate_farthest(const FpvdView& f, const SymPoint& q) {
  const std::int32_t h = f.h();
  if (h == 1) return 0;
  if (h == 2) {
    std::int32_t c[2] = {0, 1};
    return pick_farthest(f.hull, q, c, 2);
  }
  SearchResult r = centroid_search(f, [&](std::int32_t w) {
    int k = vertex_region(f, w, q);
    if (k < 0) return OracleAnswer::success();
    return OracleAnswer::descend(f.slot_edge(w, k));
  });
  std::vector<std::int32_t> cand;
  std::vector<std::int32_t> seeds;
  if (r.kind == SearchResult::Kind::Vertex) {
    seeds.push_back(r.id);
  } else {
    cand.push_back(f.edge_def(r.id, 0));
    cand.push_back(f.edge_def(r.id, 1));
    for (int k = 0; k < 2; ++k) {
      std::int32_t u = f.edge_vertex(r.id, k);
      if (u >= 0 && at_vertex(f, u, q)) seeds.push_back(u);
    }
  }
  // q at a vertex: every vertex sharing that position (zero-length edges) ties
  std::vector<std::int32_t> seen;
  while (!seeds.empty()) {
    std::int32_t u = seeds.back();
    seeds.pop_back();
    if (std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
    seen.push_back(u);
    for (int k = 0; k < 3; ++k) {
      cand.push_back(f.def(u, k));
      std::int32_t e = f.slot_edge(u, k);
      if (f.unbounded(e)) continue;
      std::int32_t w = f.other_end(e, u);
      if (std::find(seen.begin(), seen.end(), w) == seen.end() && at_vertex(f, w, q))
        seeds.push_back(w);
    }
  }
  return pick_farthest(f.hull, q, cand.data(), cand.size());
}

}  // namespace sedq
