#include "sedq/range_index.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sedq {

double IndexStats::stored_constant() const {
  if (points < 2) return 0;
  double lg = std::log2(static_cast<double>(points));
  return static_cast<double>(stored_points) / (static_cast<double>(points) * lg * lg);
}

RangeIndex::RangeIndex(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points to index");
  auto t0 = std::chrono::steady_clock::now();
  px_.assign(points.begin(), points.end());
  // collapse duplicates to the smallest id, then order by (x, id)
  std::sort(px_.begin(), px_.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });
  px_.erase(std::unique(px_.begin(), px_.end(), [](const Point& a, const Point& b) { return same_position(a, b); }),
            px_.end());
  stats_.duplicates = static_cast<std::int64_t>(points.size() - px_.size());
  std::stable_sort(px_.begin(), px_.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.id < b.id);
  });
  const std::int32_t n = static_cast<std::int32_t>(px_.size());
  stats_.points = n;

  const std::int64_t levels = std::bit_width(static_cast<std::uint32_t>(n)) + 1;
  ylists_.reserve(static_cast<std::size_t>(n * levels));
  pnodes_.reserve(2 * static_cast<std::size_t>(n));
  snodes_.reserve(static_cast<std::size_t>(2 * n * levels));
  hulls_.reserve(static_cast<std::size_t>(4 * n * levels));
  blocks_.reserve(static_cast<std::size_t>(40 * n * levels));

  // root y-list
  ylists_.resize(n);
  for (std::int32_t i = 0; i < n; ++i) ylists_[i] = i;
  std::sort(ylists_.begin(), ylists_.end(), [&](std::int32_t a, std::int32_t b) {
    return px_[a].y < px_[b].y || (px_[a].y == px_[b].y && px_[a].id < px_[b].id);
  });
  build_primary(0, n);

  stats_.primary_nodes = static_cast<std::int64_t>(pnodes_.size());
  stats_.secondary_nodes = static_cast<std::int64_t>(snodes_.size());
  stats_.hull_vertices = static_cast<std::int64_t>(hulls_.size());
  stats_.block_ints = static_cast<std::int64_t>(blocks_.size());
  stats_.build_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::int32_t RangeIndex::build_primary(std::int32_t lo, std::int32_t hi) {
  // the node's y-list is the last hi - lo entries of ylists_ on entry
  const std::int32_t id = static_cast<std::int32_t>(pnodes_.size());
  pnodes_.push_back(PNode{lo, hi});
  const std::int64_t yoff = static_cast<std::int64_t>(ylists_.size()) - (hi - lo);
  pnodes_[id].ylist = yoff;
  pnodes_[id].sroot = build_secondary(ylists_.data() + yoff, 0, hi - lo);
  if (hi - lo == 1) return id;
  const std::int32_t mid = lo + (hi - lo) / 2;
  for (int side = 0; side < 2; ++side) {
    std::int32_t clo = side == 0 ? lo : mid, chi = side == 0 ? mid : hi;
    // stable partition of the parent's list (no reallocation: reserved)
    for (std::int64_t k = yoff; k < yoff + (hi - lo); ++k) {
      std::int32_t v = ylists_[k];
      if (v >= clo && v < chi) ylists_.push_back(v);
    }
    std::int32_t c = build_primary(clo, chi);
    if (side == 0) {
      pnodes_[id].left = c;
    } else {
      pnodes_[id].right = c;
    }
  }
  return id;
}

namespace {

// Monotone chain over point indices already in lexicographic order.
void chain_indices(const std::vector<Point>& px, const std::vector<std::int32_t>& in,
                   std::vector<std::int32_t>& out) {
  out.clear();
  if (in.size() <= 1) {
    out = in;
    return;
  }
  std::vector<std::int32_t> up, lo;
  for (std::int32_t i : in) {
    while (up.size() >= 2 && orient_sign(px[up[up.size() - 2]], px[up.back()], px[i]) >= 0) up.pop_back();
    up.push_back(i);
    while (lo.size() >= 2 && orient_sign(px[lo[lo.size() - 2]], px[lo.back()], px[i]) <= 0) lo.pop_back();
    lo.push_back(i);
  }
  out = up;
  for (std::size_t k = lo.size() - 1; k-- > 1;) out.push_back(lo[k]);
}

}  // namespace

std::int32_t RangeIndex::build_secondary(const std::int32_t* ys, std::int32_t a, std::int32_t b) {
  const std::int32_t id = static_cast<std::int32_t>(snodes_.size());
  snodes_.push_back(SNode{a, b});
  stats_.stored_points += b - a;
  std::vector<std::int32_t> merged;
  if (b - a == 1) {
    merged.push_back(ys[a]);
  } else {
    const std::int32_t mid = a + (b - a) / 2;
    std::int32_t l = build_secondary(ys, a, mid);
    std::int32_t r = build_secondary(ys, mid, b);
    snodes_[id].left = l;
    snodes_[id].right = r;
    std::vector<std::int32_t> both;
    for (std::int32_t c : {l, r})
      both.insert(both.end(), hulls_.begin() + snodes_[c].hull,
                  hulls_.begin() + snodes_[c].hull + snodes_[c].hsize);
    std::sort(both.begin(), both.end(), [&](std::int32_t u, std::int32_t v) { return lex_less(px_[u], px_[v]); });
    chain_indices(px_, both, merged);
  }
  SNode& node = snodes_[id];
  node.hull = static_cast<std::int64_t>(hulls_.size());
  node.hsize = static_cast<std::int32_t>(merged.size());
  hulls_.insert(hulls_.end(), merged.begin(), merged.end());
  node.block = static_cast<std::int64_t>(blocks_.size());
  blocks_.resize(blocks_.size() + fpvd_block_size(node.hsize));
  build_fpvd_into(node_hull(id), blocks_.data() + node.block);
  return id;
}

HullView RangeIndex::node_hull(std::int32_t s) const {
  const SNode& n = snodes_[s];
  return HullView{px_.data(), hulls_.data() + n.hull, n.hsize};
}

FpvdView RangeIndex::node_fpvd(std::int32_t s) const {
  return fpvd_view(node_hull(s), blocks_.data() + snodes_[s].block);
}

std::vector<Point> RangeIndex::node_points(std::int32_t s) const {
  // primary nodes and their secondary trees are laid out in the same preorder
  auto it = std::partition_point(pnodes_.begin(), pnodes_.end(), [&](const PNode& n) { return n.sroot <= s; });
  const PNode& pn = *(it - 1);
  const SNode& sn = snodes_[s];
  std::vector<Point> out;
  for (std::int32_t k = sn.a; k < sn.b; ++k) out.push_back(px_[ylists_[pn.ylist + k]]);
  return out;
}

void RangeIndex::select_secondary(std::int32_t s, const std::int32_t* ys, std::int32_t a,
                                  std::int32_t b, std::vector<NodeRef>& out,
                                  std::int32_t primary) const {
  const SNode& n = snodes_[s];
  if (n.b <= a || n.a >= b) return;
  if (a <= n.a && n.b <= b) {
    out.push_back(NodeRef{primary, s});
    return;
  }
  select_secondary(n.left, ys, a, b, out, primary);
  select_secondary(n.right, ys, a, b, out, primary);
}

void RangeIndex::select_primary(std::int32_t p, std::int32_t i, std::int32_t j, const Rect& q,
                                std::vector<NodeRef>& out) const {
  const PNode& n = pnodes_[p];
  if (n.hi <= i || n.lo >= j) return;
  if (i <= n.lo && n.hi <= j) {
    const std::int32_t* ys = ylists_.data() + n.ylist;
    const std::int32_t k = n.hi - n.lo;
    std::int32_t a = static_cast<std::int32_t>(
        std::partition_point(ys, ys + k, [&](std::int32_t v) { return px_[v].y < q.y_lo; }) - ys);
    std::int32_t b = static_cast<std::int32_t>(
        std::partition_point(ys, ys + k, [&](std::int32_t v) { return px_[v].y <= q.y_hi; }) - ys);
    if (a < b) select_secondary(n.sroot, ys, a, b, out, p);
    return;
  }
  select_primary(n.left, i, j, q, out);
  select_primary(n.right, i, j, q, out);
}

CanonicalSelection RangeIndex::query(const Rect& q, SelectMode mode) const {
  if (!q.valid()) throw Error(ErrorCode::ParseError, "rectangle with lo > hi");
  CanonicalSelection sel;
  sel.mode = mode;
  auto first = std::partition_point(px_.begin(), px_.end(), [&](const Point& p) { return p.x < q.x_lo; });
  auto last = std::partition_point(px_.begin(), px_.end(), [&](const Point& p) { return p.x <= q.x_hi; });
  std::int32_t i = static_cast<std::int32_t>(first - px_.begin());
  std::int32_t j = static_cast<std::int32_t>(last - px_.begin());
  if (i < j) select_primary(0, i, j, q, sel.nodes);
  sel.full_count = static_cast<std::int32_t>(sel.nodes.size());
  for (const NodeRef& r : sel.nodes) {
    sel.sets.push_back(node_fpvd(r.secondary));
    sel.point_count += snodes_[r.secondary].b - snodes_[r.secondary].a;
  }
  if (mode == SelectMode::Pruned) prune_selection(sel);
  return sel;
}

void prune_selection(CanonicalSelection& sel) {
  const std::size_t m = sel.sets.size();
  if (m <= 1) return;
  // W: the selection's extreme points in kDirs evenly spread directions
  constexpr int kDirs = 64;
  std::array<Point, kDirs> w{};
  std::array<double, kDirs> best{};
  best.fill(-std::numeric_limits<double>::infinity());
  std::array<double, kDirs> ux{}, uy{};
  for (int d = 0; d < kDirs; ++d) {
    ux[d] = std::cos(2 * std::numbers::pi * d / kDirs);
    uy[d] = std::sin(2 * std::numbers::pi * d / kDirs);
  }
  for (std::size_t s = 0; s < m; ++s) {
    const HullView& h = sel.sets[s].hull;
    for (int d = 0; d < kDirs; ++d) {
      const Point& e = h[extreme_vertex(h, ux[d], uy[d])];
      double val = ux[d] * e.x + uy[d] * e.y;
      if (val > best[d]) {
        best[d] = val;
        w[d] = e;
      }
    }
  }
  Hull cw = build_hull(std::vector<Point>(w.begin(), w.end()));
  if (cw.size() < 3) return;
  const HullView wv = cw.view();
  std::vector<NodeRef> nodes;
  std::vector<FpvdView> sets;
  for (std::size_t s = 0; s < m; ++s) {
    if (hull_strictly_inside(wv, sel.sets[s].hull)) continue;
    nodes.push_back(sel.nodes[s]);
    sets.push_back(sel.sets[s]);
  }
  sel.nodes = std::move(nodes);
  sel.sets = std::move(sets);
}

}  // namespace sedq
