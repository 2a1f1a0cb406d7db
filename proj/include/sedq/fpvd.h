#ifndef SEDQ_FPVD_H
#define SEDQ_FPVD_H

#include <cstdint>
#include <span>
#include <vector>

#include "sedq/geom.h"
#include "sedq/hull.h"

namespace sedq {

/* Farthest-point Voronoi diagram of a clockwise hull, stored as a flat int32
   block so the range tree can pool thousands of them:

     tri[3V]       defining hull indices of each vertex, ascending (= clockwise)
     vedge[3V]     edge in slot k: 0 -> (a,b), 1 -> (b,c), 2 -> (c,a)
     epair[2E]     defining hull indices of each edge, ascending
     evert[2E]     endpoint vertices; -1 marks an unbounded end
     cell_off[h+1], cell_list[2E]
                   edges of each cell, clockwise: sorted by (partner - p) mod h
     cchild[3V]    centroid child across slot k, -1 when that side is an ancestor
     croot         centroid root, -1 without vertices

   V = h - 2 and E = 2h - 3 for h >= 2. Slot k of a vertex leads to the hull
   section a:b, b:c or c:a respectively. */
struct FpvdView {
  HullView hull;
  std::int32_t nv = 0;
  std::int32_t ne = 0;
  const std::int32_t* tri = nullptr;
  const std::int32_t* vedge = nullptr;
  const std::int32_t* epair = nullptr;
  const std::int32_t* evert = nullptr;
  const std::int32_t* cell_off = nullptr;
  const std::int32_t* cell_list = nullptr;
  const std::int32_t* cchild = nullptr;
  std::int32_t croot = -1;

  std::int32_t h() const { return hull.size; }
  std::int32_t def(std::int32_t v, int k) const { return tri[3 * v + k]; }
  const Point& def_point(std::int32_t v, int k) const { return hull[tri[3 * v + k]]; }
  std::int32_t slot_edge(std::int32_t v, int k) const { return vedge[3 * v + k]; }
  std::int32_t edge_def(std::int32_t e, int k) const { return epair[2 * e + k]; }
  std::int32_t edge_vertex(std::int32_t e, int k) const { return evert[2 * e + k]; }
  bool unbounded(std::int32_t e) const { return evert[2 * e] < 0 || evert[2 * e + 1] < 0; }
  std::int32_t other_end(std::int32_t e, std::int32_t v) const {
    return evert[2 * e] == v ? evert[2 * e + 1] : evert[2 * e];
  }
  int slot_of(std::int32_t v, std::int32_t e) const;
  std::span<const std::int32_t> cell(std::int32_t p) const {
    return {cell_list + cell_off[p], cell_list + cell_off[p + 1]};
  }
  // the hull index of edge e other than p
  std::int32_t partner(std::int32_t e, std::int32_t p) const {
    return epair[2 * e] == p ? epair[2 * e + 1] : epair[2 * e];
  }
  SymPoint vertex_sym(std::int32_t v) const {
    return SymPoint::circ(def_point(v, 0), def_point(v, 1), def_point(v, 2));
  }
  Point vertex_position(std::int32_t v) const;
  // Direction of an unbounded edge (away from the hull); for the two-point
  // diagram, the direction of the half-line leaving the midpoint clockwise.
  Point unbounded_direction(std::int32_t e) const;
};

std::int32_t fpvd_vertex_count(std::int32_t h);
std::int32_t fpvd_edge_count(std::int32_t h);
std::size_t fpvd_block_size(std::int32_t h);
// Views a block laid out as above (block must hold fpvd_block_size(h) ints).
FpvdView fpvd_view(const HullView& hull, const std::int32_t* block);
// Builds diagram and centroid decomposition into the block.
void build_fpvd_into(const HullView& hull, std::int32_t* block);
// Given tri, vedge, epair and evert, fills the cell lists and the centroid tree.
void finish_fpvd_block(const HullView& hull, std::int32_t* block);

struct Fpvd {
  Hull hull;
  std::vector<std::int32_t> block;
  FpvdView view() const { return fpvd_view(hull.view(), block.data()); }
};

Fpvd build_fpvd(const Hull& hull);

// Hull index of the farthest hull vertex from q, smallest id on ties.
std::int32_t locate_farthest(const FpvdView& f, const SymPoint& q);
std::int32_t locate_farthest_linear(const HullView& h, const SymPoint& q);

std::vector<std::int32_t> cell_boundary(const FpvdView& f, std::int32_t p);

// Which of the three regions around vertex w (split by the rays from w away
// from its defining points) contains q: slot 0, 1 or 2, or -1 when q == w.
int vertex_region(const FpvdView& f, std::int32_t w, const SymPoint& q);

}  // namespace sedq

#endif
