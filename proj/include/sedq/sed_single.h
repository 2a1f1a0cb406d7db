#ifndef SEDQ_SED_SINGLE_H
#define SEDQ_SED_SINGLE_H

#include <optional>

#include "sedq/centroid.h"
#include "sedq/fpvd.h"

namespace sedq {

// Outcome of looking at a point s on the bisector of clockwise hull points
// p_a, p_b: either s is their midpoint (the center), or one side of the hull
// cannot hold defining points.
struct EdgeDecision {
  enum class Kind : std::uint8_t { CenterFound, DiscardAB, DiscardBA };
  Kind kind = Kind::CenterFound;
  // DiscardAB: section a+1:b-1; DiscardBA: section b+1:a-1
};

// Exact for symbolic s; s must lie on the bisector.
EdgeDecision analyze_edge(const SymPoint& s, const Point& pa, const Point& pb);
// Checks equidistance with a relative tolerance first (NotOnBisector).
EdgeDecision analyze_edge(const Point& s, const Point& pa, const Point& pb, double tol = 1e-9);
// The discarded section for hull indices a, b (nothing when it is empty or
// when the center was found).
std::optional<Section> discarded_section(const EdgeDecision& d, std::int32_t h, std::int32_t a,
                                         std::int32_t b);

// Slot (0..2) whose side survives at diagram vertex w, or -1 when the
// defining triangle is not obtuse (the circumdisk is the answer).
int sed_vertex_step(const FpvdView& f, std::int32_t w);

struct SingleSed {
  Disk disk;
  SearchResult search;
};
SingleSed sed_of_set_detail(const FpvdView& f);
Disk sed_of_set(const FpvdView& f);
Disk sed_of_set(const Fpvd& f);

}  // namespace sedq

#endif
