#include "sedq/sed_single.h"

#include <algorithm>

namespace sedq {

EdgeDecision analyze_edge(const SymPoint& s, const Point& pa, const Point& pb) {
  int t = bisector_offset_sign(s, pa, pb);
  if (t == 0) return {EdgeDecision::Kind::CenterFound};
  return {t > 0 ? EdgeDecision::Kind::DiscardAB : EdgeDecision::Kind::DiscardBA};
}

EdgeDecision analyze_edge(const Point& s, const Point& pa, const Point& pb, double tol) {
  double da = dist_sq(s, pa), db = dist_sq(s, pb);
  if (std::fabs(da - db) > tol * std::max({da, db, dist_sq(pa, pb)})) {
    throw Error(ErrorCode::NotOnBisector, "point is not equidistant from the pair");
  }
  return analyze_edge(SymPoint::at(s), pa, pb);
}

std::optional<Section> discarded_section(const EdgeDecision& d, std::int32_t h, std::int32_t a,
                                         std::int32_t b) {
  switch (d.kind) {
    case EdgeDecision::Kind::CenterFound: return std::nullopt;
    case EdgeDecision::Kind::DiscardAB: return inner_section(h, a, b);
    case EdgeDecision::Kind::DiscardBA: return inner_section(h, b, a);
  }
  return std::nullopt;
}

int sed_vertex_step(const FpvdView& f, std::int32_t w) {
  SymPoint v = f.vertex_sym(w);
  int keep = -1, kept = 0;
  for (int k = 0; k < 3; ++k) {
    EdgeDecision d = analyze_edge(v, f.def_point(w, k), f.def_point(w, (k + 1) % 3));
    // the slot's own side survives only when the other side is the one ruled out
    if (d.kind == EdgeDecision::Kind::DiscardBA) {
      keep = k;
      ++kept;
    }
  }
  SEDQ_CHECK(kept <= 1);
  return keep;
}

SingleSed sed_of_set_detail(const FpvdView& f) {
  SingleSed out;
  const std::int32_t h = f.h();
  if (h == 0) throw Error(ErrorCode::EmptyInput, "empty set");
  if (h == 1) {
    out.disk = disk_from_point(f.hull[0]);
    return out;
  }
  if (h == 2) {
    out.disk = disk_from_pair(f.hull[0], f.hull[1]);
    out.search.kind = SearchResult::Kind::Edge;
    out.search.id = 0;
    return out;
  }
  out.search = centroid_search(f, [&](std::int32_t w) {
    int k = sed_vertex_step(f, w);
    if (k < 0) return OracleAnswer::success();
    return OracleAnswer::descend(f.slot_edge(w, k));
  });
  SEDQ_CHECK(out.search.consistent);
  if (out.search.kind == SearchResult::Kind::Vertex) {
    std::int32_t w = out.search.id;
    out.disk = disk_circum(f.def_point(w, 0), f.def_point(w, 1), f.def_point(w, 2));
  } else {
    std::int32_t e = out.search.id;
    out.disk = disk_from_pair(f.hull[f.edge_def(e, 0)], f.hull[f.edge_def(e, 1)]);
  }
  return out;
}

Disk sed_of_set(const FpvdView& f) { return sed_of_set_detail(f).disk; }
Disk sed_of_set(const Fpvd& f) { return sed_of_set(f.view()); }

}  // namespace sedq
