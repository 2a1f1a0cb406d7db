#ifndef SEDQ_CENTROID_H
#define SEDQ_CENTROID_H

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "sedq/fpvd.h"

namespace sedq {

struct OracleAnswer {
  enum class Kind : std::uint8_t { Success, Descend, Abort };
  Kind kind = Kind::Success;
  std::int32_t edge = -1;

  static OracleAnswer success() { return {Kind::Success, -1}; }
  static OracleAnswer descend(std::int32_t e) { return {Kind::Descend, e}; }
  static OracleAnswer abort() { return {Kind::Abort, -1}; }
};

struct SearchResult {
  enum class Kind : std::uint8_t { Vertex, Edge, Aborted };
  Kind kind = Kind::Aborted;
  std::int32_t id = -1;
  int calls = 0;
  // false when an Edge result was reached through an ancestor whose own
  // answer pointed elsewhere
  bool consistent = true;
};

// Writes the centroid child table (3 per vertex) and returns the root.
std::int32_t build_centroid_into(const FpvdView& f, std::int32_t* cchild);

struct CentroidTree {
  std::vector<std::int32_t> child;
  std::int32_t root = -1;
};
CentroidTree build_centroid(const FpvdView& f);
// Depth of every vertex in the centroid tree (root = 1).
std::vector<int> centroid_depths(const FpvdView& f);

// Upper bound on oracle calls of one search over a hull of size h.
inline int search_call_bound(std::int32_t h) {
  int lg = h <= 1 ? 0 : std::bit_width(static_cast<std::uint32_t>(h - 1));
  return lg + 2;
}

void note_search(int calls, int bound);

// Centroid-guided search: oracle(v) answers at diagram vertex v.
template <class Oracle>
SearchResult centroid_search(const FpvdView& f, Oracle&& oracle) {
  SearchResult res;
  if (f.croot < 0) throw Error(ErrorCode::NoVertices, "search on a diagram without vertices");
  std::int32_t u = f.croot;
  // visited path and the edge each vertex pointed to
  std::int32_t path_v[40];
  std::int32_t path_e[40];
  int depth = 0;
  for (;;) {
    ++res.calls;
    OracleAnswer a = oracle(u);
    if (a.kind == OracleAnswer::Kind::Success) {
      res.kind = SearchResult::Kind::Vertex;
      res.id = u;
      break;
    }
    if (a.kind == OracleAnswer::Kind::Abort) {
      res.kind = SearchResult::Kind::Aborted;
      break;
    }
    int k = f.slot_of(u, a.edge);
    SEDQ_CHECK(k >= 0);
    if (f.unbounded(a.edge)) {
      res.kind = SearchResult::Kind::Edge;
      res.id = a.edge;
      break;
    }
    std::int32_t c = f.cchild[3 * u + k];
    if (c < 0) {
      std::int32_t w = f.other_end(a.edge, u);
      int at = -1;
      for (int i = 0; i < depth; ++i)
        if (path_v[i] == w) at = i;
      if (at < 0) throw Error(ErrorCode::InconsistentOracle, "far side never visited");
      res.consistent = path_e[at] == a.edge;
      res.kind = SearchResult::Kind::Edge;
      res.id = a.edge;
      break;
    }
    SEDQ_CHECK(depth < 40);
    path_v[depth] = u;
    path_e[depth] = a.edge;
    ++depth;
    u = c;
  }
  const int bound = search_call_bound(f.h());
  SEDQ_CHECK(res.calls <= bound);
  note_search(res.calls, bound);
  return res;
}

}  // namespace sedq

#endif
