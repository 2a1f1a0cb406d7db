#ifndef SEDQ_SED_MULTI_H
#define SEDQ_SED_MULTI_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sedq/centroid.h"
#include "sedq/fpvd.h"
#include "sedq/range_index.h"

namespace sedq {

// Clockwise runs of ch(S_1 ∪ ... ∪ S_m), each a maximal run of one set's hull.
// Sets must have pairwise disjoint hulls (canonical sets do) and distinct ids.
std::vector<Section> canonical_sections(std::span<const FpvdView> sets);
// Walk along pairwise bridges; nothing when the walk does not close up.
std::optional<std::vector<Section>> canonical_sections_walk(std::span<const FpvdView> sets);
// Runs of owner tags on the hull of all pooled hull vertices.
std::vector<Section> canonical_sections_pooled(std::span<const FpvdView> sets);

// v (a vertex of sets[i]) is also a vertex of the diagram of the union.
bool vertex_survives(std::span<const FpvdView> sets, std::int32_t i, std::int32_t v);

// Boundary point s of cell(p, union) on the ray from vertex v of sets[i] away
// from p = hull point t of sets[i]; p_prime is the foreign point defining the
// boundary there.
struct SeparatingEdgeHit {
  SymPoint s;
  std::int32_t owner = -1;  // set of p_prime
  std::int32_t index = -1;  // hull index of p_prime in its set
  Point p;
  Point p_prime;
};
SeparatingEdgeHit find_separating_edge(std::span<const FpvdView> sets, std::int32_t i,
                                       std::int32_t v, std::int32_t t);
// Same answer by scanning every hull point of every other set.
SeparatingEdgeHit find_separating_edge_linear(std::span<const FpvdView> sets, std::int32_t i,
                                              std::int32_t v, std::int32_t t);

// Optional instrumentation of the non-survival branch.
struct ArrowEvent {
  int k = 0;                          // number of qualifying defining points
  std::array<int, 3> arrows{};        // per qualifier in section order: -1 left, +1 right
};
struct MultiTrace {
  std::vector<ArrowEvent> arrows;
  std::vector<std::pair<std::int32_t, SeparatingEdgeHit>> hits;  // (owner of p, hit)
  std::int64_t survival_checks = 0;
};

struct SectionCandidate {
  enum class Kind : std::uint8_t { Points, Aborted, GlobalCenter };
  Kind kind = Kind::Points;
  std::vector<Point> points;  // 1-3; for GlobalCenter the disk's defining points
  SearchResult search;        // calls == 0 when no search ran
};
SectionCandidate section_search(std::span<const FpvdView> sets, const Section& sec,
                                MultiTrace* trace = nullptr);

struct MultiResult {
  Disk disk;
  std::int32_t sections = 0;
  std::int32_t pool = 0;  // candidate points handed to the final Welzl
  bool short_circuit = false;
};
MultiResult sed_multi(std::span<const FpvdView> sets, MultiTrace* trace = nullptr);

struct QueryResult {
  bool empty = true;
  Disk disk;
  std::int32_t m = 0;       // canonical sets searched
  std::int32_t full_m = 0;  // before pruning
  std::int64_t points = 0;  // |S ∩ Q| (full mode count)
  MultiResult detail;
};
QueryResult sed_query(const RangeIndex& index, const Rect& q, SelectMode mode,
                      MultiTrace* trace = nullptr);

}  // namespace sedq

#endif
