#ifndef SEDQ_RANGE_INDEX_H
#define SEDQ_RANGE_INDEX_H

#include <cstdint>
#include <span>
#include <vector>

#include "sedq/fpvd.h"
#include "sedq/hull.h"

namespace sedq {

enum class SelectMode : std::uint8_t { Full, Pruned };

struct NodeRef {
  std::int32_t primary = -1;
  std::int32_t secondary = -1;  // global secondary node id
};

// Canonical sets of one query: disjoint subsets of S ∩ Q whose hulls
// together span ch(S ∩ Q).
struct CanonicalSelection {
  SelectMode mode = SelectMode::Full;
  std::vector<NodeRef> nodes;
  std::vector<FpvdView> sets;
  std::int32_t full_count = 0;  // canonical nodes before pruning
  std::int64_t point_count = 0;  // |S ∩ Q|
};

struct IndexStats {
  std::int64_t points = 0;
  std::int64_t duplicates = 0;  // collapsed input points
  std::int64_t primary_nodes = 0;
  std::int64_t secondary_nodes = 0;
  std::int64_t stored_points = 0;  // sum of |P(v)| over secondary nodes
  std::int64_t hull_vertices = 0;
  std::int64_t block_ints = 0;
  double build_seconds = 0;
  // stored_points / (n log2^2 n)
  double stored_constant() const;
};

// Range tree on (x, id) with secondary trees on (y, id); every secondary
// node carries the hull of its points, that hull's diagram and centroid tree.
class RangeIndex {
 public:
  explicit RangeIndex(std::span<const Point> points);

  CanonicalSelection query(const Rect& q, SelectMode mode) const;

  std::span<const Point> points() const { return px_; }
  const IndexStats& stats() const { return stats_; }

  HullView node_hull(std::int32_t s) const;
  FpvdView node_fpvd(std::int32_t s) const;
  // P(v) of a secondary node, in (y, id) order.
  std::vector<Point> node_points(std::int32_t s) const;
  std::int32_t secondary_count() const { return static_cast<std::int32_t>(snodes_.size()); }

 private:
  struct PNode {
    std::int32_t lo, hi;
    std::int32_t left = -1, right = -1;
    std::int64_t ylist = 0;  // offset of the (y, id)-sorted indices
    std::int32_t sroot = -1;
  };
  struct SNode {
    std::int32_t a, b;  // range in the owner's y-list
    std::int32_t left = -1, right = -1;
    std::int64_t hull = 0;
    std::int32_t hsize = 0;
    std::int64_t block = 0;
  };

  std::int32_t build_primary(std::int32_t lo, std::int32_t hi);
  std::int32_t build_secondary(const std::int32_t* ys, std::int32_t a, std::int32_t b);
  void select_secondary(std::int32_t s, const std::int32_t* ys, std::int32_t a, std::int32_t b,
                        std::vector<NodeRef>& out, std::int32_t primary) const;
  void select_primary(std::int32_t p, std::int32_t i, std::int32_t j, const Rect& q,
                      std::vector<NodeRef>& out) const;

  std::vector<Point> px_;  // sorted by (x, id), duplicates removed
  std::vector<PNode> pnodes_;
  std::vector<SNode> snodes_;
  std::vector<std::int32_t> ylists_;
  std::vector<std::int32_t> hulls_;
  std::vector<std::int32_t> blocks_;
  IndexStats stats_;
};

// Drops the sets whose hull lies strictly inside ch(W), W being the extreme
// points of the whole selection in 64 directions. Such sets own no vertex of
// ch(S ∩ Q), so hull-completeness is kept.
void prune_selection(CanonicalSelection& sel);

}  // namespace sedq

#endif
