#include "sedq/sed_randomized.h"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

#include "sedq/error.h"
#include "sedq/sed_multi.h"
#include "sedq/sed_single.h"

namespace sedq {

bool boundary_check(const FpvdView& f, const Disk& d) {
  std::int32_t far = locate_farthest(f, disk_center_sym(d));
  return !disk_contains_exact(d, f.hull[far]);
}

namespace {

// DMD(x, y, z) is the disk of S_1..S_z together with S_{y+z} and S_{x+y+z}
// (1-based over the shuffled order). Dropping one of the last three sets
// leaves a subproblem of the same shape:
//   without S_z        -> (x, y + 1, z - 1)
//   without S_{y+z}    -> (x + y, 1, z - 1)
//   without S_{x+y+z}  -> (y, 1, z - 1)
class Dmd {
 public:
  Dmd(std::span<const FpvdView> sets) : sets_(sets) {}

  Disk solve(DmdKey k) {
    auto key = pack(k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++stats.cells_evaluated;
    Disk d = eval(k);
    memo_.emplace(key, d);
    return d;
  }

  DmdStats stats;

 private:
  static std::uint64_t pack(DmdKey k) {
    return (static_cast<std::uint64_t>(k.x) << 42) | (static_cast<std::uint64_t>(k.y) << 21) |
           static_cast<std::uint64_t>(k.z);
  }

  const FpvdView& set(std::int32_t one_based) const { return sets_[one_based - 1]; }

  bool covers(const Disk& d, std::int32_t s) {
    ++stats.containment_checks;
    return !boundary_check(set(s), d);
  }

  Disk base(std::int32_t a, std::int32_t b, std::int32_t c) {
    ++stats.base_cases_solved;
    FpvdView three[3] = {set(a), set(b), set(c)};
    return sed_multi(three).disk;
  }

  Disk eval(DmdKey k) {
    const std::int32_t x = k.x, y = k.y, z = k.z;
    const std::int32_t last = x + y + z, mid = y + z;
    if (z == 1) return base(1, mid, last);
    // the order of the three tests follows Eppstein's scheme
    if (y == 1) {
      if (Disk d = solve({y, 1, z - 1}); covers(d, last)) return d;
      if (Disk d = solve({x + y, 1, z - 1}); covers(d, mid)) return d;
      if (Disk d = solve({x, y + 1, z - 1}); covers(d, z)) return d;
    } else {
      if (Disk d = solve({x, y + 1, z - 1}); covers(d, z)) return d;
      if (Disk d = solve({x + y, 1, z - 1}); covers(d, mid)) return d;
      if (Disk d = solve({y, 1, z - 1}); covers(d, last)) return d;
    }
    // each of the three owns a defining point, so they alone fix the disk
    return base(z, mid, last);
  }

  std::span<const FpvdView> sets_;
  std::unordered_map<std::uint64_t, Disk> memo_;
};

}  // namespace

DmdResult dmd(std::span<const FpvdView> sets, std::uint64_t seed) {
  if (sets.empty()) throw Error(ErrorCode::EmptyQuery, "no canonical sets");
  DmdResult out;
  const auto m = static_cast<std::int32_t>(sets.size());
  if (m == 1) {
    out.disk = sed_of_set(sets[0]);
    return out;
  }
  if (m == 2) {
    out.stats.base_cases_solved = 1;
    out.disk = sed_multi(sets).disk;
    return out;
  }
  std::vector<FpvdView> order(sets.begin(), sets.end());
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  Dmd run(order);
  out.disk = run.solve({1, 1, m - 2});
  out.stats = run.stats;
  return out;
}

DmdResult dmd_query(const CanonicalSelection& sel, std::uint64_t seed) {
  return dmd(sel.sets, seed);
}

}  // namespace sedq
