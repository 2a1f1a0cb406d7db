#ifndef SEDQ_SED_RANDOMIZED_H
#define SEDQ_SED_RANDOMIZED_H

#include <cstdint>
#include <span>

#include "sedq/fpvd.h"
#include "sedq/range_index.h"

namespace sedq {

struct DmdKey {
  std::int32_t x = 1, y = 1, z = 1;
  bool operator==(const DmdKey&) const = default;
};

struct DmdStats {
  std::int64_t cells_evaluated = 0;
  std::int64_t base_cases_solved = 0;
  std::int64_t containment_checks = 0;
  bool operator==(const DmdStats&) const = default;
};

// Some point of the set lies outside d: one farthest-point lookup.
bool boundary_check(const FpvdView& f, const Disk& d);

struct DmdResult {
  Disk disk;
  DmdStats stats;
};
// Smallest disk around the union of the sets, which are shuffled with seed.
DmdResult dmd(std::span<const FpvdView> sets, std::uint64_t seed);
DmdResult dmd_query(const CanonicalSelection& sel, std::uint64_t seed);

}  // namespace sedq

#endif
