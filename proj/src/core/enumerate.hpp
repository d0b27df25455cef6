#pragma once
// Enumeration of all spaces on n labeled points, with an exhaustive
// brute-force oracle and deduplication up to homeomorphism.
//
// The fast enumerator walks assignments of minimal open neighborhoods: a
// finite space is determined by the map x -> smallest open set containing x,
// subject to y in minOpen(x) => minOpen(y) <= minOpen(x). The brute oracle
// filters all 2^(2^n) subset families by the axioms directly.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "space.hpp"

namespace sigma {

inline constexpr std::size_t kMaxBrutePoints = 4;
inline constexpr std::size_t kMaxEnumPoints = 6;

using SpaceVisitor = std::function<void(const SpaceStructure&)>;

// Visits every space on the given ground set, in a fixed deterministic
// order. Throws Errc::too_large beyond the respective point limits.
void for_each_space_brute(const GroundPtr& ground, const SpaceVisitor& visit);
void for_each_space_fast(const GroundPtr& ground, const SpaceVisitor& visit);

struct EnumerationResult {
  std::size_t points = 0;
  std::uint64_t labeled_count = 0;
  std::optional<std::uint64_t> unlabeled_count;
  std::vector<SpaceStructure> spaces;  // labeled spaces, or canonical representatives
};

EnumerationResult enum_brute(std::size_t n, bool materialize = true);
EnumerationResult enum_fast(std::size_t n, bool materialize = true);

// One canonical representative per homeomorphism class, built from the
// canonical form itself and listed in canonical-form order.
EnumerationResult dedupe(const EnumerationResult& labeled);

// Streaming variant: canonical representatives without materializing the
// labeled spaces first.
EnumerationResult enum_up_to_iso(std::size_t n, bool materialize = true);

}  // namespace sigma
