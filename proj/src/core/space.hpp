#pragma once
// Finite ground sets, subsets as bit masks, and validated space structures.
// A space is a ground set plus a family of open subsets containing {} and X
// and closed under pairwise union and intersection (on a finite ground set
// the countable-union axiom collapses to the finite one, so these families
// are exactly the finite topologies).

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

using Mask = std::uint64_t;  // bit i <-> point i of the ground set

// Subsets are single machine words; canonicalization permutes points.
inline constexpr std::size_t kMaxGroundSize = 16;
inline constexpr std::size_t kMaxCanonPoints = 7;

inline int popcount(Mask m) { return std::popcount(m); }

// Canonical subset order: ascending cardinality, then the membership vector
// read as an integer. Keeps families, reports and witnesses deterministic.
inline bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Sorts into canonical order and drops duplicates.
std::vector<Mask> canonical_family(std::vector<Mask> masks);

// All 2^n subsets of an n-point ground set in canonical order.
std::vector<Mask> subsets_in_canonical_order(std::size_t n);

class GroundSet {
 public:
  // Labels must be distinct and nonempty; their order is fixed for the life
  // of the value (index i <-> label i).
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  Mask full() const { return (Mask{1} << labels_.size()) - 1; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::string format_subset(Mask m) const;  // e.g. "{a,c}", "{}"
  std::vector<std::string> subset_labels(Mask m) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

// Ground set with single-letter labels a, b, c, ... used by the enumerators.
GroundPtr default_ground(std::size_t n);

// Immutable after construction; safe to share across threads.
struct SpaceStructure {
  GroundPtr ground;
  std::vector<Mask> opens;    // canonical order, duplicate free, contains {} and X
  std::vector<Mask> closeds;  // complements of opens, canonical order

  std::size_t size() const { return ground->size(); }
  Mask full() const { return ground->full(); }
  bool is_open(Mask m) const;
  bool is_closed(Mask m) const;
};

// Checks the family axioms and builds the structure (opens are normalized
// into canonical order). Throws Error with a witness pair on failure.
SpaceStructure validate_space(GroundPtr ground, const std::vector<Mask>& opens);
SpaceStructure validate_space(const GroundSet& ground, const std::vector<Mask>& opens);

// Exactly { X - U : U in opens }, canonical order.
std::vector<Mask> closed_sets(const SpaceStructure& space);

// Moves point i to position perm[i]; opens are relabeled accordingly.
SpaceStructure relabel(const SpaceStructure& space, const std::vector<std::size_t>& perm);

// Relabeling-invariant encoding: the open family minimized over all point
// permutations. Two spaces have equal forms iff they are homeomorphic.
struct CanonicalForm {
  std::size_t points = 0;
  std::vector<Mask> opens;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const SpaceStructure& space);

}  // namespace sigma
