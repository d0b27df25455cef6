#pragma once
// The theorem registry: every covered statement as an executable,
// universally quantified check over a space, plus the driver that runs the
// registry over all enumerated spaces and the property searcher.
//
// A law failure is surfaced verbatim with a witness; it signals either an
// implementation bug or a genuine finite refutation and is never suppressed.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "propexpr.hpp"
#include "space.hpp"

namespace sigma {

// Precomputed per-space operator and predicate tables indexed by subset
// mask. Values come from the definitional operator implementations.
struct SpaceTables {
  const SpaceStructure* space = nullptr;
  std::size_t n = 0;
  Mask full = 0;
  std::size_t count = 0;     // 2^n
  std::vector<Mask> canon;   // all subsets in canonical order

  std::vector<Mask> kernel, closure_of, interior_of, derived_of, vee_of, gsc_set;
  std::vector<char> open_f, closed_f, g_closed_f, gstar_closed_f, gstar_open_f, wedge_f,
      vee_set_f, g_wedge_f, g_vee_f, lambda_closed_f, lambda_open_f, gsc_flag;

  AxiomFlags axioms;
};

SpaceTables build_tables(const SpaceStructure& space);

// Table-backed axiom flags; must agree with the per-space classifiers (the
// unit suite compares them exhaustively on small n).
AxiomFlags axioms_from_tables(const SpaceTables& t);

struct LawWitness {
  std::vector<Mask> sets;
  std::vector<std::size_t> points;
  std::string note;
};

struct LawCheck {
  std::uint64_t checks = 0;  // quantifier instantiations examined
  std::optional<LawWitness> witness;
  bool holds() const { return !witness.has_value(); }
};

struct Law {
  std::string id;
  std::string statement;
  LawCheck (*check)(const SpaceTables&);
};

const std::vector<Law>& law_registry();
const Law* find_law(std::string_view id);  // nullptr when unknown

// Runs one law over one space (spec operation verify_law).
LawCheck run_law(const Law& law, const SpaceStructure& space);

struct FoundWitness {
  std::uint64_t space_index = 0;  // global index in enumeration order
  SpaceStructure space;
  LawWitness witness;
};

struct LawVerdict {
  std::string id;
  std::string statement;
  bool holds = true;
  std::uint64_t spaces_checked = 0;
  std::uint64_t sets_checked = 0;
  std::optional<FoundWitness> witness;  // smallest space index, deterministic
};

struct VerifyReport {
  std::size_t max_points = 0;
  std::uint64_t total_spaces = 0;
  std::vector<LawVerdict> laws;
  bool all_hold() const;
};

// Runs the registry (or a single law) over every labeled space with
// 1..max_points points. Throws Errc::unknown_law for a bad id.
VerifyReport verify_all(std::size_t max_points, const std::optional<std::string>& law_id,
                        std::size_t threads);

struct SearchResult {
  std::string property;
  std::size_t max_points = 0;
  std::uint64_t classes_examined = 0;   // homeomorphism classes tested
  std::optional<SpaceStructure> witness;  // smallest n, canonically first
};

SearchResult search_property(const std::string& expr, std::size_t max_points,
                             std::size_t threads);

}  // namespace sigma
