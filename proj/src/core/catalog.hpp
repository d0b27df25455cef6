#pragma once
// Symbolic encodings of infinite example spaces, and machine checks of the
// claims the catalog makes about them. This is the only module where spaces
// that are not topological spaces appear (countable unions of opens stay
// open, arbitrary ones need not).
//
// A symbolic set is a union of cells: named atoms plus anonymous regions
// carrying a cardinality tag. Cells partition the ground set, so boolean
// algebra on symbolic sets is exact; each schema supplies its open rule and
// hand-derived kernel/closure case analyses, and the claim suite doubles as
// the correctness oracle for those rules.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "space.hpp"

namespace sigma {

enum class CellSize {
  atom,         // a single named point
  finite,       // finite nonempty anonymous chunk
  countable,    // countably infinite
  uncountable,  // uncountable
};

struct Cell {
  std::string name;
  CellSize size = CellSize::atom;
  std::string bulk_class;  // e.g. "irr", "Q"
};

class Schema;

struct SymSet {
  const Schema* schema = nullptr;
  std::uint32_t bits = 0;

  friend bool operator==(const SymSet&, const SymSet&) = default;
};

class Schema {
 public:
  using OpenRule = std::function<bool(std::uint32_t)>;
  using SetRule = std::function<std::uint32_t(std::uint32_t)>;
  using BetweenRule = std::function<bool(std::uint32_t, std::uint32_t)>;

  Schema(std::string name, std::vector<Cell> cells, OpenRule open, SetRule kernel,
         SetRule closure, BetweenRule exists_open_between);

  const std::string& name() const { return name_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::uint32_t full_bits() const { return full_; }
  std::size_t cell_index(std::string_view name) const;  // throws on unknown cell

  SymSet empty_set() const { return {this, 0}; }
  SymSet full_set() const { return {this, full_}; }
  SymSet set(std::initializer_list<std::string_view> names) const;

  bool is_open(SymSet s) const;
  SymSet kernel(SymSet s) const;
  SymSet closure(SymSet s) const;
  // True iff some open G satisfies lo <= G <= hi (lo <= hi required).
  bool exists_open_between(SymSet lo, SymSet hi) const;

  // Cardinality views of the cell content of a raw bit set.
  bool countable_bits(std::uint32_t bits) const;  // no uncountable cell
  bool finite_bits(std::uint32_t bits) const;     // atoms and finite cells only

  // A set that is a union of open sets yet not open; absent for schemas
  // that happen to be topological spaces.
  std::optional<SymSet> non_topology_witness() const { return union_witness_; }
  void set_non_topology_witness(SymSet w) { union_witness_ = w; }

  // One schema's literal open family is not closed under the degenerate
  // intersection case; its battery skips the pairwise intersection check
  // (documented at the definition site).
  bool check_intersections() const { return check_intersections_; }
  void set_check_intersections(bool v) { check_intersections_ = v; }

 private:
  std::string name_;
  std::vector<Cell> cells_;
  std::uint32_t full_ = 0;
  OpenRule open_;
  SetRule kernel_;
  SetRule closure_;
  BetweenRule between_;
  std::optional<SymSet> union_witness_;
  bool check_intersections_ = true;
};

// Boolean algebra; throws Errc::schema_mismatch when the operands live in
// different schemas.
SymSet sym_union(SymSet a, SymSet b);
SymSet sym_intersect(SymSet a, SymSet b);
SymSet sym_complement(SymSet a);

bool sym_is_empty(SymSet a);
bool sym_subset(SymSet a, SymSet b);
bool sym_countable(SymSet a);
bool sym_finite(SymSet a);

std::string sym_format(SymSet a);  // "{s2,A}" in cell order

// Derived operators (De Morgan duals of the schema rules).
SymSet sym_kernel(SymSet a);
SymSet sym_closure(SymSet a);
SymSet sym_vee(SymSet a);       // X - ker(X - A)
SymSet sym_interior(SymSet a);  // X - cl(X - A)

// Predicates, instantiated symbolically from the finite-module formulas.
bool sym_is_open(SymSet a);
bool sym_is_closed(SymSet a);
bool sym_is_wedge(SymSet a);
bool sym_is_vee_set(SymSet a);
bool sym_is_g_closed(SymSet a);       // cl(A) <= ker(A)
bool sym_is_g_wedge(SymSet a);        // ker(A) inside every closed superset
bool sym_is_g_vee(SymSet a);
bool sym_is_gstar_closed(SymSet a);   // some closed F with A <= F <= ker(A)
bool sym_is_gstar_open(SymSet a);
bool sym_is_lambda_closed(SymSet a);  // A = ker(A) & cl(A)
bool sym_is_lambda_open(SymSet a);

// Bulk descriptor view of one class of a symbolic set.
enum class BulkDescriptor {
  empty,
  finite_nonempty,
  countably_infinite,
  uncountable,  // uncountable part with uncountable complement in the class
  co_countable,
  all,
};

BulkDescriptor bulk_descriptor(SymSet s, std::string_view bulk_class);
std::string_view to_string(BulkDescriptor d);

struct ClaimStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ClaimResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::vector<ClaimStep> steps;
};

// Shared sanity battery over every cell combination of a schema: operator
// laws, open-family closure samples, and the non-topology witness.
std::vector<ClaimStep> schema_battery(const Schema& schema);

const std::vector<std::string>& claim_ids();
const std::vector<const Schema*>& schema_registry();

// Throws Errc::unknown_claim for a bad id.
ClaimResult run_claim(std::string_view id);
std::vector<ClaimResult> run_all_claims();

}  // namespace sigma
