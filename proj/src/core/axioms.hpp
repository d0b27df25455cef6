#pragma once
// Space-level classifiers: T0, T1, R0, weak R0, strongly symmetric, the
// C/C* families, Tw, Tw4, T3w8, T5w8 and bicompactness.
//
// Axioms with a second characterization expose it as a *_via_*
// function; the main entry point computes both, asserts agreement, and
// returns the shared verdict. The law registry re-checks the agreements
// with witness reporting.

#include <optional>
#include <string>
#include <vector>

#include "space.hpp"

namespace sigma {

struct AxiomFlags {
  bool t0 = false;
  bool t1 = false;
  bool r0 = false;
  bool weak_r0 = false;
  bool strongly_symmetric = false;
  bool c_eq_cstar = false;
  bool t_w = false;
  bool t_w4 = false;
  bool t_3w8 = false;
  bool t_5w8 = false;
  bool bicompact = false;

  bool get(std::string_view name) const;  // by report name, e.g. "TW4"
};

// Report names in the implication-chain display order.
const std::vector<std::string>& axiom_names();

struct AxiomWitness {
  std::string axiom;               // report name of the failed flag
  std::vector<std::size_t> points;
  std::vector<Mask> sets;
  std::string note;
};

struct AxiomReport {
  AxiomFlags flags;
  std::vector<AxiomWitness> witnesses;  // one per false flag, canonical-first
};

struct CStarFamilies {
  std::vector<Mask> c;      // { A : cl(X - A) is closed } — all subsets on finite spaces
  std::vector<Mask> cstar;  // { A : g*-closure of (X - A) is g*-closed }
  bool equal() const { return c == cstar; }
};

// Pairwise open separation (one point in, the other out); the second route
// checks that every singleton is lambda*-closed.
bool is_T0(const SpaceStructure& space);
bool t0_definitional(const SpaceStructure& space);
bool t0_via_lambda(const SpaceStructure& space);

bool is_T1(const SpaceStructure& space);
bool t1_definitional(const SpaceStructure& space);
bool t1_via_wedge(const SpaceStructure& space);  // every singleton a wedge set

// Every open set contains the closure of each of its singletons.
bool is_R0(const SpaceStructure& space);

// Every lambda*-closed singleton is a wedge set.
bool is_weak_R0(const SpaceStructure& space);

// Every singleton g*-closed.
bool is_strongly_symmetric(const SpaceStructure& space);

CStarFamilies compute_C_Cstar(const SpaceStructure& space);

// Every g*-closed set closed. Cross-checked via three characterizations
// (registered as laws L-4.3, L-4.4, L-5.6).
bool is_Tw(const SpaceStructure& space);
bool tw_via_singletons(const SpaceStructure& space);   // singletons open-or-closed and C = C*
bool tw_via_g_wedge(const SpaceStructure& space);      // every g-wedge set a wedge set and C = C*
bool tw_via_lambda(const SpaceStructure& space);       // every subset lambda*-closed and C = C*

// Every finite / countable / arbitrary subset separable from each outside
// point by an open-or-closed set. On a finite ground set the three
// quantifier domains coincide; each is still computed from its own
// definition and the collapse is a registered law.
bool is_Tw4(const SpaceStructure& space);
bool tw4_definitional(const SpaceStructure& space);
bool tw4_via_lambda(const SpaceStructure& space);      // every finite subset lambda*-closed
bool is_T3w8(const SpaceStructure& space);
bool t3w8_definitional(const SpaceStructure& space);
bool t3w8_via_lambda(const SpaceStructure& space);
bool is_T5w8(const SpaceStructure& space);
bool t5w8_definitional(const SpaceStructure& space);
bool t5w8_via_lambda(const SpaceStructure& space);

// Always true on finite spaces; present for interface symmetry with the
// symbolic catalog.
bool is_bicompact(const SpaceStructure& space);

AxiomReport classify(const SpaceStructure& space);

}  // namespace sigma
