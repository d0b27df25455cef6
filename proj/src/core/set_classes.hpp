#pragma once
// Per-set predicates: g-closed, g*-closed/open, wedge/vee sets and their
// generalized forms, lambda*-closed/open, weak separation.
//
// Predicates with two independent characterizations are implemented twice
// (the *_alt / *_decomp variants); the law registry asserts the agreement
// on every enumerated space instead of assuming it.

#include "operators.hpp"
#include "space.hpp"

namespace sigma {

struct SetClassification {
  bool open = false;
  bool closed = false;
  bool g_closed = false;
  bool gstar_closed = false;
  bool gstar_open = false;
  bool wedge_set = false;
  bool vee_set = false;
  bool g_wedge_set = false;
  bool g_vee_set = false;
  bool lambda_star_closed = false;
  bool lambda_star_open = false;
};

// cl(A) contained in every open superset of A, i.e. cl(A) <= ker(A).
bool is_g_closed(const SpaceStructure& space, Mask a);

// Some closed F with A <= F <= ker(A).
bool is_gstar_closed(const SpaceStructure& space, Mask a);

// Some closed F >= A such that F - A contains no nonempty closed set.
// Must agree with is_gstar_closed everywhere (law L-3.5).
bool is_gstar_closed_alt(const SpaceStructure& space, Mask a);

// Complement is g*-closed.
bool is_gstar_open(const SpaceStructure& space, Mask a);

// Some open V <= A with vee(A) <= V. Must agree with is_gstar_open (L-3.14).
bool is_gstar_open_alt(const SpaceStructure& space, Mask a);

// A equals the intersection of all opens containing it.
bool is_wedge_set(const SpaceStructure& space, Mask a);

// A equals the union of all closed sets inside it.
bool is_vee_set(const SpaceStructure& space, Mask a);

// ker(A) is contained in every closed superset of A.
bool is_g_wedge_set(const SpaceStructure& space, Mask a);

// Every open subset of A is contained in vee(A).
bool is_g_vee_set(const SpaceStructure& space, Mask a);

// A = ker(A) & cl(A).
bool is_lambda_star_closed(const SpaceStructure& space, Mask a);

// Exhaustive search for A = L & cl(F) with L a wedge set and F any subset;
// the independent oracle for is_lambda_star_closed (law L-5.3).
bool is_lambda_star_closed_decomp(const SpaceStructure& space, Mask a);

// A = vee(A) | int(A); equals is_lambda_star_closed(X - A) (law L-5.16).
bool is_lambda_star_open(const SpaceStructure& space, Mask a);

// Exhaustive search for A = M | int(V) with M a vee set (law L-5.14).
bool is_lambda_star_open_decomp(const SpaceStructure& space, Mask a);

// Opens U >= A and V >= B exist with A & V = B & U = {}.
bool weakly_separated(const SpaceStructure& space, Mask a, Mask b);

SetClassification classify_set(const SpaceStructure& space, Mask a);

}  // namespace sigma
