#pragma once
// The six operators every predicate is built from: closure, interior,
// derived set, kernel, hull of closed subsets, and g*-closure.
//
// Closure is adherence: cl(A) = { x : every open U containing x meets A }.
// On finite spaces this coincides with the intersection of all closed
// supersets; the law suite asserts the identity rather than assuming it.

#include "space.hpp"

namespace sigma {

// { x : every open U with x in U meets A }
Mask closure(const SpaceStructure& space, Mask a);

// Union of all opens contained in A.
Mask interior(const SpaceStructure& space, Mask a);

// { x : every open U with x in U meets A - {x} }
Mask derived_set(const SpaceStructure& space, Mask a);

// Intersection of all opens containing A (X when only X qualifies).
Mask kernel_wedge(const SpaceStructure& space, Mask a);

// Union of all closed sets contained in A (empty when only {} qualifies).
Mask vee(const SpaceStructure& space, Mask a);

struct GStarClosureResult {
  Mask closure_set = 0;       // intersection of all g*-closed supersets
  bool is_gstar_closed = false;  // that intersection need not be g*-closed itself
};

// The intersection of g*-closed sets is not g*-closed in general; the flag
// is returned eagerly because the C* family consumes exactly that pairing.
GStarClosureResult gstar_closure(const SpaceStructure& space, Mask e);

}  // namespace sigma
