#include "operators.hpp"

#include "set_classes.hpp"

namespace sigma {

Mask closure(const SpaceStructure& space, Mask a) {
  // x is excluded exactly when some open containing x is disjoint from A.
  Mask out = space.full();
  for (Mask u : space.opens)
    if ((u & a) == 0) out &= ~u;
  return out;
}

Mask interior(const SpaceStructure& space, Mask a) {
  Mask out = 0;
  for (Mask u : space.opens)
    if ((u & ~a) == 0) out |= u;
  return out;
}

Mask derived_set(const SpaceStructure& space, Mask a) {
  // x survives unless some open U with x in U has U & (A - {x}) empty,
  // i.e. U & A is empty or equal to {x}.
  Mask out = space.full();
  for (Mask u : space.opens) {
    Mask t = u & a;
    if (t == 0)
      out &= ~u;
    else if ((t & (t - 1)) == 0)
      out &= ~t;
  }
  return out;
}

Mask kernel_wedge(const SpaceStructure& space, Mask a) {
  Mask out = space.full();  // X is always open
  for (Mask u : space.opens)
    if ((a & ~u) == 0) out &= u;
  return out;
}

Mask vee(const SpaceStructure& space, Mask a) {
  Mask out = 0;
  for (Mask f : space.closeds)
    if ((f & ~a) == 0) out |= f;
  return out;
}

GStarClosureResult gstar_closure(const SpaceStructure& space, Mask e) {
  const Mask full = space.full();
  Mask acc = full;  // X is closed, hence g*-closed
  for (Mask a = 0; a <= full; ++a)
    if ((e & ~a) == 0 && is_gstar_closed(space, a)) acc &= a;
  return GStarClosureResult{acc, is_gstar_closed(space, acc)};
}

}  // namespace sigma
