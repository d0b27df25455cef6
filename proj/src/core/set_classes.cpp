#include "set_classes.hpp"

#include <algorithm>

namespace sigma {

bool is_g_closed(const SpaceStructure& space, Mask a) {
  return (closure(space, a) & ~kernel_wedge(space, a)) == 0;
}

bool is_gstar_closed(const SpaceStructure& space, Mask a) {
  const Mask ker = kernel_wedge(space, a);
  for (Mask f : space.closeds)
    if ((a & ~f) == 0 && (f & ~ker) == 0) return true;
  return false;
}

bool is_gstar_closed_alt(const SpaceStructure& space, Mask a) {
  for (Mask f : space.closeds) {
    if ((a & ~f) != 0) continue;
    const Mask gap = f & ~a;
    bool contains_closed = false;
    for (Mask c : space.closeds)
      if (c != 0 && (c & ~gap) == 0) {
        contains_closed = true;
        break;
      }
    if (!contains_closed) return true;
  }
  return false;
}

bool is_gstar_open(const SpaceStructure& space, Mask a) {
  return is_gstar_closed(space, space.full() & ~a);
}

bool is_gstar_open_alt(const SpaceStructure& space, Mask a) {
  const Mask hull = vee(space, a);
  for (Mask v : space.opens)
    if ((v & ~a) == 0 && (hull & ~v) == 0) return true;
  return false;
}

bool is_wedge_set(const SpaceStructure& space, Mask a) {
  return kernel_wedge(space, a) == a;
}

bool is_vee_set(const SpaceStructure& space, Mask a) { return vee(space, a) == a; }

bool is_g_wedge_set(const SpaceStructure& space, Mask a) {
  const Mask ker = kernel_wedge(space, a);
  for (Mask f : space.closeds)
    if ((a & ~f) == 0 && (ker & ~f) != 0) return false;
  return true;
}

bool is_g_vee_set(const SpaceStructure& space, Mask a) {
  const Mask hull = vee(space, a);
  for (Mask u : space.opens)
    if ((u & ~a) == 0 && (u & ~hull) != 0) return false;
  return true;
}

bool is_lambda_star_closed(const SpaceStructure& space, Mask a) {
  return (kernel_wedge(space, a) & closure(space, a)) == a;
}

bool is_lambda_star_closed_decomp(const SpaceStructure& space, Mask a) {
  const Mask full = space.full();
  // Candidate closures: only cl(F) matters, so iterate distinct values.
  std::vector<Mask> closures;
  for (Mask f = 0; f <= full; ++f) closures.push_back(closure(space, f));
  std::sort(closures.begin(), closures.end());
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());

  for (Mask l = 0; l <= full; ++l) {
    if (!is_wedge_set(space, l)) continue;
    for (Mask c : closures)
      if ((l & c) == a) return true;
  }
  return false;
}

bool is_lambda_star_open(const SpaceStructure& space, Mask a) {
  return (vee(space, a) | interior(space, a)) == a;
}

bool is_lambda_star_open_decomp(const SpaceStructure& space, Mask a) {
  const Mask full = space.full();
  std::vector<Mask> interiors;
  for (Mask v = 0; v <= full; ++v) interiors.push_back(interior(space, v));
  std::sort(interiors.begin(), interiors.end());
  interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());

  for (Mask m = 0; m <= full; ++m) {
    if (!is_vee_set(space, m)) continue;
    for (Mask i : interiors)
      if ((m | i) == a) return true;
  }
  return false;
}

bool weakly_separated(const SpaceStructure& space, Mask a, Mask b) {
  for (Mask u : space.opens) {
    if ((a & ~u) != 0 || (b & u) != 0) continue;
    for (Mask v : space.opens)
      if ((b & ~v) == 0 && (a & v) == 0) return true;
  }
  return false;
}

SetClassification classify_set(const SpaceStructure& space, Mask a) {
  SetClassification c;
  c.open = space.is_open(a);
  c.closed = space.is_closed(a);
  c.g_closed = is_g_closed(space, a);
  c.gstar_closed = is_gstar_closed(space, a);
  c.gstar_open = is_gstar_open(space, a);
  c.wedge_set = is_wedge_set(space, a);
  c.vee_set = is_vee_set(space, a);
  c.g_wedge_set = is_g_wedge_set(space, a);
  c.g_vee_set = is_g_vee_set(space, a);
  c.lambda_star_closed = is_lambda_star_closed(space, a);
  c.lambda_star_open = is_lambda_star_open(space, a);
  return c;
}

}  // namespace sigma
