#pragma once
// Reference spaces used across the whole test suite:
//   S  Sierpinski space, points {0,1}, opens {} {0} X
//   W  three-point witness space, points {a,b,c}, opens {} {b} {b,c} X
//   D2 discrete on two points, I2 indiscrete on two points.

#include <string>
#include <vector>

#include "space.hpp"

namespace fixtures {

inline sigma::SpaceStructure sierpinski() {
  sigma::GroundSet g({"0", "1"});
  return sigma::validate_space(g, {0b00, 0b01, 0b11});
}

inline sigma::SpaceStructure witness_w() {
  sigma::GroundSet g({"a", "b", "c"});
  return sigma::validate_space(g, {0b000, 0b010, 0b110, 0b111});
}

inline sigma::SpaceStructure discrete2() {
  sigma::GroundSet g({"0", "1"});
  return sigma::validate_space(g, {0b00, 0b01, 0b10, 0b11});
}

inline sigma::SpaceStructure indiscrete2() {
  sigma::GroundSet g({"0", "1"});
  return sigma::validate_space(g, {0b00, 0b11});
}

// Mask helper: set of point indices.
inline sigma::Mask pts(std::initializer_list<int> indices) {
  sigma::Mask m = 0;
  for (int i : indices) m |= sigma::Mask{1} << i;
  return m;
}

}  // namespace fixtures
