#pragma once
// The .space file format: one JSON document with keys "points" and "opens";
// opens are listed by point names. The empty set and the whole set may be
// omitted on input (the parser inserts them and records the insertion);
// output always lists both.

#include <string>

#include "space.hpp"

namespace sigma {

struct ParsedSpace {
  SpaceStructure space;
  bool inserted_empty = false;
  bool inserted_full = false;
};

// Throws Errc::parse_error for malformed documents and the validate_space
// errors for families violating the axioms.
ParsedSpace parse_space_file(const std::string& text);
ParsedSpace load_space_file(const std::string& path);

std::string format_space_file(const SpaceStructure& space);

}  // namespace sigma
