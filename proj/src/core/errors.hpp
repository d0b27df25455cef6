#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sigma {

enum class Errc {
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  too_large,
  unknown_law,
  unknown_claim,
  schema_mismatch,
  parse_error,
  validation_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sigma
