#pragma once
// Boolean property expressions over axiom atoms, used by the searcher.
//
// Grammar (whitespace insignificant):
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | atom
//   atom   := T0 | T1 | R0 | WR0 | SS | TW | TW4 | T3W8 | T5W8 | CEQ

#include <memory>
#include <string>
#include <vector>

#include "axioms.hpp"

namespace sigma {

class PropertyExpr {
 public:
  // Throws Errc::parse_error with a position on malformed input.
  static PropertyExpr parse(std::string_view text);

  bool eval(const AxiomFlags& flags) const;
  const std::string& text() const { return text_; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  std::vector<std::string> atoms_;  // distinct atoms, in first-use order
};

}  // namespace sigma
