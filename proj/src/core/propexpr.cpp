#include "propexpr.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace sigma {

struct PropertyExpr::Node {
  enum class Kind { atom, not_, and_, or_ } kind;
  std::string atom;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = PropertyExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

const std::vector<std::string>& known_atoms() {
  static const std::vector<std::string> atoms = {"T0",   "T1",  "R0",   "WR0",  "SS",
                                                 "TW",   "TW4", "T3W8", "T5W8", "CEQ"};
  return atoms;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string>& atoms) : text_(text), atoms_(atoms) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      if (!consume('|')) return lhs;
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::or_;
      node->lhs = lhs;
      node->rhs = term();
      lhs = node;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      skip_ws();
      if (!consume('&')) return lhs;
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::and_;
      node->lhs = lhs;
      node->rhs = factor();
      lhs = node;
    }
  }

  NodePtr factor() {
    skip_ws();
    if (consume('!')) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::not_;
      node->lhs = factor();
      return node;
    }
    if (consume('(')) {
      NodePtr e = expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    return atom();
  }

  NodePtr atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
    if (pos_ == start) fail("expected an atom");
    std::string name(text_.substr(start, pos_ - start));
    const auto& atoms = known_atoms();
    if (std::find(atoms.begin(), atoms.end(), name) == atoms.end())
      fail("unknown atom '" + name + "'");
    if (std::find(atoms_.begin(), atoms_.end(), name) == atoms_.end()) atoms_.push_back(name);
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::atom;
    node->atom = std::move(name);
    return node;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(Errc::parse_error,
                "property expression error at position " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::vector<std::string>& atoms_;
  std::size_t pos_ = 0;
};

bool eval_node(const Node& node, const AxiomFlags& flags) {
  switch (node.kind) {
    case Node::Kind::atom:
      return flags.get(node.atom);
    case Node::Kind::not_:
      return !eval_node(*node.lhs, flags);
    case Node::Kind::and_:
      return eval_node(*node.lhs, flags) && eval_node(*node.rhs, flags);
    case Node::Kind::or_:
      return eval_node(*node.lhs, flags) || eval_node(*node.rhs, flags);
  }
  return false;
}

}  // namespace

PropertyExpr PropertyExpr::parse(std::string_view text) {
  PropertyExpr out;
  out.text_ = std::string(text);
  Parser parser(text, out.atoms_);
  out.root_ = parser.parse();
  return out;
}

bool PropertyExpr::eval(const AxiomFlags& flags) const { return eval_node(*root_, flags); }

}  // namespace sigma
