#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gracetree {

// Nested-tuple tree expression.  A bare count `n` denotes a root with n leaf
// children (depth <= 1); a parenthesised list (S1,...,Sk) denotes a root whose
// root-deleted components are S1..Sk.  A node with an empty child list is a
// leaf-count node; empty parentheses are rejected by the parser.
struct TreeExpr {
  int leaf_count = 0;
  std::vector<TreeExpr> kids;

  bool is_count() const { return kids.empty(); }

  static TreeExpr count(int n) {
    TreeExpr e;
    e.leaf_count = n;
    return e;
  }
  static TreeExpr node(std::vector<TreeExpr> children) {
    TreeExpr e;
    e.leaf_count = -1;
    e.kids = std::move(children);
    return e;
  }

  bool operator==(const TreeExpr& o) const {
    if (is_count() != o.is_count()) return false;
    if (is_count()) return leaf_count == o.leaf_count;
    return kids == o.kids;
  }
  bool operator!=(const TreeExpr& o) const { return !(*this == o); }
};

// Parse failure; `offset` is the byte position where parsing stopped.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
};

// Grammar: Expr := UINT | '(' Expr (',' Expr)* ')'   (whitespace ignored)
TreeExpr parse_tree_expr(const std::string& text);

std::string to_string(const TreeExpr& e);

// Total number of vertices of the tree the expression denotes.
int expr_size(const TreeExpr& e);

}  // namespace gracetree
