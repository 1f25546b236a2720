#include "gracetree/expr.hpp"

namespace gracetree {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

  TreeExpr expr() {
    skip_ws();
    if (pos >= s.size()) fail("expected expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      std::vector<TreeExpr> kids;
      kids.push_back(expr());
      skip_ws();
      while (pos < s.size() && s[pos] == ',') {
        ++pos;
        kids.push_back(expr());
        skip_ws();
      }
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      return TreeExpr::node(std::move(kids));
    }
    if (c >= '0' && c <= '9') {
      long v = 0;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        v = v * 10 + (s[pos] - '0');
        if (v > 65536) fail("leaf count too large");
        ++pos;
      }
      return TreeExpr::count(static_cast<int>(v));
    }
    fail("expected '(' or digit");
  }
};

}  // namespace

TreeExpr parse_tree_expr(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty input");
  TreeExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (expr_size(e) > 65536) throw ParseError(0, "tree too large");
  return e;
}

std::string to_string(const TreeExpr& e) {
  if (e.is_count()) return std::to_string(e.leaf_count);
  std::string out = "(";
  for (std::size_t i = 0; i < e.kids.size(); ++i) {
    if (i) out += ",";
    out += to_string(e.kids[i]);
  }
  out += ")";
  return out;
}

int expr_size(const TreeExpr& e) {
  if (e.is_count()) return 1 + e.leaf_count;
  int total = 1;
  for (const auto& k : e.kids) total += expr_size(k);
  return total;
}

}  // namespace gracetree
