#include <doctest.h>

#include "gracetree/classify.hpp"

using namespace gracetree;

namespace {
RootedTree tree_of(const std::string& s) { return expr_to_tree(parse_tree_expr(s)); }
}  // namespace

TEST_CASE("((1,1,1)) is complete, depth 3, all internal odd") {
  auto c = classify_tree(tree_of("((1,1,1))"));
  CHECK(c.has(ClassId::A));
  CHECK(c.has(ClassId::B));  // sibling conditions hold vacuously on complete trees
  CHECK(c.has(ClassId::C));
  CHECK(c.has(ClassId::E));
  CHECK(c.depth == 3);
}

TEST_CASE("((2,1,1)) loses class e to an even grandchild count") {
  auto c = classify_tree(tree_of("((2,1,1))"));
  CHECK(c.has(ClassId::A));
  CHECK(c.has(ClassId::C));
  CHECK(!c.has(ClassId::E));
  CHECK(c.excluded.at(ClassId::E).find("even") != std::string::npos);
}

TEST_CASE("stars fail every class on depth") {
  auto c = classify_tree(tree_of("4"));
  CHECK(c.classes.empty());
  CHECK(c.excluded.at(ClassId::A).find("diameter") != std::string::npos);
  CHECK(c.excluded.at(ClassId::C).find("2r") != std::string::npos);
}

TEST_CASE("mod-4 count of even-children vertices at level r-1") {
  // Three grandparent-level vertices with even child counts.
  auto c3 = classify_tree(tree_of("((2,2,2))"));
  CHECK(c3.even_children_at_rm1 == 3);
  CHECK(!c3.has(ClassId::C));
  CHECK(!c3.has(ClassId::D));
  CHECK(c3.has(ClassId::A));

  auto c4 = classify_tree(tree_of("((2,2,2,2,1))"));
  CHECK(c4.even_children_at_rm1 == 4);
  CHECK(c4.has(ClassId::C));
}

TEST_CASE("sibling conditions for class b and d") {
  // A level-2 leaf whose only siblings have odd child counts.
  auto bad = classify_tree(tree_of("((0,1,1))"));
  CHECK(!bad.has(ClassId::B));
  // A level-2 leaf with an even-children sibling.
  auto good = classify_tree(tree_of("((0,2,1))"));
  CHECK(good.has(ClassId::B));
  CHECK(!good.has(ClassId::A));  // not complete
  // Two sibling leaves at level 2.
  auto two = classify_tree(tree_of("((0,0,2,2,1))"));
  CHECK(!two.has(ClassId::B));
  CHECK(!two.has(ClassId::D));
}

TEST_CASE("upper levels must have odd child counts") {
  auto c = classify_tree(tree_of("((1,1),(1,1),(1,1))"));  // level-1 vertices have 2 children
  CHECK(c.classes.empty());
  auto r = classify_tree(tree_of("((1,1,1),(1,1,1))"));  // root has 2 children
  CHECK(r.classes.empty());
}

TEST_CASE("deep complete trees are class c") {
  auto c = classify_tree(tree_of("(((1,1,1),(1,1,1),(1,1,1)))"));
  CHECK(c.depth == 4);
  CHECK(c.has(ClassId::C));
  CHECK(!c.has(ClassId::A));  // depth != 3
  // Path rooted at an end is complete with zero even-children vertices.
  auto p = classify_tree(tree_of("((((1))))"));
  CHECK(p.has(ClassId::C));
}

TEST_CASE("class property: complete depth-3 with all odd upper degrees is class a") {
  for (const char* s : {"((1,1,1))", "((2,1,1))", "((3),(1,2,1),(1))", "((1),(1),(1))"}) {
    auto c = classify_tree(tree_of(s));
    CHECK(c.has(ClassId::A));
  }
}
