#include <doctest.h>

#include <random>

#include "gracetree/construct.hpp"

// Seeded random in-class trees, well beyond the exhaustive sweep sizes.

using namespace gracetree;

namespace {

void check_label(const RootedTree& t, LabelResult (*ctor)(const RootedTree&)) {
  LabelResult res = ctor(t);
  CHECK(verify_graceful(t, res.labeling).graceful);
  CHECK(res.labeling[t.root] == 0);
  CHECK(canonical_code(res.trace.final_state.tree) == canonical_code(t));
}

TreeExpr random_depth3(std::mt19937& rng, bool with_zeros) {
  int k = 1 + 2 * (rng() % 3);
  std::vector<TreeExpr> subs;
  for (int i = 0; i < k; ++i) {
    int b = 1 + 2 * (rng() % 3);
    std::vector<TreeExpr> kids;
    for (int j = 0; j < b; ++j) kids.push_back(TreeExpr::count(1 + rng() % 7));
    if (with_zeros && b >= 2 && rng() % 3 == 0) {
      kids[0] = TreeExpr::count(0);
      kids[1] = TreeExpr::count(2 + 2 * (rng() % 3));  // the even-children sibling
    }
    subs.push_back(TreeExpr::node(std::move(kids)));
  }
  return TreeExpr::node(std::move(subs));
}

TreeExpr random_complete(std::mt19937& rng, int depth) {
  if (depth <= 1) return TreeExpr::count(1 + rng() % 5);
  int k = 1 + 2 * (rng() % 2);
  std::vector<TreeExpr> kids;
  for (int i = 0; i < k; ++i) kids.push_back(random_complete(rng, depth - 1));
  return TreeExpr::node(std::move(kids));
}

TreeExpr random_odd_children(std::mt19937& rng) {
  int k = 1 + 2 * (rng() % 3);
  std::vector<TreeExpr> subs;
  for (int i = 0; i < k; ++i) {
    int ints = rng() % 4;
    int leaves = rng() % 5;
    if ((ints + leaves) % 2 == 0) ++leaves;
    std::vector<TreeExpr> kids;
    for (int j = 0; j < ints; ++j) kids.push_back(TreeExpr::count(1 + 2 * (rng() % 4)));
    for (int j = 0; j < leaves; ++j) kids.push_back(TreeExpr::count(0));
    subs.push_back(TreeExpr::node(std::move(kids)));
  }
  return TreeExpr::node(std::move(subs));
}

}  // namespace

TEST_CASE("random class-a instances") {
  std::mt19937 rng(101);
  int done = 0;
  while (done < 150) {
    RootedTree t = expr_to_tree(random_depth3(rng, false));
    if (!classify_tree(t).has(ClassId::A)) continue;
    check_label(t, label_class_a);
    ++done;
  }
}

TEST_CASE("random class-b instances") {
  std::mt19937 rng(102);
  int done = 0;
  while (done < 150) {
    RootedTree t = expr_to_tree(random_depth3(rng, true));
    if (!classify_tree(t).has(ClassId::B)) continue;
    check_label(t, label_class_b);
    ++done;
  }
}

TEST_CASE("random class-c instances") {
  std::mt19937 rng(103);
  int done = 0;
  while (done < 100) {
    RootedTree t = expr_to_tree(random_complete(rng, 2 + rng() % 4));
    if (!classify_tree(t).has(ClassId::C)) continue;
    check_label(t, label_class_c);
    ++done;
  }
}

TEST_CASE("random class-d instances") {
  std::mt19937 rng(104);
  int done = 0;
  int attempts = 0;
  while (done < 100 && attempts < 100000) {
    ++attempts;
    // complete tree with some bottom-level tuples swapped for zero bases
    TreeExpr e = random_depth3(rng, true);
    RootedTree t = expr_to_tree(e);
    if (!classify_tree(t).has(ClassId::D)) continue;
    check_label(t, label_class_d);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("random class-e instances") {
  std::mt19937 rng(105);
  int done = 0;
  while (done < 150) {
    RootedTree t = expr_to_tree(random_odd_children(rng));
    if (!classify_tree(t).has(ClassId::E)) continue;
    check_label(t, label_class_e);
    ++done;
  }
}
