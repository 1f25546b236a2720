#include "gracetree/classify.hpp"

#include <stdexcept>

namespace gracetree {

char class_letter(ClassId c) {
  switch (c) {
    case ClassId::A: return 'a';
    case ClassId::B: return 'b';
    case ClassId::C: return 'c';
    case ClassId::D: return 'd';
    case ClassId::E: return 'e';
  }
  return '?';
}

ClassId class_from_letter(char c) {
  switch (c) {
    case 'a': case 'A': return ClassId::A;
    case 'b': case 'B': return ClassId::B;
    case 'c': case 'C': return ClassId::C;
    case 'd': case 'D': return ClassId::D;
    case 'e': case 'E': return ClassId::E;
  }
  throw std::runtime_error("unknown class letter");
}

Classification classify_tree(const RootedTree& t) {
  Classification out;
  const int n = t.size();
  std::vector<int> depth(n, 0);
  int r = 0;
  {
    std::vector<Vertex> order{t.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      Vertex v = order[i];
      for (Vertex c : t.children[v]) {
        depth[c] = depth[v] + 1;
        r = std::max(r, depth[c]);
        order.push_back(c);
      }
    }
  }
  out.depth = r;
  out.diameter = diameter_of(t);

  bool complete = true;          // all leaves in the last level
  bool upper_odd = true;         // odd children everywhere above the last two levels
  bool internal_odd = true;      // odd children at every internal vertex
  for (Vertex v = 0; v < n; ++v) {
    int deg = static_cast<int>(t.children[v].size());
    if (deg == 0 && depth[v] != r) complete = false;
    if (depth[v] <= r - 2 && deg % 2 == 0) upper_odd = false;
    if (deg > 0 && deg % 2 == 0) internal_odd = false;
  }

  // Sibling conditions on leaves at level r-1, and the mod-4 count there.
  bool no_leaf_sibling_pair = true;
  bool leaves_have_even_sibling = true;
  int even_at_rm1 = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (depth[v] == r - 1 && t.children[v].size() % 2 == 0) ++even_at_rm1;
    if (depth[v] != r - 2) continue;
    int leaf_children = 0;
    bool has_even_internal_child = false;
    for (Vertex c : t.children[v]) {
      if (t.children[c].empty())
        ++leaf_children;
      else if (t.children[c].size() % 2 == 0)
        has_even_internal_child = true;
    }
    if (leaf_children >= 2) no_leaf_sibling_pair = false;
    if (leaf_children >= 1 && !has_even_internal_child) leaves_have_even_sibling = false;
  }
  out.even_children_at_rm1 = even_at_rm1;

  auto fail = [&](ClassId c, const std::string& why) { out.excluded[c] = why; };
  std::string diam6 = "diameter " + std::to_string(2 * r) + " != 6, 2r";

  auto common = [&](ClassId c, int want_r) -> bool {
    if (want_r == 3 && r != 3) {
      fail(c, "diameter " + std::to_string(2 * r) + " != 6" +
                  (r < 2 ? ", 2r" : ""));
      return false;
    }
    if (want_r == 0 && r < 2) {
      fail(c, "diameter " + std::to_string(2 * r) + " != 6, 2r");
      return false;
    }
    if (!upper_odd) {
      fail(c, "a vertex above the last two levels has an even number of children");
      return false;
    }
    return true;
  };

  // (a) depth-3 complete
  if (common(ClassId::A, 3)) {
    if (!complete)
      fail(ClassId::A, "not complete: a leaf lies above the last level");
    else
      out.classes.insert(ClassId::A);
  }
  // (b) depth-3, sibling conditions at level 2
  if (common(ClassId::B, 3)) {
    if (!no_leaf_sibling_pair)
      fail(ClassId::B, "two leaves at distance 2 from the root are siblings");
    else if (!leaves_have_even_sibling)
      fail(ClassId::B, "a leaf at distance 2 lacks a sibling with an even number of children");
    else
      out.classes.insert(ClassId::B);
  }
  // (c) depth-r complete, even-children count at level r-1 not 3 mod 4
  if (common(ClassId::C, 0)) {
    if (!complete)
      fail(ClassId::C, "not complete: a leaf lies above the last level");
    else if (even_at_rm1 % 4 == 3)
      fail(ClassId::C, "count of even-children vertices at distance r-1 is 3 (mod 4): " +
                           std::to_string(even_at_rm1));
    else
      out.classes.insert(ClassId::C);
  }
  // (d) depth-r, sibling conditions at level r-1, mod-4 count
  if (common(ClassId::D, 0)) {
    if (even_at_rm1 % 4 == 3)
      fail(ClassId::D, "count of even-children vertices at distance r-1 is 3 (mod 4): " +
                           std::to_string(even_at_rm1));
    else if (!no_leaf_sibling_pair)
      fail(ClassId::D, "two leaves at distance r-1 from the root are siblings");
    else if (!leaves_have_even_sibling)
      fail(ClassId::D, "a leaf at distance r-1 lacks a sibling with an even number of children");
    else
      out.classes.insert(ClassId::D);
  }
  // (e) depth-3, every internal vertex odd
  if (common(ClassId::E, 3)) {
    if (!internal_odd)
      fail(ClassId::E, "an internal vertex has an even number of children");
    else
      out.classes.insert(ClassId::E);
  }
  return out;
}

}  // namespace gracetree
