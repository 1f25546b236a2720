#pragma once

#include <map>
#include <set>
#include <string>

#include "gracetree/tree.hpp"

namespace gracetree {

enum class ClassId { A, B, C, D, E };

char class_letter(ClassId c);
ClassId class_from_letter(char c);

// Hypothesis check for the five constructible tree classes, evaluated on the
// rooted tree as given (the root plays the central vertex).  `excluded` names
// the first failing condition for every class not in `classes`.
struct Classification {
  std::set<ClassId> classes;
  int depth = 0;             // r
  int diameter = 0;          // of the free tree, diagnostic only
  int even_children_at_rm1 = 0;
  std::map<ClassId, std::string> excluded;

  bool has(ClassId c) const { return classes.count(c) > 0; }
};

Classification classify_tree(const RootedTree& t);

}  // namespace gracetree
