#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gracetree/expr.hpp"

namespace gracetree {

using Vertex = int;

// Rooted tree over dense vertex ids 0..n-1 with ordered child lists.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // -1 at the root
  std::vector<std::vector<Vertex>> children;  // ordered

  int size() const { return static_cast<int>(parent.size()); }
  bool is_leaf(Vertex v) const { return children[v].empty(); }
};

// Vertex -> label map; -1 marks a missing entry.
struct Labeling {
  std::vector<int> label;

  int operator[](Vertex v) const { return label[v]; }
  int& operator[](Vertex v) { return label[v]; }
  int size() const { return static_cast<int>(label.size()); }
};

struct Violation {
  enum class Kind {
    DuplicateVertexLabel,
    LabelOutOfRange,
    DuplicateEdgeLabel,
    MissingVertexLabel,
  };
  Kind kind;
  std::vector<Vertex> witnesses;
};

struct VerifyReport {
  bool graceful = false;
  std::vector<Violation> violations;
};

RootedTree expr_to_tree(const TreeExpr& e);

// Inverse of expr_to_tree up to child order: depth <= 1 subtrees print as
// counts, deeper ones as parenthesised component lists.
TreeExpr tree_to_expr(const RootedTree& t, Vertex at);
TreeExpr tree_to_expr(const RootedTree& t);

// Graceful check: vertex labels exactly {0..n-1}, edge labels all distinct
// (hence {1..n-1}).  Missing labels are reported, never fatal.
VerifyReport verify_graceful(const RootedTree& t, const Labeling& f);

// AHU-style canonical string; equal iff rooted-isomorphic (unordered).
std::string canonical_code(const RootedTree& t);

// Vertex map m with m[v of a] = matching vertex of b, if a and b are
// rooted-isomorphic.
std::optional<std::vector<Vertex>> rooted_isomorphism(const RootedTree& a, const RootedTree& b);

int depth_of(const RootedTree& t);      // eccentricity of the root inside the rooted tree
int diameter_of(const RootedTree& t);   // of the underlying free tree

// Center of the underlying free tree: one vertex (even diameter) or two
// (odd diameter; an edge center).
std::vector<Vertex> center_of(const RootedTree& t);

RootedTree rerooted(const RootedTree& t, Vertex new_root);

// Re-roots at the unique vertex center; throws if the center is an edge.
RootedTree recentered(const RootedTree& t);

}  // namespace gracetree
