#pragma once

#include <array>
#include <map>
#include <set>
#include <utility>

#include "gracetree/attainable.hpp"
#include "gracetree/classify.hpp"
#include "gracetree/oracle.hpp"

namespace gracetree {

struct ClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------- depth-3 tuple machinery (labelers a and b) ----------

enum class TupleVariant { A, B };

// a/b representative classes of the grandchild-count tuples.  C35 occurs in
// variant A only, C33 in variant B only.
enum class TupleClassRep { C01, C13, C23, C35, C33, C11 };

struct TupleClass {
  int even_count = 0;  // a (zeros count as even)
  int length = 0;      // b
  TupleClassRep rep = TupleClassRep::C01;
};

std::string tuple_class_name(TupleClassRep r);
TupleClass classify_tuple(const std::vector<long>& tuple, TupleVariant variant);

struct Depth3Plan {
  std::vector<int> tuple_order;                 // original indices, in build order
  std::vector<std::vector<long>> tuples;        // entries, arranged
  CountSeq flat;
  BlockPlan plan;
};

// Permutes the tuple list and the entries within tuples so that the
// flattened grandchild-count sequence splits into nicely attainable blocks
// plus an attainable tail, following the minimal / irreducible tables.
Depth3Plan plan_depth3(const std::vector<std::vector<long>>& tuples, TupleVariant variant);

// ---------- endings machinery (labelers c and d) ----------

enum class Ending { None, E1, E2, E2P, E3 };

std::string ending_name(Ending e);

using EndingPair = std::pair<Ending, Ending>;
using EndingPairSet = std::set<EndingPair>;

enum class EndingVariant { Strict, Relaxed };  // strict forms vs e/0-adjusted forms

// Ending-state transition on appending one count class (odd / positive even /
// zero); returns false if the shape dies.
bool ending_step(Ending from, long value, EndingVariant variant, Ending* to);

// The claimed pair table row for a subtree with `even_count` even integers.
EndingPairSet ending_pair_row(int even_count_mod4);

// Full mechanically generated relation: every (in, out) pair reachable by
// ordering the expression's components recursively.
EndingPairSet achievable_endings(const TreeExpr& expr, EndingVariant variant);

// The claim-table row for the expression, validated against the generated
// relation; throws on malformed expressions (even arity, misplaced zeros).
EndingPairSet associate_endings(const TreeExpr& expr, EndingVariant variant);

// An arranged flattened count sequence witnessing (in, out) for the
// expression; throws when the pair is not achievable.
CountSeq ending_witness(const TreeExpr& expr, Ending in, Ending out, EndingVariant variant);

// ---------- construction ----------

struct ConstructionTrace {
  TreeExpr arranged;       // subtree permutation actually built
  int star_n = 0;          // construction starts from star_state(star_n)
  CountSeq planned_counts; // last-level counts in context order (empty for e)
  TransferScript script;
  LabeledState final_state;
};

struct LabelResult {
  Labeling labeling;  // on the input tree's vertex ids; f(root) = 0
  ConstructionTrace trace;
};

LabelResult label_class_a(const RootedTree& t);
LabelResult label_class_b(const RootedTree& t);
LabelResult label_class_c(const RootedTree& t);
LabelResult label_class_d(const RootedTree& t);
LabelResult label_class_e(const RootedTree& t);

// First applicable constructor in the order e, a, b, c, d.
LabelResult dispatch_label(const RootedTree& t);

// Corollary: attach k leaves to a 0-labeled root, labels n..n+k-1.
std::pair<RootedTree, Labeling> attach_leaves_at_root(const RootedTree& t, const Labeling& f,
                                                      int k);

}  // namespace gracetree
