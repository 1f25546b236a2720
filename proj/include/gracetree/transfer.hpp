#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gracetree/tree.hpp"

namespace gracetree {

// Inclusive interval of labels.
struct LabelRun {
  int lo = 0;
  int hi = -1;
  int size() const { return hi - lo + 1; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool operator==(const LabelRun& o) const { return lo == o.lo && hi == o.hi; }
};

// A gracefully labeled tree under construction.  Vertex ids are stable;
// labels never change, only parent pointers do.  `movable` marks the leaves
// a transfer may still pick up; leaves left behind get frozen by the caller,
// not by the engine.
struct LabeledState {
  RootedTree tree;
  Labeling f;
  std::vector<Vertex> by_label;
  std::vector<char> movable;

  int size() const { return tree.size(); }
  Vertex vertex_of(int label) const;
  int label_of(Vertex v) const { return f[v]; }
  bool is_movable_leaf_at(int leaf_label, int holder_label) const;
  void freeze(int label) { movable[vertex_of(label)] = 0; }
};

// Star K_{1,n}: center labeled 0, leaves 1..n, all leaves movable.
LabeledState star_state(int n);

// State with the mirrored labeling g(v) = (n-1) - f(v); graceful-preserving.
LabeledState mirrored(const LabeledState& s);

// State over an arbitrary labeled tree; movable = all leaves.
LabeledState state_from(const RootedTree& t, const Labeling& f);

struct TransferStep {
  enum class Kind { Type1, Type2 };
  Kind kind = Kind::Type1;
  int from = 0;  // labels, per the vertex == label convention
  int to = 0;
  LabelRun run1;
  LabelRun run2;  // type-2 only

  static TransferStep type1(int from, int to, LabelRun run) {
    return {Kind::Type1, from, to, run, {}};
  }
  static TransferStep type2(int from, int to, LabelRun r1, LabelRun r2) {
    return {Kind::Type2, from, to, r1, r2};
  }
};

using TransferScript = std::vector<TransferStep>;

struct TransferError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReplayError : std::runtime_error {
  std::size_t index;
  ReplayError(std::size_t i, const std::string& what)
      : std::runtime_error("step " + std::to_string(i) + ": " + what), index(i) {}
};

// All runs [k..k+m] of movable leaves at u, consecutive as labels, with
// f(u)+f(v) = k+(k+m); largest first.
std::vector<LabelRun> legal_type1_moves(const LabeledState& s, int u_label, int v_label);

LabeledState apply_type1(const LabeledState& s, int u_label, int v_label, LabelRun run);
LabeledState apply_type2(const LabeledState& s, int u_label, int v_label, LabelRun run1,
                         LabelRun run2);
LabeledState apply_step(const LabeledState& s, const TransferStep& step);

LabeledState replay_script(const LabeledState& s, const TransferScript& script);

// Transfer context (T, f, v1..vm, a, b, c, d): vlist labels follow
// a, b-1, a+1, b-2, ...  or  a, b+1, a-1, b+2, ...; v1 holds the leaf pool
// c..d; a+b = c+d.
struct TransferContext {
  LabeledState state;
  std::vector<Vertex> vlist;
  long a = 0, b = 0, c = 0, d = 0;
  int pattern = 1;  // 1: odd positions ascend from a; 2: descend

  int m() const { return static_cast<int>(vlist.size()); }
  // 1-based; position 0 stands for the virtual v0 with label b.
  long label_at(int pos) const;
  int pool_size() const { return static_cast<int>(d - c + 1); }
};

TransferContext make_context(const LabeledState& s, const std::vector<int>& vlist_labels, long a,
                             long b, long c, long d);

// Leave-behind set {l : d0 <= l <= available, l == d0 (mod 2)}
// with d0 = |i_next - i_prev| / 2; i_prev = 0 encodes the first transfer.
std::set<long> leave_behind_options(long i_prev, long i_cur, long i_next, long available);
std::set<long> leave_behind_options(const TransferContext& ctx, int i_prev, int i_cur, int i_next,
                                    long available);

// Order-of-leaves check: for a type-1 step from v1 to v0 (label b) or v2,
// the pool leaves left behind must be exactly the first ones occurring in
// the vlist order.
bool check_leaf_order(const TransferContext& ctx, const TransferStep& step);

}  // namespace gracetree
