#include <algorithm>
#include <deque>
#include <numeric>

#include "construct_internal.hpp"

namespace gracetree {

namespace {

// Star context covering every vertex: vlist 0, n, 1, n-1, ..., a = 0,
// b = n+1, pool 1..n.
TransferContext full_star_context(int n) {
  LabeledState star = star_state(n);
  std::vector<int> vlist;
  vlist.reserve(n + 1);
  for (int pos = 1; pos <= n + 1; ++pos)
    vlist.push_back(pos % 2 == 1 ? (pos - 1) / 2 : n + 1 - pos / 2);
  return make_context(star, vlist, 0, n + 1, 1, n);
}

std::vector<Vertex> bfs_order(const RootedTree& t) {
  std::vector<Vertex> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : t.children[order[i]]) order.push_back(c);
  return order;
}

std::vector<int> depths(const RootedTree& t) {
  std::vector<int> d(t.size(), 0);
  for (Vertex v : bfs_order(t))
    for (Vertex c : t.children[v]) d[c] = d[v] + 1;
  return d;
}

// Chain over the internal vertices above the last two levels (their child
// counts, BFS order), then the planned last-level blocks.
PlannedWalk chain_plus_blocks(const RootedTree& arranged, const BlockPlan& plan) {
  auto dep = depths(arranged);
  int r = *std::max_element(dep.begin(), dep.end());
  PlannedWalk full;
  int pos = 0;
  for (Vertex v : bfs_order(arranged)) {
    if (dep[v] > r - 2) break;  // BFS order: deeper levels follow
    ++pos;
    full.positions.push_back(pos);
    full.leaves.push_back(static_cast<long>(arranged.children[v].size()));
  }
  PlannedWalk blocks = walk_from_plan(plan, pos + 1);
  full.positions.insert(full.positions.end(), blocks.positions.begin(), blocks.positions.end());
  full.leaves.insert(full.leaves.end(), blocks.leaves.begin(), blocks.leaves.end());
  return full;
}

LabelResult build_via_walk(const RootedTree& input, const TreeExpr& arranged,
                           const CountSeq& planned, const PlannedWalk& walk) {
  const int n = input.size() - 1;
  TransferContext ctx = full_star_context(n);
  TransferScript script = realize_walk(ctx, walk);
  LabeledState fin = replay_script(ctx.state, script);
  auto iso = rooted_isomorphism(input, fin.tree);
  if (!iso)
    throw ClassError("internal: construction built a tree not isomorphic to its input");
  LabelResult out;
  out.labeling.label.assign(input.size(), -1);
  for (Vertex v = 0; v < input.size(); ++v) out.labeling[v] = fin.f[(*iso)[v]];
  out.trace.arranged = arranged;
  out.trace.star_n = n;
  out.trace.planned_counts = planned;
  out.trace.script = std::move(script);
  out.trace.final_state = std::move(fin);
  return out;
}

void require_class(const RootedTree& t, ClassId cls) {
  auto c = classify_tree(t);
  if (!c.has(cls)) {
    auto it = c.excluded.find(cls);
    throw ClassError("tree is not in class " + std::string(1, class_letter(cls)) +
                     (it == c.excluded.end() ? "" : ": " + it->second));
  }
}

// Grandchild-count tuples of a depth-3 tree, one per root child.
std::vector<std::vector<long>> root_tuples(const RootedTree& t) {
  std::vector<std::vector<long>> tuples;
  for (Vertex c : t.children[t.root]) {
    std::vector<long> tup;
    for (Vertex g : t.children[c]) tup.push_back(static_cast<long>(t.children[g].size()));
    tuples.push_back(tup);
  }
  return tuples;
}

LabelResult label_depth3(const RootedTree& t, TupleVariant variant) {
  Depth3Plan plan = plan_depth3(root_tuples(t), variant);
  std::vector<TreeExpr> subtrees;
  for (const auto& tup : plan.tuples) {
    std::vector<TreeExpr> kids;
    for (long v : tup) kids.push_back(TreeExpr::count(static_cast<int>(v)));
    subtrees.push_back(TreeExpr::node(std::move(kids)));
  }
  TreeExpr arranged = TreeExpr::node(std::move(subtrees));
  return build_via_walk(t, arranged, plan.flat, chain_plus_blocks(expr_to_tree(arranged), plan.plan));
}

LabelResult label_deep(const RootedTree& t, EndingVariant variant) {
  TreeExpr rep = tree_to_expr(t);
  detail::ArrangedTree arr = detail::arrange_for_labeling(rep, variant);
  BlockPlan plan = detail::segment_endings(arr.flat, variant);
  return build_via_walk(t, arr.expr, arr.flat, chain_plus_blocks(expr_to_tree(arr.expr), plan));
}

}  // namespace

LabelResult label_class_a(const RootedTree& t) {
  require_class(t, ClassId::A);
  return label_depth3(t, TupleVariant::A);
}

LabelResult label_class_b(const RootedTree& t) {
  require_class(t, ClassId::B);
  return label_depth3(t, TupleVariant::B);
}

LabelResult label_class_c(const RootedTree& t) {
  require_class(t, ClassId::C);
  return label_deep(t, EndingVariant::Strict);
}

LabelResult label_class_d(const RootedTree& t) {
  require_class(t, ClassId::D);
  return label_deep(t, EndingVariant::Relaxed);
}

// ---------------- class e: the three-pass plan ----------------

namespace {

struct SubtreeE {
  TreeExpr expr;
  std::deque<long> ints;  // child counts of the internal grandchildren
  long leaves = 0;        // leaf grandchildren
  int group = 0;          // rearrangement group (1)-(4)
};

int group_of(long ints, long leaves) {
  if (ints % 2 == 1 && leaves == 0) return 1;
  if (ints % 2 == 1 && leaves > 0 && leaves % 2 == 0) return 2;
  if (ints > 0 && ints % 2 == 0 && leaves % 2 == 1) return 3;
  if (ints == 0 && leaves % 2 == 1) return 4;
  throw ClassError("subtree fits no rearrangement group (an internal vertex has an even "
                   "number of children)");
}

}  // namespace

LabelResult label_class_e(const RootedTree& t) {
  require_class(t, ClassId::E);
  std::vector<SubtreeE> subs;
  for (Vertex c : t.children[t.root]) {
    SubtreeE s;
    std::vector<TreeExpr> kids;
    for (Vertex g : t.children[c]) {
      long cnt = static_cast<long>(t.children[g].size());
      if (cnt > 0) s.ints.push_back(cnt);
    }
    for (long v : s.ints) kids.push_back(TreeExpr::count(static_cast<int>(v)));
    for (Vertex g : t.children[c])
      if (t.children[g].empty()) {
        ++s.leaves;
        kids.push_back(TreeExpr::count(0));
      }
    s.expr = TreeExpr::node(std::move(kids));
    s.group = group_of(static_cast<long>(s.ints.size()), s.leaves);
    subs.push_back(std::move(s));
  }
  std::stable_sort(subs.begin(), subs.end(),
                   [](const SubtreeE& x, const SubtreeE& y) { return x.group < y.group; });

  const int m = static_cast<int>(subs.size());
  int i1 = 1, i2, i3;  // 1-based local group boundaries
  {
    int g1 = 0, g2 = 0, g3 = 0;
    for (const auto& s : subs) {
      g1 += s.group == 1;
      g2 += s.group == 2;
      g3 += s.group == 3;
    }
    i1 = 1 + g1;
    i2 = i1 + g2;
    i3 = i2 + g3;
  }

  // Walk in local indices (v_j at global position j+1); each transfer's
  // leave is split into internal-vertex drops and leaf drops.
  struct Event {
    int local;
    long ints;   // how many internal grandchildren drop here
    long leafs;  // how many leaf grandchildren drop here
  };
  std::vector<int> locals;
  std::vector<Event> events;  // one per transfer out of locals[i]
  const bool plain = (i1 == i3) || (i3 - i1 == 1);
  auto intn = [&](int j) { return static_cast<long>(subs[j - 1].ints.size()); };
  auto leafn = [&](int j) { return subs[j - 1].leaves; };
  if (plain) {
    for (int j = 1; j <= m; ++j) {
      locals.push_back(j);
      events.push_back({j, intn(j), leafn(j)});
    }
  } else {
    const int t1 = i3 - 1, t2 = i1;
    for (int j = 1; j <= t1; ++j) locals.push_back(j);
    for (int j = t1 - 1; j >= t2; --j) locals.push_back(j);
    for (int j = t2 + 1; j <= m; ++j) locals.push_back(j);
    // forward pass: all internals below the group-3 range, one internal inside it
    for (int j = 1; j <= t1 - 1; ++j)
      events.push_back({j, j < i2 ? intn(j) : 1, 0});
    // turn at t1
    if (t1 >= i2)
      events.push_back({t1, intn(t1), 0});
    else
      events.push_back({t1, intn(t1), 1});
    // backward pass: rest of the internals, then one leaf each
    for (int j = t1 - 1; j >= t2 + 1; --j)
      events.push_back({j, j >= i2 ? intn(j) - 1 : 0, j >= i2 ? 0 : 1});
    // turn at t2
    if (t2 >= i2)
      events.push_back({t2, intn(t2) - 1, leafn(t2)});
    else
      events.push_back({t2, 0, leafn(t2)});
    // second forward pass: the remaining leaves
    for (int j = t2 + 1; j <= m; ++j) {
      long left = 0;
      if (j < i2)
        left = leafn(j) - 1;
      else if (j == t1 && t1 < i2)
        left = leafn(j) - 1;
      else
        left = leafn(j);
      events.push_back({j, 0, left});
    }
  }

  // Assemble the global walk: star transfer, three passes, continuation
  // chain over the internal grandchildren in drop order.
  PlannedWalk walk;
  walk.positions.push_back(1);
  for (int j : locals) walk.positions.push_back(j + 1);
  walk.leaves.push_back(m);
  std::vector<long> cont_counts;
  std::vector<TreeExpr> arranged_subs;
  for (const auto& s : subs) arranged_subs.push_back(s.expr);
  for (const auto& ev : events) {
    walk.leaves.push_back(ev.ints + ev.leafs);
    auto& q = subs[ev.local - 1].ints;
    for (long i = 0; i < ev.ints; ++i) {
      if (q.empty()) throw ClassError("internal: three-pass plan over-drops internal vertices");
      cont_counts.push_back(q.front());
      q.pop_front();
    }
  }
  for (const auto& s : subs)
    if (!s.ints.empty()) throw ClassError("internal: three-pass plan under-drops internal vertices");
  for (std::size_t i = 0; i < cont_counts.size(); ++i) {
    walk.positions.push_back(m + 2 + static_cast<int>(i));
    if (i + 1 < cont_counts.size()) walk.leaves.push_back(cont_counts[i]);
  }
  if (cont_counts.empty())
    throw ClassError("internal: a depth-3 odd tree must have an internal grandchild");

  TreeExpr arranged = TreeExpr::node(std::move(arranged_subs));
  return build_via_walk(t, arranged, cont_counts, walk);
}

LabelResult dispatch_label(const RootedTree& t) {
  auto c = classify_tree(t);
  for (ClassId cls : {ClassId::E, ClassId::A, ClassId::B, ClassId::C, ClassId::D}) {
    if (!c.has(cls)) continue;
    switch (cls) {
      case ClassId::E: return label_class_e(t);
      case ClassId::A: return label_class_a(t);
      case ClassId::B: return label_class_b(t);
      case ClassId::C: return label_class_c(t);
      case ClassId::D: return label_class_d(t);
    }
  }
  std::string msg = "no labeler applies:";
  for (auto& [cls, why] : c.excluded)
    msg += std::string("\n  class ") + class_letter(cls) + ": " + why;
  throw ClassError(msg);
}

std::pair<RootedTree, Labeling> attach_leaves_at_root(const RootedTree& t, const Labeling& f,
                                                      int k) {
  if (k < 0) throw ClassError("negative leaf count");
  auto rep = verify_graceful(t, f);
  if (!rep.graceful) throw ClassError("input labeling is not graceful");
  if (f[t.root] != 0) throw ClassError("root must be labeled 0");
  RootedTree out = t;
  Labeling g = f;
  const int n = t.size();
  for (int i = 0; i < k; ++i) {
    Vertex v = out.size();
    out.parent.push_back(out.root);
    out.children.emplace_back();
    out.children[out.root].push_back(v);
    g.label.push_back(n + i);
  }
  return {out, g};
}

}  // namespace gracetree
