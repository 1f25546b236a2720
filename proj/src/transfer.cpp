#include "gracetree/transfer.hpp"

#include <algorithm>

namespace gracetree {

Vertex LabeledState::vertex_of(int label) const {
  if (label < 0 || label >= static_cast<int>(by_label.size()) || by_label[label] < 0)
    throw TransferError("no vertex labeled " + std::to_string(label));
  return by_label[label];
}

bool LabeledState::is_movable_leaf_at(int leaf_label, int holder_label) const {
  if (leaf_label < 0 || leaf_label >= static_cast<int>(by_label.size())) return false;
  Vertex w = by_label[leaf_label];
  if (w < 0 || !movable[w] || !tree.is_leaf(w)) return false;
  return tree.parent[w] == by_label[holder_label];
}

LabeledState star_state(int n) {
  if (n < 1) throw TransferError("star_state requires n >= 1");
  LabeledState s;
  s.tree.root = 0;
  s.tree.parent.assign(n + 1, 0);
  s.tree.parent[0] = -1;
  s.tree.children.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) s.tree.children[0].push_back(i);
  s.f.label.resize(n + 1);
  s.by_label.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    s.f.label[i] = i;
    s.by_label[i] = i;
  }
  s.movable.assign(n + 1, 1);
  s.movable[0] = 0;
  return s;
}

LabeledState mirrored(const LabeledState& s) {
  LabeledState out = s;
  const int n = s.size();
  for (Vertex v = 0; v < n; ++v) {
    out.f.label[v] = (n - 1) - s.f.label[v];
    out.by_label[out.f.label[v]] = v;
  }
  return out;
}

LabeledState state_from(const RootedTree& t, const Labeling& f) {
  auto rep = verify_graceful(t, f);
  if (!rep.graceful) throw TransferError("state_from requires a graceful labeling");
  LabeledState s;
  s.tree = t;
  s.f = f;
  s.by_label.assign(t.size(), -1);
  for (Vertex v = 0; v < t.size(); ++v) s.by_label[f[v]] = v;
  s.movable.assign(t.size(), 0);
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.is_leaf(v) && v != t.root) s.movable[v] = 1;
  return s;
}

std::vector<LabelRun> legal_type1_moves(const LabeledState& s, int u_label, int v_label) {
  std::vector<LabelRun> out;
  if (u_label == v_label) return out;
  const long sum = u_label + v_label;
  // Largest run first, then centered sub-runs (trim one label at each end).
  long lo = (sum % 2 == 0) ? sum / 2 : (sum - 1) / 2;
  long hi = sum - lo;
  for (; lo >= 0; --lo, ++hi) {
    if (lo == u_label || lo == v_label || hi == u_label || hi == v_label) break;
    bool ok = true;
    for (long x = lo; x <= hi; ++x)
      if (!s.is_movable_leaf_at(static_cast<int>(x), u_label)) {
        ok = false;
        break;
      }
    if (!ok) break;
    out.push_back({static_cast<int>(lo), static_cast<int>(hi)});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

void check_run_movable(const LabeledState& s, int u_label, int v_label, LabelRun run) {
  if (run.size() < 1) throw TransferError("empty run");
  if (run.contains(u_label) || run.contains(v_label))
    throw TransferError("run contains an endpoint vertex");
  for (int x = run.lo; x <= run.hi; ++x)
    if (!s.is_movable_leaf_at(x, u_label))
      throw TransferError("label " + std::to_string(x) + " is not a movable leaf at " +
                          std::to_string(u_label));
}

LabeledState reparent_run(const LabeledState& s, int u_label, int v_label, LabelRun run1,
                          LabelRun run2) {
  LabeledState out = s;
  Vertex u = out.vertex_of(u_label);
  Vertex v = out.vertex_of(v_label);
  auto move_one = [&](int x) {
    Vertex w = out.vertex_of(x);
    auto& uc = out.tree.children[u];
    uc.erase(std::find(uc.begin(), uc.end(), w));
    out.tree.children[v].push_back(w);
    out.tree.parent[w] = v;
  };
  for (int x = run1.lo; x <= run1.hi; ++x) move_one(x);
  if (run2.size() > 0)
    for (int x = run2.lo; x <= run2.hi; ++x) move_one(x);
  auto rep = verify_graceful(out.tree, out.f);
  if (!rep.graceful) throw TransferError("internal: transfer broke gracefulness");
  return out;
}

}  // namespace

LabeledState apply_type1(const LabeledState& s, int u_label, int v_label, LabelRun run) {
  if (u_label == v_label) throw TransferError("u and v coincide");
  check_run_movable(s, u_label, v_label, run);
  if (u_label + v_label != run.lo + run.hi)
    throw TransferError("type-1 sum condition violated: f(u)+f(v) = " +
                        std::to_string(u_label + v_label) + " but k+(k+m) = " +
                        std::to_string(run.lo + run.hi));
  return reparent_run(s, u_label, v_label, run, {});
}

LabeledState apply_type2(const LabeledState& s, int u_label, int v_label, LabelRun run1,
                         LabelRun run2) {
  if (u_label == v_label) throw TransferError("u and v coincide");
  if (run2.lo < run1.lo) std::swap(run1, run2);
  check_run_movable(s, u_label, v_label, run1);
  check_run_movable(s, u_label, v_label, run2);
  if (run1.size() != run2.size()) throw TransferError("type-2 runs differ in length");
  if (run1.hi >= run2.lo) throw TransferError("type-2 runs overlap");
  if (u_label + v_label != run1.lo + run2.hi)
    throw TransferError("type-2 sum condition violated: f(u)+f(v) = " +
                        std::to_string(u_label + v_label) + " but k+(l+m) = " +
                        std::to_string(run1.lo + run2.hi));
  return reparent_run(s, u_label, v_label, run1, run2);
}

LabeledState apply_step(const LabeledState& s, const TransferStep& step) {
  if (step.kind == TransferStep::Kind::Type1)
    return apply_type1(s, step.from, step.to, step.run1);
  return apply_type2(s, step.from, step.to, step.run1, step.run2);
}

LabeledState replay_script(const LabeledState& s, const TransferScript& script) {
  LabeledState cur = s;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      cur = apply_step(cur, script[i]);
    } catch (const TransferError& e) {
      throw ReplayError(i, e.what());
    }
  }
  return cur;
}

long TransferContext::label_at(int pos) const {
  if (pos == 0) return b;
  if (pattern == 1) return (pos % 2 == 1) ? a + (pos - 1) / 2 : b - pos / 2;
  return (pos % 2 == 1) ? a - (pos - 1) / 2 : b + pos / 2;
}

TransferContext make_context(const LabeledState& s, const std::vector<int>& vlist_labels, long a,
                             long b, long c, long d) {
  TransferContext ctx;
  ctx.state = s;
  ctx.a = a;
  ctx.b = b;
  ctx.c = c;
  ctx.d = d;
  if (vlist_labels.empty()) throw TransferError("context requires a nonempty vertex list");
  if (a + b != c + d)
    throw TransferError("context bullet 3 violated: a+b = " + std::to_string(a + b) +
                        " but c+d = " + std::to_string(c + d));
  if (c > d) throw TransferError("context requires c <= d");
  // Bullet 1: the label pattern.
  if (vlist_labels[0] != a) throw TransferError("context bullet 1 violated: f(v1) != a");
  ctx.pattern = 1;
  if (vlist_labels.size() >= 2) {
    if (vlist_labels[1] == b - 1)
      ctx.pattern = 1;
    else if (vlist_labels[1] == b + 1)
      ctx.pattern = 2;
    else
      throw TransferError("context bullet 1 violated: f(v2) is neither b-1 nor b+1");
  }
  for (std::size_t i = 0; i < vlist_labels.size(); ++i)
    if (vlist_labels[i] != ctx.label_at(static_cast<int>(i) + 1))
      throw TransferError("context bullet 1 violated: label pattern breaks at position " +
                          std::to_string(i + 1));
  // Bullet 2: v1 adjacent to leaves c..d.
  for (long x = c; x <= d; ++x)
    if (!s.is_movable_leaf_at(static_cast<int>(x), vlist_labels[0]))
      throw TransferError("context bullet 2 violated: label " + std::to_string(x) +
                          " is not a movable leaf at v1");
  ctx.vlist.reserve(vlist_labels.size());
  for (int lab : vlist_labels) ctx.vlist.push_back(s.vertex_of(lab));
  return ctx;
}

std::set<long> leave_behind_options(long i_prev, long i_cur, long i_next, long available) {
  if (((i_next - i_cur) % 2 + 2) % 2 != 1)
    throw TransferError("leave_behind_options: i_next and i_cur must differ in parity");
  if (((i_next - i_prev) % 2 + 2) % 2 != 0)
    throw TransferError("leave_behind_options: |i_next - i_prev| must be even");
  if (available < 0) throw TransferError("leave_behind_options: negative availability");
  long d0 = std::abs(i_next - i_prev) / 2;
  std::set<long> out;
  for (long l = d0; l <= available; l += 2) out.insert(l);
  return out;
}

std::set<long> leave_behind_options(const TransferContext& ctx, int i_prev, int i_cur, int i_next,
                                    long available) {
  auto in_range = [&](int i) { return i >= 1 && i <= ctx.m(); };
  if (i_prev != 0 && !in_range(i_prev)) throw TransferError("i_prev out of range");
  if (!in_range(i_cur) || !in_range(i_next)) throw TransferError("index out of range");
  return leave_behind_options(static_cast<long>(i_prev), i_cur, i_next, available);
}

bool check_leaf_order(const TransferContext& ctx, const TransferStep& step) {
  if (step.kind != TransferStep::Kind::Type1) throw TransferError("type-1 step expected");
  long v1 = ctx.label_at(1);
  if (step.from != v1) throw TransferError("step must start at v1");
  bool to_v0 = step.to == ctx.b;
  bool to_v2 = ctx.m() >= 2 && step.to == ctx.label_at(2);
  if (!to_v0 && !to_v2) throw TransferError("step must target v0 or v2");
  // Pool leaves left behind at v1.
  std::vector<int> left;
  for (long x = ctx.c; x <= ctx.d; ++x)
    if (!step.run1.contains(static_cast<int>(x))) left.push_back(static_cast<int>(x));
  // First |left| pool members in vlist order.
  std::vector<int> first;
  for (int pos = 1; pos <= ctx.m() && static_cast<int>(first.size()) < static_cast<int>(left.size());
       ++pos) {
    long lab = ctx.label_at(pos);
    if (lab >= ctx.c && lab <= ctx.d) first.push_back(static_cast<int>(lab));
  }
  if (first.size() < left.size()) return false;  // list does not include enough of c..d
  std::sort(first.begin(), first.end());
  return first == left;
}

}  // namespace gracetree
