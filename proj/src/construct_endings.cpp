#include <algorithm>
#include <map>

#include "gracetree/construct.hpp"

// Endings calculus: sequences are tracked by the ending-state automaton
// (None, E1, E2, E2', E3); a complete subtree's achievable (in, out) pairs
// are composed over all orderings of its components, bottoming out at the
// single-integer rows.

namespace gracetree {

std::string ending_name(Ending e) {
  switch (e) {
    case Ending::None: return "-";
    case Ending::E1: return "E1";
    case Ending::E2: return "E2";
    case Ending::E2P: return "E2'";
    case Ending::E3: return "E3";
  }
  return "?";
}

bool ending_step(Ending from, long value, EndingVariant variant, Ending* to) {
  const bool zero = value == 0;
  const bool even = value > 0 && value % 2 == 0;
  const bool odd = value % 2 == 1;
  if (zero && variant == EndingVariant::Strict) return false;
  switch (from) {
    case Ending::None:
      if (odd) return *to = Ending::None, true;
      if (even) return *to = Ending::E1, true;
      return false;
    case Ending::E1:
      if (even || zero) return *to = Ending::E2, true;
      return false;
    case Ending::E2:
      if (odd) return *to = Ending::E2P, true;
      if (even || zero) return *to = Ending::E3, true;
      return false;
    case Ending::E2P:
      if (odd) return *to = Ending::E2, true;
      return false;
    case Ending::E3:
      if (even) return *to = Ending::None, true;
      return false;
  }
  return false;
}

EndingPairSet ending_pair_row(int even_count_mod4) {
  using E = Ending;
  switch (((even_count_mod4 % 4) + 4) % 4) {
    case 0: return {{E::None, E::None}, {E::E2, E::E2P}, {E::E2P, E::E2}};
    case 1: return {{E::None, E::E1}, {E::E1, E::E2}, {E::E2, E::E3}, {E::E3, E::None}};
    case 2: return {{E::None, E::E2}, {E::None, E::E2P}, {E::E2, E::None}, {E::E2P, E::None}};
    default: return {{E::None, E::E3}, {E::E1, E::None}, {E::E2, E::E1}, {E::E3, E::E2}};
  }
}

namespace {

constexpr int kNumEndings = 5;

using Rel = std::array<std::array<char, kNumEndings>, kNumEndings>;

int eidx(Ending e) { return static_cast<int>(e); }
Ending efrom(int i) { return static_cast<Ending>(i); }

struct RepNode {
  bool is_int = false;
  long value = 0;
  std::vector<RepNode> kids;
  long even_count = 0;
  Rel rel{};
};

RepNode rep_from_expr(const TreeExpr& e) {
  RepNode n;
  if (e.is_count()) {
    n.is_int = true;
    n.value = e.leaf_count;
    n.even_count = (e.leaf_count % 2 == 0) ? 1 : 0;
    return n;
  }
  if (e.kids.empty()) throw ClassError("empty component list");
  if (e.kids.size() % 2 == 0)
    throw ClassError("a parenthesis level encloses an even number of subtrees");
  for (const auto& k : e.kids) {
    n.kids.push_back(rep_from_expr(k));
    n.even_count += n.kids.back().even_count;
  }
  return n;
}

Rel int_rel(long value, EndingVariant variant) {
  Rel r{};
  for (int i = 0; i < kNumEndings; ++i) {
    Ending to;
    if (ending_step(efrom(i), value, variant, &to)) r[i][eidx(to)] = 1;
  }
  return r;
}

// Orderings DP over one component list: children grouped by identical
// relation; reachable(counts, state) memoized.
struct NodeDP {
  std::vector<Rel> group_rel;
  std::vector<int> group_of;           // child index -> group
  std::vector<std::vector<int>> members;  // group -> child indices (unconsumed order)
  std::map<std::pair<std::vector<int>, int>, std::array<char, kNumEndings>> memo;

  std::array<char, kNumEndings> reach(const std::vector<int>& counts, int state) {
    auto key = std::make_pair(counts, state);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::array<char, kNumEndings> out{};
    bool empty = std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
    if (empty) {
      out[state] = 1;
    } else {
      for (std::size_t g = 0; g < counts.size(); ++g) {
        if (counts[g] == 0) continue;
        std::vector<int> next = counts;
        --next[g];
        for (int s2 = 0; s2 < kNumEndings; ++s2) {
          if (!group_rel[g][state][s2]) continue;
          auto sub = reach(next, s2);
          for (int f = 0; f < kNumEndings; ++f)
            if (sub[f]) out[f] = 1;
        }
      }
    }
    memo[key] = out;
    return out;
  }
};

void compute_rel(RepNode& n, EndingVariant variant);

NodeDP make_dp(RepNode& n, EndingVariant variant) {
  NodeDP dp;
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    compute_rel(n.kids[i], variant);
    const Rel& r = n.kids[i].rel;
    int g = -1;
    for (std::size_t j = 0; j < dp.group_rel.size(); ++j)
      if (dp.group_rel[j] == r) {
        g = static_cast<int>(j);
        break;
      }
    if (g < 0) {
      g = static_cast<int>(dp.group_rel.size());
      dp.group_rel.push_back(r);
      dp.members.emplace_back();
    }
    dp.group_of.push_back(g);
    dp.members[g].push_back(static_cast<int>(i));
  }
  return dp;
}

void compute_rel(RepNode& n, EndingVariant variant) {
  if (n.is_int) {
    n.rel = int_rel(n.value, variant);
    return;
  }
  NodeDP dp = make_dp(n, variant);
  std::vector<int> counts(dp.group_rel.size());
  for (int g : dp.group_of) ++counts[g];
  for (int s = 0; s < kNumEndings; ++s) {
    auto r = dp.reach(counts, s);
    for (int f = 0; f < kNumEndings; ++f) n.rel[s][f] = r[f];
  }
}

// Reconstruct one ordering witnessing (in, out); appends the arranged
// integers and the arranged expression kids.
void arrange_node(RepNode& n, Ending in, Ending out, EndingVariant variant, CountSeq& flat,
                  TreeExpr& expr);

void arrange_children(RepNode& n, Ending in, Ending out, EndingVariant variant, CountSeq& flat,
                      std::vector<TreeExpr>& kids_out) {
  NodeDP dp = make_dp(n, variant);
  std::vector<int> counts(dp.group_rel.size());
  for (int g : dp.group_of) ++counts[g];
  std::vector<int> next_member(dp.group_rel.size(), 0);
  int state = eidx(in);
  while (true) {
    bool empty = std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
    if (empty) {
      if (state != eidx(out)) throw ClassError("internal: ending arrangement lost its target");
      return;
    }
    bool advanced = false;
    for (std::size_t g = 0; g < counts.size() && !advanced; ++g) {
      if (counts[g] == 0) continue;
      for (int s2 = 0; s2 < kNumEndings && !advanced; ++s2) {
        if (!dp.group_rel[g][state][s2]) continue;
        std::vector<int> next = counts;
        --next[g];
        if (!dp.reach(next, s2)[eidx(out)]) continue;
        RepNode& kid = n.kids[dp.members[g][next_member[g]]];
        ++next_member[g];
        counts = next;
        TreeExpr kid_expr;
        arrange_node(kid, efrom(state), efrom(s2), variant, flat, kid_expr);
        kids_out.push_back(kid_expr);
        state = s2;
        advanced = true;
      }
    }
    if (!advanced) throw ClassError("internal: ending arrangement is stuck");
  }
}

void arrange_node(RepNode& n, Ending in, Ending out, EndingVariant variant, CountSeq& flat,
                  TreeExpr& expr) {
  if (n.is_int) {
    Ending to;
    if (!ending_step(in, n.value, variant, &to) || to != out)
      throw ClassError("internal: integer does not step between the chosen endings");
    flat.push_back(n.value);
    expr = TreeExpr::count(static_cast<int>(n.value));
    return;
  }
  std::vector<TreeExpr> kids;
  arrange_children(n, in, out, variant, flat, kids);
  expr = TreeExpr::node(std::move(kids));
}

EndingPairSet rel_to_set(const Rel& r) {
  EndingPairSet out;
  for (int i = 0; i < kNumEndings; ++i)
    for (int j = 0; j < kNumEndings; ++j)
      if (r[i][j]) out.insert({efrom(i), efrom(j)});
  return out;
}

void check_no_zero(const TreeExpr& e) {
  if (e.is_count()) {
    if (e.leaf_count == 0) throw ClassError("zero subtree in a strict-variant representation");
    return;
  }
  for (const auto& k : e.kids) check_no_zero(k);
}

}  // namespace

EndingPairSet achievable_endings(const TreeExpr& expr, EndingVariant variant) {
  RepNode n = rep_from_expr(expr);
  compute_rel(n, variant);
  return rel_to_set(n.rel);
}

EndingPairSet associate_endings(const TreeExpr& expr, EndingVariant variant) {
  if (variant == EndingVariant::Strict) check_no_zero(expr);
  RepNode n = rep_from_expr(expr);
  compute_rel(n, variant);
  EndingPairSet claim = ending_pair_row(static_cast<int>(n.even_count % 4));
  EndingPairSet have = rel_to_set(n.rel);
  for (const auto& p : claim)
    if (!have.count(p))
      throw ClassError("claimed ending pair (" + ending_name(p.first) + "," +
                       ending_name(p.second) + ") is not realizable for " + to_string(expr));
  return claim;
}

CountSeq ending_witness(const TreeExpr& expr, Ending in, Ending out, EndingVariant variant) {
  RepNode n = rep_from_expr(expr);
  compute_rel(n, variant);
  if (!n.rel[eidx(in)][eidx(out)])
    throw ClassError("pair (" + ending_name(in) + "," + ending_name(out) +
                     ") is not achievable for " + to_string(expr));
  CountSeq flat;
  TreeExpr arranged;
  arrange_node(n, in, out, variant, flat, arranged);
  return flat;
}

namespace detail {

// Shared with the labelers: arrange a whole tree's components from the empty
// prefix to an attainable ending, returning the arranged expression and the
// flattened last-level counts plus the ending trajectory's block plan.
struct ArrangedTree {
  TreeExpr expr;
  CountSeq flat;
  Ending final_state = Ending::None;
};

ArrangedTree arrange_for_labeling(const TreeExpr& rep_expr, EndingVariant variant) {
  RepNode n = rep_from_expr(rep_expr);
  compute_rel(n, variant);
  ArrangedTree out;
  // Attainable finals, claim-expected first.
  std::vector<Ending> prefs;
  switch (n.even_count % 4) {
    case 0: prefs = {Ending::None, Ending::E1, Ending::E2}; break;
    case 1: prefs = {Ending::E1, Ending::None, Ending::E2}; break;
    case 2: prefs = {Ending::E2, Ending::None, Ending::E1}; break;
    default: prefs = {Ending::None, Ending::E1, Ending::E2}; break;
  }
  Ending target = Ending::None;
  bool found = false;
  for (Ending e : prefs)
    if (n.rel[eidx(Ending::None)][eidx(e)]) {
      target = e;
      found = true;
      break;
    }
  if (!found)
    throw ClassError("no attainable ending reachable; the even-count condition fails");
  if (rep_expr.is_count()) {
    // Degenerate depth-<=1 tree handled by the caller.
    throw ClassError("internal: arrange_for_labeling needs components");
  }
  std::vector<TreeExpr> kids;
  arrange_children(n, Ending::None, target, variant, out.flat, kids);
  out.expr = TreeExpr::node(std::move(kids));
  out.final_state = target;
  return out;
}

// Deterministic segmentation of an arranged count sequence into blocks.
BlockPlan segment_endings(const CountSeq& flat, EndingVariant variant) {
  BlockPlan plan;
  CountSeq buf;
  Ending state = Ending::None;
  for (long v : flat) {
    Ending ns;
    if (!ending_step(state, v, variant, &ns))
      throw ClassError("internal: arranged sequence leaves the ending automaton");
    buf.push_back(v);
    if (ns == Ending::None) {
      if (buf.size() == 1)
        plan.blocks.push_back({RowKind::NicelyO, buf});
      else
        plan.blocks.push_back({RowKind::NicelyEvenRun, buf});
      buf.clear();
    }
    state = ns;
  }
  if (state == Ending::E1)
    plan.blocks.push_back({RowKind::TailEvens, buf});
  else if (state == Ending::E2)
    plan.blocks.push_back({RowKind::TailEE0ORun, buf});
  else if (state != Ending::None)
    throw ClassError("internal: arranged sequence ends in a non-attainable state");
  return plan;
}

}  // namespace detail

}  // namespace gracetree
