#include "gracetree/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gracetree {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
  const SearchBudget& budget;
  std::uint64_t nodes = 0;
  Clock::time_point start = Clock::now();
  bool exhausted = false;

  bool tick() {
    if (exhausted) return false;
    if (++nodes > budget.max_nodes) {
      exhausted = true;
      return false;
    }
    if (budget.max_seconds > 0 && (nodes & 4095) == 0) {
      double sec = std::chrono::duration<double>(Clock::now() - start).count();
      if (sec > budget.max_seconds) {
        exhausted = true;
        return false;
      }
    }
    return true;
  }
};

struct GracefulSearch {
  const RootedTree& t;
  std::vector<Vertex> order;  // BFS from the root
  std::vector<int> parent_slot;
  int n;
  std::vector<char> label_used;
  std::vector<char> diff_used;
  Labeling f;
  BudgetState bs;

  GracefulSearch(const RootedTree& tree, const SearchBudget& b) : t(tree), bs{b} {
    n = t.size();
    order.push_back(t.root);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex c : t.children[order[i]]) order.push_back(c);
    label_used.assign(n, 0);
    diff_used.assign(n, 0);
    f.label.assign(n, -1);
  }

  bool place(std::size_t i) {
    if (!bs.tick()) return false;
    if (i == order.size()) return true;
    Vertex v = order[i];
    for (int lab = 0; lab < n; ++lab) {
      if (label_used[lab]) continue;
      int diff = -1;
      if (t.parent[v] >= 0) {
        diff = std::abs(lab - f[t.parent[v]]);
        if (diff == 0 || diff_used[diff]) continue;
      }
      label_used[lab] = 1;
      if (diff >= 0) diff_used[diff] = 1;
      f[v] = lab;
      if (place(i + 1)) return true;
      f[v] = -1;
      label_used[lab] = 0;
      if (diff >= 0) diff_used[diff] = 0;
      if (bs.exhausted) return false;
    }
    return false;
  }
};

}  // namespace

LabelingSearchResult brute_force_graceful(const RootedTree& t, std::optional<int> root_label,
                                          const SearchBudget& budget) {
  GracefulSearch gs(t, budget);
  bool found = false;
  if (root_label) {
    int lab = *root_label;
    if (lab < 0 || lab >= t.size()) return {SearchStatus::Exhausted, std::nullopt};
    gs.label_used[lab] = 1;
    gs.f[t.root] = lab;
    found = gs.place(1);
  } else {
    found = gs.place(0);
  }
  if (found) return {SearchStatus::Found, gs.f};
  if (gs.bs.exhausted) return {SearchStatus::BudgetExhausted, std::nullopt};
  return {SearchStatus::Exhausted, std::nullopt};
}

void enumerate_rooted_trees(int n, const std::function<void(const RootedTree&)>& fn) {
  if (n <= 0) return;
  // Beyer-Hedetniemi level sequences, root at level 1.
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;
  auto emit = [&]() {
    RootedTree t;
    t.root = 0;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    std::vector<int> last_at_level(n + 2, -1);
    for (int i = 0; i < n; ++i) {
      last_at_level[L[i]] = i;
      if (L[i] > 1) {
        int p = last_at_level[L[i] - 1];
        t.parent[i] = p;
        t.children[p].push_back(i);
      }
    }
    fn(t);
  };
  if (n == 1) {
    emit();
    return;
  }
  while (true) {
    emit();
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (L[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (L[i] == L[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
}

std::vector<std::uint64_t> rooted_tree_counts(int n_max) {
  std::vector<std::uint64_t> r(n_max + 1, 0);
  if (n_max >= 1) r[1] = 1;
  for (int n = 1; n < n_max; ++n) {
    // r[n+1] = (sum_{k=1..n} c(k) r(n+1-k)) / n,  c(k) = sum_{d|k} d r(d)
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t c = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) c += static_cast<std::uint64_t>(d) * r[d];
      total += c * r[n + 1 - k];
    }
    r[n + 1] = total / n;
  }
  return r;
}

std::vector<RootedTree> enumerate_class(const ClassFilter& filter) {
  std::vector<RootedTree> out;
  for (int n = 1; n <= filter.n_max; ++n)
    enumerate_rooted_trees(n, [&](const RootedTree& t) {
      if (classify_tree(t).has(filter.cls)) out.push_back(t);
    });
  return out;
}

namespace {

struct ScriptSearch {
  const TransferContext& ctx;
  const CountSeq& counts;
  BudgetState bs;
  std::vector<long> acc;
  TransferScript script;
  std::set<std::tuple<int, int, int>> on_path;  // (pos, run.lo, run.hi)

  ScriptSearch(const TransferContext& c, const CountSeq& n, const SearchBudget& b)
      : ctx(c), counts(n), bs{b} {
    acc.assign(ctx.m(), 0);
  }

  bool done(int pos, LabelRun run) const {
    for (int k = 0; k < ctx.m(); ++k) {
      long want = counts[k];
      long have = acc[k] + (k + 1 == pos ? run.size() : 0);
      if (have != want) return false;
    }
    return true;
  }

  bool dfs(int pos, LabelRun run) {
    if (!bs.tick()) return false;
    if (done(pos, run)) return true;
    auto key = std::make_tuple(pos, run.lo, run.hi);
    if (!on_path.insert(key).second) return false;
    for (int t = 1; t <= ctx.m(); ++t) {
      if ((t - pos) % 2 == 0) continue;
      long sigma = ctx.label_at(pos) + ctx.label_at(t);
      // Moved sub-runs, largest first (symmetric trimming).
      for (long size = run.size(); size >= 1; --size) {
        if ((sigma - size + 1) % 2 != 0) continue;
        long lo = (sigma - size + 1) / 2, hi = lo + size - 1;
        if (lo < run.lo || hi > run.hi) continue;
        long leave = run.size() - size;
        if (acc[pos - 1] + leave > counts[pos - 1]) continue;
        acc[pos - 1] += leave;
        script.push_back(TransferStep::type1(static_cast<int>(ctx.label_at(pos)),
                                             static_cast<int>(ctx.label_at(t)),
                                             {static_cast<int>(lo), static_cast<int>(hi)}));
        if (dfs(t, {static_cast<int>(lo), static_cast<int>(hi)})) return true;
        script.pop_back();
        acc[pos - 1] -= leave;
        if (bs.exhausted) {
          on_path.erase(key);
          return false;
        }
      }
    }
    on_path.erase(key);
    return false;
  }
};

}  // namespace

ScriptSearchResult search_well_behaved(const TransferContext& ctx, const CountSeq& counts,
                                       const SearchBudget& budget) {
  if (static_cast<int>(counts.size()) != ctx.m())
    throw TransferError("counts length must equal the context vertex count");
  long total = 0;
  for (long n : counts) total += n;
  if (total != ctx.pool_size())
    throw TransferError("counts must sum to the pool size");
  ScriptSearch ss(ctx, counts, budget);
  LabelRun pool{static_cast<int>(ctx.c), static_cast<int>(ctx.d)};
  if (ss.dfs(1, pool)) return {SearchStatus::Found, ss.script};
  if (ss.bs.exhausted) return {SearchStatus::BudgetExhausted, std::nullopt};
  return {SearchStatus::Exhausted, std::nullopt};
}

}  // namespace gracetree
