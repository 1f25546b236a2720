#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gracetree/attainable.hpp"
#include "gracetree/classify.hpp"
#include "gracetree/transfer.hpp"
#include "gracetree/tree.hpp"

namespace gracetree {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 0.0;  // 0 = unlimited

  static SearchBudget unlimited() { return {UINT64_MAX, 0.0}; }
};

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

struct LabelingSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Labeling> labeling;
};

// Backtracking search for a graceful labeling, assigning labels in BFS order
// from the root and pruning on duplicate edge labels.  Deterministic.
LabelingSearchResult brute_force_graceful(const RootedTree& t, std::optional<int> root_label,
                                          const SearchBudget& budget = {});

// All rooted trees on exactly n vertices (Beyer-Hedetniemi level sequences),
// one per isomorphism class.
void enumerate_rooted_trees(int n, const std::function<void(const RootedTree&)>& fn);

// Number of rooted trees on n vertices by the A000081 recurrence; the
// enumeration self-test compares against this independent computation.
std::vector<std::uint64_t> rooted_tree_counts(int n_max);

struct ClassFilter {
  ClassId cls;
  int n_max;
};

std::vector<RootedTree> enumerate_class(const ClassFilter& filter);

struct ScriptSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<TransferScript> script;
};

// Depth-first search over all well-behaved transfer sequences in `ctx` for
// one whose result equals `counts`.
ScriptSearchResult search_well_behaved(const TransferContext& ctx, const CountSeq& counts,
                                       const SearchBudget& budget = {});

}  // namespace gracetree
