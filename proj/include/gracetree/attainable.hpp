#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gracetree/transfer.hpp"

namespace gracetree {

// Count symbols of the sequence tables: positive odd, positive even,
// non-negative even.
enum class CountSym { O, E, E0 };

bool sym_matches(CountSym s, long n);
std::string sym_name(CountSym s);

// Symbol pattern with an optional repeated symbol (the variable-length rows).
struct CountPattern {
  std::vector<CountSym> prefix;
  bool has_repeat = false;
  CountSym repeat = CountSym::O;
  std::vector<CountSym> suffix;

  bool matches(const std::vector<long>& counts) const;
  // Text form: comma-separated o | e | e0, with '*' marking the repeated
  // symbol, e.g. "e,e0,o*,e0,e".
  static CountPattern parse(const std::string& text);
  std::string to_text() const;
};

bool match_pattern(const std::vector<long>& counts, const CountPattern& pattern);

using CountSeq = std::vector<long>;

// Catalog rows.  The four Nicely* rows hand the remaining pool to the next
// vertex; the Tail* rows end the walk (the run parks).  A nicely row may
// also close a plan by parking instead of handing off.  TailZeros stands for
// trailing unvisited positions whose counts are all zero.
enum class RowKind {
  NicelyO,        // o
  NicelyEOOOE,    // e, o, o, o, e
  NicelyEOEEOE,   // e, o, e, e, o, e
  NicelyEvenRun,  // e, e/0, o..o (even count), e/0, e
  TailEvens,      // e, ..., e
  TailEE0EO,      // e, e/0, e, o
  TailEE0ORun,    // e, e/0, o..o (even count)
  TailZeros,
};

bool row_is_nicely(RowKind k);
std::string row_name(RowKind k);
// Whether `counts` is a valid instance of the row.
bool row_matches(RowKind k, const CountSeq& counts);

struct Block {
  RowKind kind;
  CountSeq counts;
};

struct BlockPlan {
  std::vector<Block> blocks;

  CountSeq flatten() const;
  std::string to_text() const;
};

struct DecomposeFailure {
  std::size_t longest_prefix;  // counts consumed by nicely rows before failing
  std::string reason;
};

// Greedy longest-first split into nicely rows with an attainable terminal
// block (a Tail* row, or a final nicely row closed by parking).
std::optional<BlockPlan> decompose(const CountSeq& counts, DecomposeFailure* failure = nullptr);

// An index walk over context positions with prescribed per-transfer leave
// amounts; the run parks at the last position.
struct PlannedWalk {
  std::vector<int> positions;
  std::vector<long> leaves;  // leaves[j] stay at positions[j] during transfer j
};

// Walk + leave amounts realizing `plan` over positions base..base+len-1.
PlannedWalk walk_from_plan(const BlockPlan& plan, int base_position);

// Turn a planned walk into concrete type-1 transfers in `ctx`; every step is
// validated (sum condition, run containment, parity of the leave amount).
TransferScript realize_walk(const TransferContext& ctx, const PlannedWalk& walk);

// realize: counts must sum to the pool size and be covered by `plan`.
TransferScript realize(const TransferContext& ctx, const CountSeq& counts, const BlockPlan& plan);

// Result of a script in a context: how many pool leaves end adjacent to each
// context vertex.
CountSeq result_of(const TransferContext& ctx, const TransferScript& script);

}  // namespace gracetree
