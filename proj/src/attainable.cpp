#include "gracetree/attainable.hpp"

#include <algorithm>
#include <map>

namespace gracetree {

bool sym_matches(CountSym s, long n) {
  switch (s) {
    case CountSym::O: return n >= 1 && n % 2 == 1;
    case CountSym::E: return n >= 2 && n % 2 == 0;
    case CountSym::E0: return n >= 0 && n % 2 == 0;
  }
  return false;
}

std::string sym_name(CountSym s) {
  switch (s) {
    case CountSym::O: return "o";
    case CountSym::E: return "e";
    case CountSym::E0: return "e0";
  }
  return "?";
}

bool CountPattern::matches(const std::vector<long>& counts) const {
  const std::size_t fixed = prefix.size() + suffix.size();
  if (!has_repeat) {
    if (counts.size() != fixed) return false;
  } else if (counts.size() < fixed) {
    return false;
  }
  std::size_t i = 0;
  for (CountSym s : prefix)
    if (!sym_matches(s, counts[i++])) return false;
  if (has_repeat) {
    for (; i < counts.size() - suffix.size(); ++i)
      if (!sym_matches(repeat, counts[i])) return false;
  }
  for (CountSym s : suffix)
    if (!sym_matches(s, counts[i++])) return false;
  return true;
}

CountPattern CountPattern::parse(const std::string& text) {
  CountPattern p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    // strip spaces
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    bool rep = !tok.empty() && tok.back() == '*';
    if (rep) tok.pop_back();
    CountSym s;
    if (tok == "o")
      s = CountSym::O;
    else if (tok == "e")
      s = CountSym::E;
    else if (tok == "e0" || tok == "e/0")
      s = CountSym::E0;
    else
      throw std::runtime_error("bad pattern symbol '" + tok + "'");
    if (rep) {
      if (p.has_repeat) throw std::runtime_error("pattern allows one repeated symbol");
      p.has_repeat = true;
      p.repeat = s;
    } else if (p.has_repeat) {
      p.suffix.push_back(s);
    } else {
      p.prefix.push_back(s);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::string CountPattern::to_text() const {
  std::string out;
  auto add = [&](const std::string& t) {
    if (!out.empty()) out += ",";
    out += t;
  };
  for (CountSym s : prefix) add(sym_name(s));
  if (has_repeat) add(sym_name(repeat) + "*");
  for (CountSym s : suffix) add(sym_name(s));
  return out;
}

bool match_pattern(const std::vector<long>& counts, const CountPattern& pattern) {
  return pattern.matches(counts);
}

bool row_is_nicely(RowKind k) {
  return k == RowKind::NicelyO || k == RowKind::NicelyEOOOE || k == RowKind::NicelyEOEEOE ||
         k == RowKind::NicelyEvenRun;
}

std::string row_name(RowKind k) {
  switch (k) {
    case RowKind::NicelyO: return "o";
    case RowKind::NicelyEOOOE: return "e,o,o,o,e";
    case RowKind::NicelyEOEEOE: return "e,o,e,e,o,e";
    case RowKind::NicelyEvenRun: return "e,e0,o*,e0,e";
    case RowKind::TailEvens: return "e*";
    case RowKind::TailEE0EO: return "e,e0,e,o";
    case RowKind::TailEE0ORun: return "e,e0,o*";
    case RowKind::TailZeros: return "0*";
  }
  return "?";
}

bool row_matches(RowKind k, const CountSeq& c) {
  auto o = [](long n) { return sym_matches(CountSym::O, n); };
  auto e = [](long n) { return sym_matches(CountSym::E, n); };
  auto e0 = [](long n) { return sym_matches(CountSym::E0, n); };
  switch (k) {
    case RowKind::NicelyO: return c.size() == 1 && o(c[0]);
    case RowKind::NicelyEOOOE:
      return c.size() == 5 && e(c[0]) && o(c[1]) && o(c[2]) && o(c[3]) && e(c[4]);
    case RowKind::NicelyEOEEOE:
      return c.size() == 6 && e(c[0]) && o(c[1]) && e(c[2]) && e(c[3]) && o(c[4]) && e(c[5]);
    case RowKind::NicelyEvenRun: {
      if (c.size() < 4 || c.size() % 2 != 0) return false;
      if (!e(c.front()) || !e(c.back())) return false;
      if (!e0(c[1]) || !e0(c[c.size() - 2])) return false;
      for (std::size_t i = 2; i + 2 < c.size(); ++i)
        if (!o(c[i])) return false;
      return true;
    }
    case RowKind::TailEvens:
      return !c.empty() && std::all_of(c.begin(), c.end(), e);
    case RowKind::TailEE0EO:
      return c.size() == 4 && e(c[0]) && e0(c[1]) && e(c[2]) && o(c[3]);
    case RowKind::TailEE0ORun: {
      if (c.size() < 2 || c.size() % 2 != 0) return false;
      if (!e(c[0]) || !e0(c[1])) return false;
      for (std::size_t i = 2; i < c.size(); ++i)
        if (!o(c[i])) return false;
      return true;
    }
    case RowKind::TailZeros:
      return std::all_of(c.begin(), c.end(), [](long n) { return n == 0; });
  }
  return false;
}

CountSeq BlockPlan::flatten() const {
  CountSeq out;
  for (const auto& b : blocks) out.insert(out.end(), b.counts.begin(), b.counts.end());
  return out;
}

std::string BlockPlan::to_text() const {
  std::string out;
  for (const auto& b : blocks) {
    out += "[" + row_name(b.kind) + ":";
    for (std::size_t i = 0; i < b.counts.size(); ++i)
      out += (i ? "," : " ") + std::to_string(b.counts[i]);
    out += "] ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

namespace {

CountSeq slice(const CountSeq& c, std::size_t from, std::size_t len) {
  return CountSeq(c.begin() + from, c.begin() + from + len);
}

// Terminal block(s) covering counts[from..]: a Tail* row, or a final nicely
// row closed by parking, optionally followed by trailing zeros.
std::optional<std::vector<Block>> match_terminal(const CountSeq& c, std::size_t from) {
  std::size_t end = c.size();
  std::vector<Block> zeros;
  std::size_t stop = end;
  while (stop > from && c[stop - 1] == 0) --stop;
  if (stop < end) zeros.push_back({RowKind::TailZeros, slice(c, stop, end - stop)});
  std::size_t len = stop - from;
  if (len == 0) {
    if (!zeros.empty()) return std::nullopt;  // a plan cannot be all zeros
    return std::nullopt;
  }
  CountSeq tail = slice(c, from, len);
  for (RowKind k : {RowKind::NicelyO, RowKind::NicelyEOOOE, RowKind::NicelyEOEEOE,
                    RowKind::NicelyEvenRun, RowKind::TailEvens, RowKind::TailEE0ORun,
                    RowKind::TailEE0EO}) {
    if (row_matches(k, tail)) {
      std::vector<Block> out{{k, tail}};
      out.insert(out.end(), zeros.begin(), zeros.end());
      return out;
    }
  }
  return std::nullopt;
}

bool decompose_rec(const CountSeq& c, std::size_t from, std::vector<Block>& acc,
                   std::size_t& longest) {
  longest = std::max(longest, from);
  if (auto term = match_terminal(c, from)) {
    acc.insert(acc.end(), term->begin(), term->end());
    return true;
  }
  if (from >= c.size()) return false;
  // Nicely candidates, longest first.
  std::vector<std::pair<std::size_t, RowKind>> cands;
  std::size_t left = c.size() - from;
  for (std::size_t len = left - (left % 2 == 0 ? 2 : 1); len >= 4; len -= 2)
    cands.push_back({len, RowKind::NicelyEvenRun});
  if (left > 6) cands.push_back({6, RowKind::NicelyEOEEOE});
  if (left > 5) cands.push_back({5, RowKind::NicelyEOOOE});
  if (left > 1) cands.push_back({1, RowKind::NicelyO});
  std::sort(cands.begin(), cands.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto [len, kind] : cands) {
    CountSeq pre = slice(c, from, len);
    if (!row_matches(kind, pre)) continue;
    acc.push_back({kind, pre});
    if (decompose_rec(c, from + len, acc, longest)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<BlockPlan> decompose(const CountSeq& counts, DecomposeFailure* failure) {
  if (counts.empty() || std::all_of(counts.begin(), counts.end(), [](long n) { return n == 0; })) {
    if (failure) *failure = {0, "empty or all-zero count sequence"};
    return std::nullopt;
  }
  for (long n : counts)
    if (n < 0) {
      if (failure) *failure = {0, "negative count"};
      return std::nullopt;
    }
  BlockPlan plan;
  std::size_t longest = 0;
  if (decompose_rec(counts, 0, plan.blocks, longest)) return plan;
  if (failure)
    *failure = {longest, "no catalog split; longest nicely prefix covers " +
                             std::to_string(longest) + " of " + std::to_string(counts.size()) +
                             " counts"};
  return std::nullopt;
}

namespace {

std::vector<int> local_walk(RowKind k, std::size_t m) {
  std::vector<int> w;
  switch (k) {
    case RowKind::NicelyO:
      return {1};
    case RowKind::NicelyEOOOE:
      return {1, 4, 3, 2, 5};
    case RowKind::NicelyEOEEOE:
      return {1, 4, 5, 2, 3, 6};
    case RowKind::NicelyEvenRun: {
      // m = 2k: 1,2,1, 4,3, 6,5, ..., 2k-2,2k-3, 2k,2k-1, 2k
      std::size_t k2 = m / 2;
      w = {1, 2, 1};
      for (std::size_t i = 2; i + 1 <= k2; ++i) {
        w.push_back(static_cast<int>(2 * i));
        w.push_back(static_cast<int>(2 * i - 1));
      }
      w.push_back(static_cast<int>(m));
      w.push_back(static_cast<int>(m - 1));
      w.push_back(static_cast<int>(m));
      return w;
    }
    case RowKind::TailEvens: {
      for (std::size_t i = 1; i <= m; ++i) w.push_back(static_cast<int>(i));
      for (std::size_t i = m; i-- > 1;) w.push_back(static_cast<int>(i));
      return w;
    }
    case RowKind::TailEE0EO:
      return {1, 2, 1, 4, 3};
    case RowKind::TailEE0ORun: {
      w = {1, 2, 1};
      for (std::size_t i = 2; 2 * i <= m; ++i) {
        w.push_back(static_cast<int>(2 * i));
        w.push_back(static_cast<int>(2 * i - 1));
      }
      return w;
    }
    case RowKind::TailZeros:
      return {};
  }
  return w;
}

}  // namespace

PlannedWalk walk_from_plan(const BlockPlan& plan, int base_position) {
  // Assemble global positions.
  std::vector<int> pos;
  std::vector<long> count_at;  // by walk-local position index
  int base = base_position;
  std::map<int, long> counts;
  for (const auto& b : plan.blocks) {
    if (!row_matches(b.kind, b.counts))
      throw TransferError("block counts do not match row " + row_name(b.kind));
    auto lw = local_walk(b.kind, b.counts.size());
    if (lw.empty() && b.kind != RowKind::TailZeros)
      throw TransferError("empty walk for row " + row_name(b.kind));
    if (row_is_nicely(b.kind) && lw.back() != static_cast<int>(b.counts.size()) &&
        &b != &plan.blocks.back())
      throw TransferError("internal: nicely walk must end at its last position");
    for (int l : lw) pos.push_back(base + l - 1);
    for (std::size_t i = 0; i < b.counts.size(); ++i) counts[base + static_cast<int>(i)] = b.counts[i];
    base += static_cast<int>(b.counts.size());
    if (!row_is_nicely(b.kind) && b.kind != RowKind::TailZeros && &b != &plan.blocks.back()) {
      // Tail rows park; only trailing zeros may follow.
      const Block* next = &b + 1;
      if (next->kind != RowKind::TailZeros)
        throw TransferError("attainable tail row must be the final walked block");
    }
  }
  if (pos.empty()) throw TransferError("plan walks no positions");

  PlannedWalk w;
  w.positions = pos;
  const std::size_t T = pos.size() - 1;  // number of transfers
  w.leaves.assign(T, -1);
  auto d_of = [&](std::size_t j) {
    int prev = (j == 0) ? base_position - 1 : pos[j - 1];
    return std::abs(pos[j + 1] - prev) / 2;
  };
  // Departure transfers per position.
  std::map<int, std::vector<std::size_t>> departures;
  for (std::size_t j = 0; j < T; ++j) departures[pos[j]].push_back(j);
  for (auto& [p, js] : departures) {
    long c = counts.count(p) ? counts[p] : 0;
    bool parks_here = (p == pos.back());
    if (js.size() == 1 && !parks_here) {
      w.leaves[js[0]] = c;
    } else if (js.size() == 1 && parks_here) {
      w.leaves[js[0]] = d_of(js[0]);  // minimal; the park takes the rest
    } else if (js.size() == 2) {
      long first = d_of(js[0]);
      w.leaves[js[0]] = first;
      if (parks_here)
        w.leaves[js[1]] = d_of(js[1]);
      else
        w.leaves[js[1]] = c - first;
    } else {
      throw TransferError("internal: a walk position departs more than twice");
    }
    if (js.size() == 2 && !parks_here && w.leaves[js[1]] < 0)
      throw TransferError("count at position " + std::to_string(p) +
                          " too small for its double visit");
  }
  return w;
}

TransferScript realize_walk(const TransferContext& ctx, const PlannedWalk& walk) {
  if (walk.positions.empty()) return {};
  if (walk.leaves.size() + 1 != walk.positions.size())
    throw TransferError("walk has " + std::to_string(walk.positions.size()) + " positions but " +
                        std::to_string(walk.leaves.size()) + " leave amounts");
  for (int p : walk.positions)
    if (p < 1 || p > ctx.m()) throw TransferError("walk position outside the context");
  TransferScript script;
  LabelRun run{static_cast<int>(ctx.c), static_cast<int>(ctx.d)};
  for (std::size_t j = 0; j + 1 < walk.positions.size(); ++j) {
    int p = walk.positions[j], q = walk.positions[j + 1];
    long sigma = ctx.label_at(p) + ctx.label_at(q);
    long leave = walk.leaves[j];
    if (leave < 0) throw TransferError("step " + std::to_string(j) + ": negative leave amount");
    long size = run.size() - leave;
    if (size < 1)
      throw TransferError("step " + std::to_string(j) + ": leave amount " +
                          std::to_string(leave) + " empties the run");
    if ((sigma - size + 1) % 2 != 0)
      throw TransferError("step " + std::to_string(j) + ": leave amount " + std::to_string(leave) +
                          " has the wrong parity (must match the parity of |i_next - i_prev|/2)");
    long lo = (sigma - size + 1) / 2;
    long hi = lo + size - 1;
    if (lo < run.lo || hi > run.hi)
      throw TransferError("step " + std::to_string(j) + ": leave amount " + std::to_string(leave) +
                          " is below the minimum |i_next - i_prev|/2 for this hop");
    script.push_back(TransferStep::type1(static_cast<int>(ctx.label_at(p)),
                                         static_cast<int>(ctx.label_at(q)),
                                         {static_cast<int>(lo), static_cast<int>(hi)}));
    run = {static_cast<int>(lo), static_cast<int>(hi)};
  }
  return script;
}

TransferScript realize(const TransferContext& ctx, const CountSeq& counts, const BlockPlan& plan) {
  long total = 0;
  for (long n : counts) total += n;
  if (total != ctx.pool_size())
    throw TransferError("counts sum to " + std::to_string(total) + " but the pool holds " +
                        std::to_string(ctx.pool_size()) + " leaves");
  if (plan.flatten() != counts)
    throw TransferError("plan does not cover the requested counts");
  if (static_cast<int>(counts.size()) > ctx.m())
    throw TransferError("context has too few vertices for the counts");
  return realize_walk(ctx, walk_from_plan(plan, 1));
}

CountSeq result_of(const TransferContext& ctx, const TransferScript& script) {
  LabeledState end = replay_script(ctx.state, script);
  CountSeq out(ctx.m(), 0);
  // Each pool leaf hangs under exactly one vertex; count it there.
  for (int k = 0; k < ctx.m(); ++k) {
    Vertex v = end.vertex_of(static_cast<int>(ctx.label_at(k + 1)));
    for (Vertex ch : end.tree.children[v]) {
      long lab = end.label_of(ch);
      if (lab >= ctx.c && lab <= ctx.d) ++out[k];
    }
  }
  return out;
}

}  // namespace gracetree
