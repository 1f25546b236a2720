#include <doctest.h>

#include <numeric>
#include <random>

#include "gracetree/attainable.hpp"
#include "gracetree/oracle.hpp"

using namespace gracetree;

namespace {

TransferContext star_context(int n) {
  LabeledState star = star_state(n);
  std::vector<int> vlist;
  for (int pos = 1; pos <= n + 1; ++pos)
    vlist.push_back(pos % 2 == 1 ? (pos - 1) / 2 : n + 1 - pos / 2);
  return make_context(star, vlist, 0, n + 1, 1, n);
}

// Context shapes for the catalog property: the fresh star (pattern 1, a < b),
// the tail after one standard transfer (pattern 2, a > b), and both mirrors.
std::vector<TransferContext> context_shapes(int pool, int m_needed) {
  std::vector<TransferContext> out;
  {
    int n = pool;
    if (n + 1 >= m_needed) out.push_back(star_context(n));
    LabeledState ms = mirrored(star_state(n));
    std::vector<int> vlist;
    for (int pos = 1; pos <= n + 1; ++pos)
      vlist.push_back(pos % 2 == 1 ? n - (pos - 1) / 2 : pos / 2 - 1);
    if (n + 1 >= m_needed) out.push_back(make_context(ms, vlist, n, -1, 0, n - 1));
  }
  {
    // After 0 -> n of the run [2 .. pool+1] on the star with n = pool + 3.
    int n = pool + 3;
    int lo = 2, hi = pool + 1;
    if (n - 1 >= m_needed) {
      LabeledState s = apply_type1(star_state(n), 0, n, {lo, hi});
      std::vector<int> vlist;
      for (int pos = 1; pos + 1 <= n; ++pos)
        vlist.push_back(pos % 2 == 1 ? n - (pos - 1) / 2 : pos / 2);
      out.push_back(make_context(s, vlist, n, 0, lo, hi));
      LabeledState ms = mirrored(s);
      std::vector<int> mlist;
      for (int pos = 1; pos + 1 <= n; ++pos)
        mlist.push_back(pos % 2 == 1 ? (pos - 1) / 2 : n - pos / 2);
      out.push_back(make_context(ms, mlist, 0, n, n - hi, n - lo));
    }
  }
  return out;
}

long seq_total(const CountSeq& c) { return std::accumulate(c.begin(), c.end(), 0L); }

}  // namespace

TEST_CASE("pattern matching") {
  CHECK(match_pattern({4, 3, 5, 7, 2}, CountPattern::parse("e,o,o,o,e")));
  CHECK(match_pattern({2, 0, 3, 3, 0, 2}, CountPattern::parse("e,e0,o,o,e0,e")));
  CHECK(match_pattern({2, 0, 3, 3, 0, 2}, CountPattern::parse("e,e0,o*,e0,e")));
  CHECK(match_pattern({2, 0, 0, 2}, CountPattern::parse("e,e0,o*,e0,e")));
  CHECK(!match_pattern({3, 2}, CountPattern::parse("o")));
  CHECK(!match_pattern({2, 1, 3, 3, 0, 2}, CountPattern::parse("e,e0,o*,e0,e")));
  CHECK(CountPattern::parse("e,e0,o*,e0,e").to_text() == "e,e0,o*,e0,e");
}

TEST_CASE("decompose examples") {
  auto p1 = decompose({3, 1, 3, 1, 4});
  REQUIRE(p1.has_value());
  REQUIRE(p1->blocks.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(p1->blocks[i].kind == RowKind::NicelyO);
  CHECK(p1->blocks[4].kind == RowKind::TailEvens);
  CHECK(p1->blocks[4].counts == CountSeq{4});

  auto p2 = decompose({2, 3, 3, 3, 2, 2, 2});
  REQUIRE(p2.has_value());
  REQUIRE(p2->blocks.size() == 2);
  CHECK(p2->blocks[0].kind == RowKind::NicelyEOOOE);
  CHECK(p2->blocks[1].kind == RowKind::TailEvens);
  CHECK(p2->blocks[1].counts == CountSeq{2, 2});

  DecomposeFailure why;
  CHECK(!decompose({2, 1}, &why).has_value());
  CHECK(why.longest_prefix == 0);

  auto p3 = decompose({2, 2, 2, 2});
  REQUIRE(p3.has_value());
  REQUIRE(p3->blocks.size() == 1);
  CHECK(p3->blocks[0].kind == RowKind::NicelyEvenRun);
}

TEST_CASE("realize the single-odd row") {
  auto ctx = star_context(7);
  CountSeq counts = {3, 4};
  auto plan = decompose(counts);
  REQUIRE(plan.has_value());
  auto script = realize(ctx, counts, *plan);
  REQUIRE(script.size() == 1);
  CHECK(script[0].from == 0);
  CHECK(script[0].run1.size() == 4);
  CHECK(result_of(ctx, script) == CountSeq{3, 4, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("realize e,o,o,o,e walks v1->v4->v3->v2->v5->v6") {
  CountSeq counts = {2, 3, 3, 3, 2, 3};
  auto plan = decompose(counts);
  REQUIRE(plan.has_value());
  auto ctx = star_context(static_cast<int>(seq_total(counts)));
  auto script = realize(ctx, counts, *plan);
  std::vector<std::pair<int, int>> hops;
  for (const auto& s : script) hops.push_back({s.from, s.to});
  std::vector<std::pair<int, int>> expect;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 4}, {4, 3}, {3, 2}, {2, 5}, {5, 6}})
    expect.push_back({static_cast<int>(ctx.label_at(p)), static_cast<int>(ctx.label_at(q))});
  CHECK(hops == expect);
  auto res = result_of(ctx, script);
  res.resize(counts.size());
  CHECK(res == counts);
}

TEST_CASE("realize the even-run row on 2,2,2,2") {
  CountSeq counts = {2, 2, 2, 2};
  auto plan = decompose(counts);
  REQUIRE(plan.has_value());
  auto ctx = star_context(8);
  auto script = realize(ctx, counts, *plan);
  auto res = result_of(ctx, script);
  res.resize(4);
  CHECK(res == counts);
}

TEST_CASE("result_of matches the figure") {
  auto ctx = star_context(12);
  TransferScript fig = {TransferStep::type1(0, 12, {2, 10}), TransferStep::type1(12, 1, {3, 10}),
                        TransferStep::type1(1, 11, {4, 8}), TransferStep::type1(11, 2, {5, 8})};
  auto res = result_of(ctx, fig);
  CHECK(res == CountSeq{3, 1, 3, 1, 4, 0, 0, 0, 0, 0, 0, 0, 0});

  auto empty = result_of(ctx, {});
  CHECK(empty[0] == 12);
  CHECK(seq_total(empty) == 12);

  auto single = result_of(ctx, {TransferStep::type1(0, 12, {1, 11})});
  CHECK(single == CountSeq{1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

namespace {

// All concrete instances of a catalog row with the given length and total.
void instances(RowKind k, std::size_t len, long total, CountSeq& cur,
               const std::function<void(const CountSeq&)>& fn) {
  if (cur.size() == len) {
    if (total == 0 && row_matches(k, cur)) fn(cur);
    return;
  }
  for (long v = 0; v <= total; ++v) {
    cur.push_back(v);
    instances(k, len, total - v, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("catalog rows realize in every context shape at small scale") {
  struct RowSpec {
    RowKind kind;
    std::vector<std::size_t> lengths;
  };
  std::vector<RowSpec> rows = {
      {RowKind::NicelyO, {1}},          {RowKind::NicelyEOOOE, {5}},
      {RowKind::NicelyEOEEOE, {6}},     {RowKind::NicelyEvenRun, {4, 6}},
      {RowKind::TailEvens, {1, 2, 3}},  {RowKind::TailEE0EO, {4}},
      {RowKind::TailEE0ORun, {2, 4}},
  };
  int checked = 0;
  for (const auto& row : rows) {
    for (std::size_t len : row.lengths) {
      for (long total = 1; total <= 10; ++total) {
        CountSeq cur;
        instances(row.kind, len, total, cur, [&](const CountSeq& counts) {
          bool nicely = row_is_nicely(row.kind);
          // Nicely rows hand the remaining pool to one extra vertex.
          for (long extra : nicely ? std::vector<long>{1, 2} : std::vector<long>{0}) {
            CountSeq full = counts;
            if (nicely) full.push_back(extra);
            BlockPlan plan;
            plan.blocks.push_back({row.kind, counts});
            if (nicely) plan.blocks.push_back({extra % 2 == 1 ? RowKind::NicelyO : RowKind::TailEvens, {extra}});
            long pool = seq_total(full);
            for (auto& ctx : context_shapes(static_cast<int>(pool),
                                            static_cast<int>(full.size()))) {
              auto script = realize(ctx, full, plan);
              auto res = result_of(ctx, script);
              res.resize(full.size());
              CHECK(res == full);
              ++checked;
            }
          }
        });
      }
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("composition: nicely blocks chain into attainable tails") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    // nicely (o) or (e,o,o,o,e) followed by an all-even tail
    BlockPlan plan;
    CountSeq counts;
    if (rng() % 2 == 0) {
      long o = 1 + 2 * (rng() % 2);
      plan.blocks.push_back({RowKind::NicelyO, {o}});
      counts.push_back(o);
    } else {
      CountSeq b = {2, 1, 1, 1, 2};
      plan.blocks.push_back({RowKind::NicelyEOOOE, b});
      counts.insert(counts.end(), b.begin(), b.end());
    }
    CountSeq tail;
    for (int i = 0, k = 1 + static_cast<int>(rng() % 2); i < k; ++i) tail.push_back(2);
    plan.blocks.push_back({RowKind::TailEvens, tail});
    counts.insert(counts.end(), tail.begin(), tail.end());
    long pool = seq_total(counts);
    for (auto& ctx : context_shapes(static_cast<int>(pool), static_cast<int>(counts.size()))) {
      auto script = realize(ctx, counts, plan);
      auto res = result_of(ctx, script);
      res.resize(counts.size());
      CHECK(res == counts);
    }
  }
}

TEST_CASE("realize errors name the failing constraint") {
  auto ctx = star_context(7);
  BlockPlan plan;
  plan.blocks.push_back({RowKind::NicelyO, {3}});
  plan.blocks.push_back({RowKind::TailEvens, {4}});
  CHECK_THROWS_AS(realize(ctx, {3, 5}, plan), TransferError);   // totals disagree
  CHECK_THROWS_AS(realize(ctx, {4, 3}, plan), TransferError);   // plan does not cover counts
  BlockPlan bad;
  bad.blocks.push_back({RowKind::NicelyO, {4}});  // even count in an odd row
  bad.blocks.push_back({RowKind::TailEvens, {3}});
  CHECK_THROWS_AS(realize(ctx, {4, 3}, bad), TransferError);
}

TEST_CASE("decompose success implies the exhaustive search also succeeds") {
  // All count vectors with m <= 5 positions and <= 9 leaves.
  int agreements = 0, informative = 0;
  std::function<void(CountSeq&, long)> walk = [&](CountSeq& cur, long left) {
    if (!cur.empty()) {
      CountSeq counts = cur;
      long pool = seq_total(counts);
      if (pool >= 1 && pool <= 9) {
        auto plan = decompose(counts);
        if (plan.has_value()) {
          auto ctx = star_context(static_cast<int>(pool));
          CountSeq padded = counts;
          padded.resize(ctx.m(), 0);
          auto found = search_well_behaved(ctx, padded, SearchBudget{2'000'000, 0});
          CHECK(found.status == SearchStatus::Found);
          if (found.status == SearchStatus::Found) {
            auto res = result_of(ctx, *found.script);
            CHECK(res == padded);
            ++agreements;
          }
        } else {
          ++informative;  // greedy decomposition is sufficient, not necessary
        }
      }
    }
    if (cur.size() == 5) return;
    for (long v = 0; v <= left; ++v) {
      cur.push_back(v);
      walk(cur, left - v);
      cur.pop_back();
    }
  };
  CountSeq cur;
  walk(cur, 6);
  CHECK(agreements > 50);
  CHECK(informative > 0);
}
