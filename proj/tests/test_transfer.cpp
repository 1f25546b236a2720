#include <doctest.h>

#include <random>
#include <set>

#include "gracetree/transfer.hpp"

using namespace gracetree;

namespace {

std::set<int> children_labels(const LabeledState& s, int label) {
  std::set<int> out;
  for (Vertex c : s.tree.children[s.vertex_of(label)]) out.insert(s.label_of(c));
  return out;
}

std::set<int> range_set(int lo, int hi) {
  std::set<int> out;
  for (int x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

TransferScript star12_script() {
  return {TransferStep::type1(0, 12, {2, 10}), TransferStep::type1(12, 1, {3, 10}),
          TransferStep::type1(1, 11, {4, 8}), TransferStep::type1(11, 2, {5, 8})};
}

TransferContext star_context(int n) {
  LabeledState star = star_state(n);
  std::vector<int> vlist;
  for (int pos = 1; pos <= n + 1; ++pos)
    vlist.push_back(pos % 2 == 1 ? (pos - 1) / 2 : n + 1 - pos / 2);
  return make_context(star, vlist, 0, n + 1, 1, n);
}

// Mirrored star: center labeled n, pool 0..n-1, pattern 2 with b = -1.
TransferContext mirror_star_context(int n) {
  LabeledState s = mirrored(star_state(n));
  std::vector<int> vlist;
  for (int pos = 1; pos <= n + 1; ++pos)
    vlist.push_back(pos % 2 == 1 ? n - (pos - 1) / 2 : pos / 2 - 1);
  return make_context(s, vlist, n, -1, 0, n - 1);
}

}  // namespace

TEST_CASE("star states") {
  LabeledState s12 = star_state(12);
  CHECK(s12.size() == 13);
  CHECK(children_labels(s12, 0) == range_set(1, 12));
  CHECK(verify_graceful(s12.tree, s12.f).graceful);

  LabeledState s1 = star_state(1);
  CHECK(s1.size() == 2);
  CHECK(children_labels(s1, 0) == range_set(1, 1));

  LabeledState s21 = star_state(21);
  CHECK(children_labels(s21, 0) == range_set(1, 21));
  CHECK_THROWS_AS(star_state(0), TransferError);
}

TEST_CASE("legal type-1 moves on the star") {
  LabeledState s = star_state(12);
  auto runs = legal_type1_moves(s, 0, 12);
  // every consecutive run with k + (k+m) = 12, largest first
  std::vector<LabelRun> expect = {{1, 11}, {2, 10}, {3, 9}, {4, 8}, {5, 7}, {6, 6}};
  CHECK(runs == expect);
  CHECK(legal_type1_moves(s, 0, 1).empty());
}

TEST_CASE("legal moves after the first star-12 transfer") {
  LabeledState s = apply_type1(star_state(12), 0, 12, {2, 10});
  auto runs = legal_type1_moves(s, 12, 1);
  std::vector<LabelRun> expect = {{3, 10}, {4, 9}, {5, 8}, {6, 7}};
  CHECK(runs == expect);
}

TEST_CASE("star-12 golden replay, step by step") {
  LabeledState s = star_state(12);

  s = apply_type1(s, 0, 12, {2, 10});
  CHECK(children_labels(s, 0) == std::set<int>{1, 11, 12});
  CHECK(children_labels(s, 12) == range_set(2, 10));
  CHECK(verify_graceful(s.tree, s.f).graceful);

  s = apply_type1(s, 12, 1, {3, 10});
  CHECK(children_labels(s, 12) == std::set<int>{2});
  CHECK(children_labels(s, 1) == range_set(3, 10));
  CHECK(verify_graceful(s.tree, s.f).graceful);

  s = apply_type1(s, 1, 11, {4, 8});
  CHECK(children_labels(s, 1) == std::set<int>{3, 9, 10});
  CHECK(children_labels(s, 11) == range_set(4, 8));
  CHECK(verify_graceful(s.tree, s.f).graceful);

  s = apply_type1(s, 11, 2, {5, 8});
  CHECK(children_labels(s, 11) == std::set<int>{4});
  CHECK(children_labels(s, 2) == range_set(5, 8));
  CHECK(children_labels(s, 0) == std::set<int>{1, 11, 12});
  CHECK(verify_graceful(s.tree, s.f).graceful);
}

TEST_CASE("star-21 type-1 replacement replay") {
  LabeledState s = star_state(21);
  s = apply_type1(s, 0, 21, {2, 19});
  CHECK(children_labels(s, 0) == std::set<int>{1, 20, 21});
  CHECK(verify_graceful(s.tree, s.f).graceful);
  s = apply_type1(s, 21, 0, {3, 18});
  CHECK(children_labels(s, 21) == std::set<int>{2, 19});
  CHECK(verify_graceful(s.tree, s.f).graceful);
  s = apply_type1(s, 0, 21, {4, 17});
  CHECK(children_labels(s, 0) == std::set<int>{1, 3, 18, 20, 21});
  std::set<int> at21 = range_set(4, 17);
  at21.insert(2);
  at21.insert(19);
  CHECK(children_labels(s, 21) == at21);
  CHECK(verify_graceful(s.tree, s.f).graceful);
}

TEST_CASE("type-2 transfer on the star-12 final tree") {
  LabeledState s = replay_script(star_state(12), star12_script());
  LabeledState t = apply_type2(s, 2, 10, {5, 5}, {7, 7});
  CHECK(children_labels(t, 2) == std::set<int>{6, 8});
  CHECK(children_labels(t, 10) == std::set<int>{5, 7});
  CHECK(verify_graceful(t.tree, t.f).graceful);

  CHECK_THROWS_AS(apply_type2(s, 2, 10, {5, 6}, {6, 7}), TransferError);  // overlap
  CHECK_THROWS_AS(apply_type2(s, 2, 10, {5, 5}, {8, 8}), TransferError);  // sum breaks
  CHECK_THROWS_AS(apply_type2(s, 2, 10, {5, 6}, {7, 7}), TransferError);  // lengths differ
}

TEST_CASE("replay_script reports the failing step") {
  LabeledState final = replay_script(star_state(12), star12_script());
  CHECK(children_labels(final, 2) == range_set(5, 8));

  CHECK(replay_script(star_state(12), {}).size() == 13);

  TransferScript bad = star12_script();
  std::swap(bad[1], bad[2]);
  try {
    replay_script(star_state(12), bad);
    FAIL("expected a replay failure");
  } catch (const ReplayError& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("make_context validates the three bullets") {
  CHECK_NOTHROW(star_context(12));
  LabeledState s = star_state(12);
  std::vector<int> vlist;
  for (int pos = 1; pos <= 13; ++pos)
    vlist.push_back(pos % 2 == 1 ? (pos - 1) / 2 : 13 - pos / 2);
  CHECK_THROWS_AS(make_context(s, vlist, 0, 13, 2, 12), TransferError);  // a+b != c+d
  std::vector<int> broken = vlist;
  std::swap(broken[2], broken[3]);
  CHECK_THROWS_AS(make_context(s, broken, 0, 13, 1, 12), TransferError);  // pattern breaks
  // pool not all movable leaves at v1
  LabeledState moved = apply_type1(s, 0, 12, {2, 10});
  CHECK_THROWS_AS(make_context(moved, vlist, 0, 13, 1, 12), TransferError);
  CHECK_NOTHROW(mirror_star_context(12));
}

TEST_CASE("leave_behind_options formula") {
  CHECK(leave_behind_options(1, 2, 3, 5) == std::set<long>{1, 3, 5});
  CHECK(leave_behind_options(1, 2, 1, 4) == std::set<long>{0, 2, 4});
  CHECK(leave_behind_options(0, 1, 2, 6) == std::set<long>{1, 3, 5});
  CHECK_THROWS_AS(leave_behind_options(1, 2, 4, 5), TransferError);  // parity of i_next
  auto ctx = star_context(10);
  CHECK(leave_behind_options(ctx, 0, 1, 2, 6) == std::set<long>{1, 3, 5});
  CHECK_THROWS_AS(leave_behind_options(ctx, 0, 1, 99, 6), TransferError);
}

TEST_CASE("leave-behind options match exhaustive first-move enumeration") {
  // On the star context, the first transfer v1 -> v_{i2} realizes exactly the
  // formula's leave amounts (the run trims symmetrically); the vacuous
  // l = available case is the empty-interval solution of the sum condition.
  for (int n : {8, 9, 12}) {
    auto ctx = star_context(n);
    for (int i2 = 2; i2 <= std::min(8, ctx.m()); i2 += 2) {
      long sigma = ctx.label_at(1) + ctx.label_at(i2);
      std::set<long> realized;
      for (long size = n; size >= 0; --size) {
        if ((sigma - size + 1) % 2 != 0) continue;
        long lo = (sigma - size + 1) / 2, hi = lo + size - 1;
        if (size > 0 && (lo < ctx.c || hi > ctx.d)) continue;
        realized.insert(n - size);
      }
      CHECK(realized == leave_behind_options(0, 1, i2, n));
    }
  }
}

TEST_CASE("order of leaves: legal first transfers leave the first-listed") {
  auto ctx = star_context(12);
  CHECK(check_leaf_order(ctx, TransferStep::type1(0, 12, {2, 10})));
  for (LabelRun run : legal_type1_moves(ctx.state, 0, 12))
    CHECK(check_leaf_order(ctx, TransferStep::type1(0, 12, run)));

  // Context after the first transfer: v0 (label b = 0) exists; moving the
  // whole run to it leaves zero pool leaves behind, vacuously in order.
  LabeledState s = apply_type1(star_state(12), 0, 12, {2, 10});
  std::vector<int> vlist;
  for (int pos = 1; pos <= 11; ++pos)
    vlist.push_back(pos % 2 == 1 ? 12 - (pos - 1) / 2 : pos / 2);
  auto ctx2 = make_context(s, vlist, 12, 0, 2, 10);
  CHECK(check_leaf_order(ctx2, TransferStep::type1(12, 0, {2, 10})));
  for (LabelRun run : legal_type1_moves(ctx2.state, 12, 1))
    CHECK(check_leaf_order(ctx2, TransferStep::type1(12, 1, run)));
  for (LabelRun run : legal_type1_moves(ctx2.state, 12, 0))
    CHECK(check_leaf_order(ctx2, TransferStep::type1(12, 0, run)));

  // Mirrored labeling: same guarantee.
  auto mctx = mirror_star_context(12);
  for (LabelRun run : legal_type1_moves(mctx.state, 12, 0))
    CHECK(check_leaf_order(mctx, TransferStep::type1(12, 0, run)));
}

TEST_CASE("gracefulness is preserved along random legal chains") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 10);
    LabeledState s = star_state(n);
    int u = 0;
    std::vector<int> order;
    for (int pos = 2; pos <= n + 1; ++pos)
      order.push_back(pos % 2 == 0 ? n + 1 - pos / 2 : (pos - 1) / 2);
    for (int v : order) {
      auto runs = legal_type1_moves(s, u, v);
      if (runs.empty()) break;
      LabelRun run = runs[rng() % std::min<std::size_t>(runs.size(), 3)];
      s = apply_type1(s, u, v, run);
      CHECK(verify_graceful(s.tree, s.f).graceful);
      u = v;
    }
  }
}

TEST_CASE("adjacent-label sums alternate along the standard chain") {
  auto ctx = star_context(12);
  long k = ctx.a + ctx.b;
  TransferScript script = star12_script();
  std::set<long> sums;
  for (const auto& st : script) sums.insert(st.from + st.to);
  for (long s : sums) CHECK((s == k - 1 || s == k || s == k + 1));

  auto mctx = mirror_star_context(12);
  long km = mctx.a + mctx.b;
  LabeledState s = mctx.state;
  int u = 12;
  for (int pos = 2; pos <= 6; ++pos) {
    int v = static_cast<int>(mctx.label_at(pos));
    auto runs = legal_type1_moves(s, u, v);
    REQUIRE(!runs.empty());
    CHECK((u + v == km - 1 || u + v == km || u + v == km + 1));
    s = apply_type1(s, u, v, runs[1 % runs.size()]);
    u = v;
  }
}
