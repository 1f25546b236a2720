#include <algorithm>
#include <deque>

#include "gracetree/construct.hpp"

// plan_depth3: the minimal / irreducible m_i-tuple tables for the two
// depth-3 labelers.  Each template arranges tuple entries and emits the
// matching catalog blocks.  The tables' dots ("inserts") become spare odds
// as (o) blocks and spare evens in groups of four as even-run blocks; runs
// of even entries that straddle tuples are emitted slot by slot, with zeros
// placed only at the two middle (e/0) slots of a group or at the final slot
// of the closing stub.

namespace gracetree {

std::string tuple_class_name(TupleClassRep r) {
  switch (r) {
    case TupleClassRep::C01: return "0/1";
    case TupleClassRep::C13: return "1/3";
    case TupleClassRep::C23: return "2/3";
    case TupleClassRep::C35: return "3/5";
    case TupleClassRep::C33: return "3/3";
    case TupleClassRep::C11: return "1/1";
  }
  return "?";
}

TupleClass classify_tuple(const std::vector<long>& tuple, TupleVariant variant) {
  TupleClass out;
  out.length = static_cast<int>(tuple.size());
  for (long v : tuple) {
    if (v < 0) throw ClassError("negative tuple entry");
    if (v % 2 == 0) ++out.even_count;
  }
  const int a = out.even_count, b = out.length;
  if (b % 2 == 0) throw ClassError("tuple length must be odd");
  if (variant == TupleVariant::A) {
    if (a == b)
      out.rep = TupleClassRep::C11;
    else
      switch (a % 4) {
        case 0: out.rep = TupleClassRep::C01; break;
        case 1: out.rep = TupleClassRep::C13; break;
        case 2: out.rep = TupleClassRep::C23; break;
        default: out.rep = TupleClassRep::C35; break;
      }
  } else {
    switch (a % 4) {
      case 0: out.rep = TupleClassRep::C01; break;
      case 1: out.rep = (a < b) ? TupleClassRep::C13 : TupleClassRep::C11; break;
      case 2: out.rep = TupleClassRep::C23; break;
      default: out.rep = TupleClassRep::C33; break;
    }
  }
  return out;
}

namespace {

struct TupleRes {
  int orig = 0;
  TupleClass cls;
  std::deque<long> evens;  // positive evens, descending
  int zeros = 0;
  std::deque<long> odds;  // descending
  std::vector<long> out;

  int evens_left() const { return static_cast<int>(evens.size()) + zeros; }
  int odds_left() const { return static_cast<int>(odds.size()); }
};

struct PlanBuilder {
  std::vector<TupleRes*> order;
  std::vector<Block> blocks;
  std::vector<TupleRes*> trail;  // one owner per deferred trailing slot

  void begin(TupleRes* t) {
    if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
  }
  long draw_odd(TupleRes* t) {
    begin(t);
    if (t->odds.empty()) throw ClassError("internal: template short of odd entries");
    long v = t->odds.front();
    t->odds.pop_front();
    t->out.push_back(v);
    return v;
  }
  long draw_even(TupleRes* t) {
    begin(t);
    if (t->evens.empty()) throw ClassError("internal: template short of positive even entries");
    long v = t->evens.front();
    t->evens.pop_front();
    t->out.push_back(v);
    return v;
  }
  long draw_even0(TupleRes* t) {
    begin(t);
    if (t->zeros > 0) {
      --t->zeros;
      t->out.push_back(0);
      return 0;
    }
    return draw_even(t);
  }

  void o_block(TupleRes* t) { blocks.push_back({RowKind::NicelyO, {draw_odd(t)}}); }

  // All-even slot stream in groups of four: (e, e/0, e/0, e) each.
  void even_span(const std::vector<TupleRes*>& slots) {
    if (slots.size() % 4 != 0)
      throw ClassError("internal: even span length not a multiple of four");
    for (std::size_t i = 0; i < slots.size(); i += 4) {
      CountSeq g;
      g.push_back(draw_even(slots[i]));
      g.push_back(draw_even0(slots[i + 1]));
      g.push_back(draw_even0(slots[i + 2]));
      g.push_back(draw_even(slots[i + 3]));
      blocks.push_back({RowKind::NicelyEvenRun, g});
    }
  }

  // Spare entries of a tuple at a template's dots.
  void inserts(TupleRes* t, int keep_evens, int keep_odds) {
    while (t->evens_left() - keep_evens >= 4) even_span({t, t, t, t});
    while (t->odds_left() > keep_odds) o_block(t);
  }

  void defer(TupleRes* t, int slots) {
    for (int i = 0; i < slots; ++i) trail.push_back(t);
  }
  void defer_all(TupleRes* t) {
    begin(t);
    defer(t, t->evens_left());
  }

  // Deferred trailing evens: groups of four, then an attainable stub; a zero
  // may sit only at the stub's final slot (it becomes a trailing-zero block).
  void emit_trailing() {
    const std::size_t n = trail.size();
    const std::size_t stub = n % 4;
    even_span({trail.begin(), trail.begin() + static_cast<long>(n - stub)});
    if (stub == 0) {
      trail.clear();
      return;
    }
    CountSeq vals;
    for (std::size_t i = n - stub; i < n; ++i)
      vals.push_back(i + 1 == n ? draw_even0(trail[i]) : draw_even(trail[i]));
    CountSeq zeros;
    while (!vals.empty() && vals.back() == 0) {
      zeros.push_back(0);
      vals.pop_back();
    }
    if (!vals.empty()) blocks.push_back({RowKind::TailEvens, vals});
    if (!zeros.empty()) blocks.push_back({RowKind::TailZeros, zeros});
    trail.clear();
  }
};

struct Buckets {
  std::deque<TupleRes*> c01, c13, c23, c35, c33, c11;

  std::deque<TupleRes*>& of(TupleClassRep r) {
    switch (r) {
      case TupleClassRep::C01: return c01;
      case TupleClassRep::C13: return c13;
      case TupleClassRep::C23: return c23;
      case TupleClassRep::C35: return c35;
      case TupleClassRep::C33: return c33;
      case TupleClassRep::C11: return c11;
    }
    return c01;
  }
  TupleRes* pop(std::deque<TupleRes*>& q) {
    TupleRes* t = q.front();
    q.pop_front();
    return t;
  }
};

// ---------------- variant A ----------------

void a_min_01(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 0, 1);
  pb.o_block(t);
}

void a_min_1313(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 1, 2);
  pb.blocks.push_back({RowKind::NicelyEOOOE,
                       {pb.draw_even(t1), pb.draw_odd(t1), pb.draw_odd(t1), pb.draw_odd(t2),
                        pb.draw_even(t2)}});
  pb.inserts(t2, 0, 1);
  pb.o_block(t2);
}

void a_min_1335(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 1, 2);
  pb.o_block(t1);
  pb.o_block(t1);
  pb.even_span({t1, t2, t2, t2});
  pb.inserts(t2, 0, 2);
  pb.o_block(t2);
  pb.o_block(t2);
}

void a_min_2323(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 2, 1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t2, t2});
  pb.inserts(t2, 0, 1);
  pb.o_block(t2);
}

void a_min_233535(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3) {
  pb.inserts(t1, 2, 1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t2, t2});
  pb.inserts(t2, 1, 2);
  pb.o_block(t2);
  pb.o_block(t2);
  pb.even_span({t2, t3, t3, t3});
  pb.inserts(t3, 0, 2);
  pb.o_block(t3);
  pb.o_block(t3);
}

void a_min_35x4(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3, TupleRes* t4) {
  pb.inserts(t1, 3, 2);
  pb.o_block(t1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 2);
  pb.o_block(t2);
  pb.o_block(t2);
  pb.even_span({t2, t2, t3, t3});
  pb.inserts(t3, 1, 2);
  pb.o_block(t3);
  pb.o_block(t3);
  pb.even_span({t3, t4, t4, t4});
  pb.inserts(t4, 0, 2);
  pb.o_block(t4);
  pb.o_block(t4);
}

void a_irr_13(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 1, 2);
  pb.o_block(t);
  pb.o_block(t);
  pb.defer(t, 1);
}

void a_irr_23(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 2, 1);
  pb.o_block(t);
  pb.defer(t, 2);
}

void a_irr_35(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 3, 2);
  pb.o_block(t);
  pb.o_block(t);
  pb.defer(t, 3);
}

void a_irr_1323(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 1, 2);
  pb.blocks.push_back({RowKind::NicelyEOOOE,
                       {pb.draw_even(t1), pb.draw_odd(t1), pb.draw_odd(t1), pb.draw_odd(t2),
                        pb.draw_even(t2)}});
  pb.inserts(t2, 1, 0);
  pb.defer(t2, 1);
}

void a_irr_2335(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 2, 1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t2, t2});
  pb.inserts(t2, 1, 2);
  pb.o_block(t2);
  pb.o_block(t2);
  pb.defer(t2, 1);
}

void a_irr_3535(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 3, 2);
  pb.o_block(t1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 2);
  pb.o_block(t2);
  pb.o_block(t2);
  pb.defer(t2, 2);
}

void a_irr_353535(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3) {
  pb.inserts(t1, 3, 2);
  pb.o_block(t1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 2);
  pb.o_block(t2);
  pb.o_block(t2);
  pb.even_span({t2, t2, t3, t3});
  pb.inserts(t3, 1, 2);
  pb.o_block(t3);
  pb.o_block(t3);
  pb.defer(t3, 1);
}

void plan_variant_a(PlanBuilder& pb, Buckets& bk) {
  while (!bk.c01.empty()) a_min_01(pb, bk.pop(bk.c01));
  while (bk.c13.size() >= 2) a_min_1313(pb, bk.pop(bk.c13), bk.pop(bk.c13));
  while (bk.c23.size() >= 2) a_min_2323(pb, bk.pop(bk.c23), bk.pop(bk.c23));
  while (bk.c35.size() >= 4)
    a_min_35x4(pb, bk.pop(bk.c35), bk.pop(bk.c35), bk.pop(bk.c35), bk.pop(bk.c35));
  if (bk.c13.size() == 1 && !bk.c35.empty()) a_min_1335(pb, bk.pop(bk.c13), bk.pop(bk.c35));
  if (bk.c23.size() == 1 && bk.c35.size() >= 2)
    a_min_233535(pb, bk.pop(bk.c23), bk.pop(bk.c35), bk.pop(bk.c35));

  const std::size_t n13 = bk.c13.size(), n23 = bk.c23.size(), n35 = bk.c35.size();
  if (n13 == 0 && n23 == 0 && n35 == 0) {
  } else if (n13 == 1 && n23 == 0 && n35 == 0) {
    a_irr_13(pb, bk.pop(bk.c13));
  } else if (n13 == 0 && n23 == 1 && n35 == 0) {
    a_irr_23(pb, bk.pop(bk.c23));
  } else if (n13 == 0 && n23 == 0 && n35 == 1) {
    a_irr_35(pb, bk.pop(bk.c35));
  } else if (n13 == 1 && n23 == 1 && n35 == 0) {
    a_irr_1323(pb, bk.pop(bk.c13), bk.pop(bk.c23));
  } else if (n13 == 0 && n23 == 1 && n35 == 1) {
    a_irr_2335(pb, bk.pop(bk.c23), bk.pop(bk.c35));
  } else if (n13 == 0 && n23 == 0 && n35 == 2) {
    a_irr_3535(pb, bk.pop(bk.c35), bk.pop(bk.c35));
  } else if (n13 == 0 && n23 == 0 && n35 == 3) {
    a_irr_353535(pb, bk.pop(bk.c35), bk.pop(bk.c35), bk.pop(bk.c35));
  } else {
    throw ClassError("internal: remainder is not an irreducible list");
  }
  while (!bk.c11.empty()) pb.defer_all(bk.pop(bk.c11));
  pb.emit_trailing();
}

// ---------------- variant B ----------------

void b_min_1333(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 1, 2);
  pb.o_block(t1);
  pb.o_block(t1);
  pb.even_span({t1, t2, t2, t2});
  pb.inserts(t2, 0, 0);
}

void b_min_2323(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 2, 1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t2, t2});
  pb.inserts(t2, 0, 1);
  pb.o_block(t2);
}

void b_min_3311(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 3, 0);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 0, 0);
}

void b_min_132311(PlanBuilder& pb, TupleRes* t13, TupleRes* t11, TupleRes* t23) {
  pb.inserts(t13, 1, 2);
  pb.o_block(t13);
  pb.o_block(t13);
  std::vector<TupleRes*> span{t13};
  for (int i = 0; i < t11->evens_left(); ++i) span.push_back(t11);
  span.push_back(t23);
  span.push_back(t23);
  pb.even_span(span);
  pb.inserts(t23, 0, 1);
  pb.o_block(t23);
}

void b_min_233333(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3) {
  pb.inserts(t1, 2, 1);
  pb.o_block(t1);
  pb.even_span({t1, t1, t2, t2});
  pb.inserts(t2, 1, 0);
  pb.even_span({t2, t3, t3, t3});
  pb.inserts(t3, 0, 0);
}

void b_min_231111(PlanBuilder& pb, TupleRes* t23, TupleRes* a, TupleRes* b) {
  pb.inserts(t23, 2, 1);
  pb.o_block(t23);
  std::vector<TupleRes*> span{t23, t23};
  for (int i = 0; i < a->evens_left(); ++i) span.push_back(a);
  for (int i = 0; i < b->evens_left(); ++i) span.push_back(b);
  pb.even_span(span);
}

void b_min_33x4(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3, TupleRes* t4) {
  pb.inserts(t1, 3, 0);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 0);
  pb.even_span({t2, t2, t3, t3});
  pb.inserts(t3, 1, 0);
  pb.even_span({t3, t4, t4, t4});
  pb.inserts(t4, 0, 0);
}

void b_min_13111111(PlanBuilder& pb, TupleRes* t13, TupleRes* a, TupleRes* b, TupleRes* c) {
  pb.inserts(t13, 1, 2);
  pb.o_block(t13);
  pb.o_block(t13);
  std::vector<TupleRes*> span{t13};
  for (TupleRes* t : {a, b, c})
    for (int i = 0; i < t->evens_left(); ++i) span.push_back(t);
  pb.even_span(span);
}

void b_min_11x4(PlanBuilder& pb, TupleRes* a, TupleRes* b, TupleRes* c, TupleRes* d) {
  std::vector<TupleRes*> span;
  for (TupleRes* t : {a, b, c, d})
    for (int i = 0; i < t->evens_left(); ++i) span.push_back(t);
  pb.even_span(span);
}

void b_irr_13(PlanBuilder& pb, TupleRes* t) { a_irr_13(pb, t); }

void b_irr_23(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 2, 1);
  pb.o_block(t);
  pb.defer(t, 2);
}

void b_irr_33(PlanBuilder& pb, TupleRes* t) {
  pb.inserts(t, 3, 0);
  pb.defer(t, 3);
}

void b_irr_1323(PlanBuilder& pb, TupleRes* t13, TupleRes* t23) {
  pb.inserts(t13, 1, 2);
  pb.blocks.push_back({RowKind::NicelyEOOOE,
                       {pb.draw_even(t13), pb.draw_odd(t13), pb.draw_odd(t13), pb.draw_odd(t23),
                        pb.draw_even(t23)}});
  pb.inserts(t23, 1, 0);
  pb.defer(t23, 1);
}

void b_irr_1311(PlanBuilder& pb, TupleRes* t13, TupleRes* t11) {
  pb.inserts(t13, 1, 2);
  pb.o_block(t13);
  pb.o_block(t13);
  pb.defer(t13, 1);
  pb.defer_all(t11);
}

void b_irr_2333(PlanBuilder& pb, TupleRes* t23, TupleRes* t33) {
  pb.inserts(t23, 2, 1);
  pb.o_block(t23);
  pb.even_span({t23, t23, t33, t33});
  pb.inserts(t33, 1, 0);
  pb.defer(t33, 1);
}

void b_irr_3333(PlanBuilder& pb, TupleRes* t1, TupleRes* t2) {
  pb.inserts(t1, 3, 0);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 0);
  pb.defer(t2, 2);
}

void b_irr_333333(PlanBuilder& pb, TupleRes* t1, TupleRes* t2, TupleRes* t3) {
  pb.inserts(t1, 3, 0);
  pb.even_span({t1, t1, t1, t2});
  pb.inserts(t2, 2, 0);
  pb.even_span({t2, t2, t3, t3});
  pb.inserts(t3, 1, 0);
  pb.defer(t3, 1);
}

void b_irr_131111(PlanBuilder& pb, TupleRes* t13, TupleRes* a, TupleRes* b) {
  pb.inserts(t13, 1, 2);
  pb.o_block(t13);
  pb.o_block(t13);
  pb.defer(t13, 1);
  pb.defer_all(a);
  pb.defer_all(b);
}

// The (2/3, 1/1) family: the exact pair goes through the (e, e/0, e, o)
// attainable row; bigger pairs reduce to one of (2/3, 5/5), (2/5, 1/1),
// (6/7, 1/1).
void b_irr_2311(PlanBuilder& pb, TupleRes* t23, TupleRes* t11) {
  const int a = t23->cls.even_count, b = t23->cls.length, ap = t11->cls.even_count;
  if (a == 2 && b == 3 && ap == 1) {
    pb.blocks.push_back({RowKind::TailEE0EO,
                         {pb.draw_even(t11), pb.draw_even0(t23), pb.draw_even(t23),
                          pb.draw_odd(t23)}});
    return;
  }
  if (ap >= 5) {  // (2/3, 5/5)
    pb.inserts(t23, 2, 1);
    pb.o_block(t23);
    pb.even_span({t23, t23, t11, t11});
    pb.inserts(t11, 3, 0);
    pb.defer(t11, 3);
    return;
  }
  if (b - a >= 3) {  // (2/5, 1/1)
    pb.begin(t11);
    pb.inserts(t11, 1, 0);
    pb.blocks.push_back({RowKind::NicelyEOOOE,
                         {pb.draw_even(t11), pb.draw_odd(t23), pb.draw_odd(t23),
                          pb.draw_odd(t23), pb.draw_even(t23)}});
    pb.inserts(t23, 1, 0);
    pb.defer(t23, 1);
    return;
  }
  // (6/7, 1/1): a >= 6, exactly one odd entry, a' = 1
  pb.inserts(t23, 6, 1);
  pb.o_block(t23);
  pb.even_span({t23, t23, t23, t23});
  pb.defer(t23, 2);
  pb.defer_all(t11);
}

void plan_variant_b(PlanBuilder& pb, Buckets& bk) {
  while (!bk.c01.empty()) a_min_01(pb, bk.pop(bk.c01));
  while (bk.c13.size() >= 2) a_min_1313(pb, bk.pop(bk.c13), bk.pop(bk.c13));
  while (bk.c23.size() >= 2) b_min_2323(pb, bk.pop(bk.c23), bk.pop(bk.c23));
  while (bk.c33.size() >= 4)
    b_min_33x4(pb, bk.pop(bk.c33), bk.pop(bk.c33), bk.pop(bk.c33), bk.pop(bk.c33));
  while (bk.c11.size() >= 4)
    b_min_11x4(pb, bk.pop(bk.c11), bk.pop(bk.c11), bk.pop(bk.c11), bk.pop(bk.c11));
  if (bk.c13.size() == 1 && !bk.c33.empty()) b_min_1333(pb, bk.pop(bk.c13), bk.pop(bk.c33));
  if (bk.c13.size() == 1 && bk.c23.size() == 1 && !bk.c11.empty())
    b_min_132311(pb, bk.pop(bk.c13), bk.pop(bk.c11), bk.pop(bk.c23));
  if (bk.c13.size() == 1 && bk.c11.size() == 3)
    b_min_13111111(pb, bk.pop(bk.c13), bk.pop(bk.c11), bk.pop(bk.c11), bk.pop(bk.c11));
  if (bk.c23.size() == 1 && bk.c33.size() >= 2)
    b_min_233333(pb, bk.pop(bk.c23), bk.pop(bk.c33), bk.pop(bk.c33));
  if (bk.c23.size() == 1 && bk.c11.size() >= 2)
    b_min_231111(pb, bk.pop(bk.c23), bk.pop(bk.c11), bk.pop(bk.c11));
  while (!bk.c33.empty() && !bk.c11.empty()) b_min_3311(pb, bk.pop(bk.c33), bk.pop(bk.c11));

  const std::size_t n13 = bk.c13.size(), n23 = bk.c23.size(), n33 = bk.c33.size(),
                    n11 = bk.c11.size();
  auto is = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return n13 == a && n23 == b && n33 == c && n11 == d;
  };
  if (is(0, 0, 0, 0)) {
  } else if (is(1, 0, 0, 0)) {
    b_irr_13(pb, bk.pop(bk.c13));
  } else if (is(0, 1, 0, 0)) {
    b_irr_23(pb, bk.pop(bk.c23));
  } else if (is(0, 0, 1, 0)) {
    b_irr_33(pb, bk.pop(bk.c33));
  } else if (is(0, 0, 0, 1)) {
    pb.defer_all(bk.pop(bk.c11));
  } else if (is(1, 1, 0, 0)) {
    b_irr_1323(pb, bk.pop(bk.c13), bk.pop(bk.c23));
  } else if (is(1, 0, 0, 1)) {
    b_irr_1311(pb, bk.pop(bk.c13), bk.pop(bk.c11));
  } else if (is(0, 1, 1, 0)) {
    b_irr_2333(pb, bk.pop(bk.c23), bk.pop(bk.c33));
  } else if (is(0, 1, 0, 1)) {
    b_irr_2311(pb, bk.pop(bk.c23), bk.pop(bk.c11));
  } else if (is(0, 0, 2, 0)) {
    b_irr_3333(pb, bk.pop(bk.c33), bk.pop(bk.c33));
  } else if (is(0, 0, 0, 2)) {
    pb.defer_all(bk.pop(bk.c11));
    pb.defer_all(bk.pop(bk.c11));
  } else if (is(1, 0, 0, 2)) {
    b_irr_131111(pb, bk.pop(bk.c13), bk.pop(bk.c11), bk.pop(bk.c11));
  } else if (is(0, 0, 3, 0)) {
    b_irr_333333(pb, bk.pop(bk.c33), bk.pop(bk.c33), bk.pop(bk.c33));
  } else if (is(0, 0, 0, 3)) {
    pb.defer_all(bk.pop(bk.c11));
    pb.defer_all(bk.pop(bk.c11));
    pb.defer_all(bk.pop(bk.c11));
  } else {
    throw ClassError("internal: remainder is not an irreducible list");
  }
  pb.emit_trailing();
}

}  // namespace

Depth3Plan plan_depth3(const std::vector<std::vector<long>>& tuples, TupleVariant variant) {
  std::vector<TupleRes> res(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    TupleRes& t = res[i];
    t.orig = static_cast<int>(i);
    t.cls = classify_tuple(tuples[i], variant);
    std::vector<long> evens, odds;
    for (long v : tuples[i]) {
      if (v == 0)
        ++t.zeros;
      else if (v % 2 == 0)
        evens.push_back(v);
      else
        odds.push_back(v);
    }
    std::sort(evens.rbegin(), evens.rend());
    std::sort(odds.rbegin(), odds.rend());
    t.evens.assign(evens.begin(), evens.end());
    t.odds.assign(odds.begin(), odds.end());
    if (variant == TupleVariant::A && t.zeros > 0)
      throw ClassError("variant A admits no zero entries");
    if (t.zeros > 1) throw ClassError("two zero entries in one tuple (sibling leaves)");
    if (t.zeros == 1 && t.cls.even_count < 2)
      throw ClassError("a zero entry needs a positive even sibling");
  }
  Buckets bk;
  for (auto& t : res) bk.of(t.cls.rep).push_back(&t);
  PlanBuilder pb;
  if (variant == TupleVariant::A)
    plan_variant_a(pb, bk);
  else
    plan_variant_b(pb, bk);

  Depth3Plan out;
  for (TupleRes* t : pb.order) {
    if (t->evens_left() != 0 || t->odds_left() != 0)
      throw ClassError("internal: template left tuple entries unused");
    out.tuple_order.push_back(t->orig);
    out.tuples.push_back(t->out);
    out.flat.insert(out.flat.end(), t->out.begin(), t->out.end());
  }
  if (pb.order.size() != tuples.size())
    throw ClassError("internal: template dropped a tuple");
  out.plan.blocks = std::move(pb.blocks);
  if (out.plan.flatten() != out.flat)
    throw ClassError("internal: block plan does not cover the arranged sequence");
  return out;
}

}  // namespace gracetree
