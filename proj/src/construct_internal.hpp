#pragma once

#include "gracetree/construct.hpp"

namespace gracetree {
namespace detail {

struct ArrangedTree {
  TreeExpr expr;
  CountSeq flat;
  Ending final_state = Ending::None;
};

ArrangedTree arrange_for_labeling(const TreeExpr& rep_expr, EndingVariant variant);

BlockPlan segment_endings(const CountSeq& flat, EndingVariant variant);

}  // namespace detail
}  // namespace gracetree
