#pragma once

#include <string>
#include <utility>

#include "gracetree/construct.hpp"
#include "gracetree/transfer.hpp"
#include "gracetree/tree.hpp"

namespace gracetree {

// {"vertices":[{"id":k,"label":l,"parent":p|null}]}
std::string to_json(const RootedTree& t, const Labeling& f);
std::string to_json(const LabeledState& s);
std::pair<RootedTree, Labeling> from_json(const std::string& text);

// Undirected DOT with labels as node names and induced labels on edges.
std::string to_dot(const RootedTree& t, const Labeling& f);

// Transfer-script DSL, one step per line:
//   U->V: K..K+M            type-1
//   U->V: K..K+M, L..L+M    type-2
// '#' starts a comment.
std::string format_script(const TransferScript& script);
TransferScript parse_script(const std::string& text);

// Script plus a replayable header (star size, arranged expression).
std::string format_trace(const ConstructionTrace& trace);

}  // namespace gracetree
