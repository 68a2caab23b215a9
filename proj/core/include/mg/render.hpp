#pragma once

#include <string>

#include "mg/derivation.hpp"
#include "mg/lambda.hpp"

namespace mg {

// JSON export: one object per node with keys
//   leaf   {node, item, phon, features}
//   merge  {node, variant, argBecameMover, features, children[2]}
//   move   {node, strength, base, features, children[1]}
// `features` is the remainder after the node's step; 2-space indent, UTF-8.
std::string to_json(const DerivationTreePtr& tree);

// JSON export of a term: {kind: var|const|abs|app} with name/arity for
// atoms, var+body for abstractions, fn+arg for applications.
std::string to_json(const TermPtr& term);

// Graphviz digraph, nodes numbered preorder.
std::string to_dot(const DerivationTreePtr& tree);

// LaTeX qtree source (\Tree [.{label} ... ]).
std::string to_qtree(const DerivationTreePtr& tree);

}  // namespace mg
