#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mg/derivation.hpp"
#include "mg/lambda.hpp"
#include "mg/lexicon.hpp"

namespace mg {

// Readiness of an expression: 1 when it has no unchecked features and no
// pending chains left to place.
int feat(const Expression& e);

// Readiness of a structure-building step: 1 when either operand is
// finished, i.e. sem(x, y) = max(feat(x), feat(y)).  Composition evaluates
// it on the two operand states left after the step consumes its features
// (for a move, on the landing chain and the remainder).
int sem(const Expression& x, const Expression& y);

// One stage of the staged composition, mirroring the derivation tree.
struct SemanticNode;
using SemanticNodePtr = std::shared_ptr<const SemanticNode>;
struct SemanticNode {
  std::string label;       // human-readable stage summary
  std::string direction;   // "<" head-left merge, ">" head-right, "unary"
  bool fired = false;      // a fold ran at this node
  std::vector<TermPtr> pending;  // terms still waiting to combine
  std::vector<SemanticNodePtr> children;
};

struct ComposeOptions {
  // Diagnostic mode: fold at every node instead of waiting for readiness.
  bool immediate_application = false;
};

struct Composition {
  SemanticNodePtr root;
  TermPtr formula;  // identity when no leaf contributed content
  std::set<std::string> free_variables;
};

// Folds the leaf terms of a derivation bottom-up.  Terms accumulate in
// pending lists until a step is ready (sem = 1: a merge completing one
// side, or a move landing a chain); a ready step folds its list by
// beta-applying terms pairwise, deferring terms neither side can consume
// yet.  Placeholder variables are renamed fresh (Y, Y1, ...) in leaf
// order.  Throws ComposeError when an application could fire both ways
// with different results, when a ready step with several terms can apply
// none of them, or when more than one term survives at the root.
Composition compose(const DerivationTreePtr& d, const Lexicon& lex,
                    const ComposeOptions& options = {});

}  // namespace mg
