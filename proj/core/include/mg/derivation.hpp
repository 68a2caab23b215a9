#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mg/expression.hpp"

namespace mg {

// Why a structure-building step could not apply.  Category mismatches are
// ordinary dead ends; SMC violations are counted separately by the parser.
enum class RuleFailure {
  CategoryMismatch,  // selector/category bases differ, or wrong feature kind
  SmcViolation,      // two chains would compete for the same licensee base
  MoveNoMatch,       // licensor has no chain to attract
};

using RuleResult = std::variant<Expression, RuleFailure>;

// How the argument's phonology was placed.
enum class MergeVariant {
  Complement,        // lexical selector, argument to the right
  Specifier,         // derived selector, argument to the left
  IncorporateLeft,   // =>x : argument head prefixes the selector head
  IncorporateRight,  // x<= : argument head suffixes the selector head
};

// merge consumes sel's leading selector and arg's leading category (same
// base).  If arg still has licensees it becomes a mover chain and a slot is
// left at its merge position.  move consumes a leading licensor together
// with the matching chain's leading licensee; the chain lands (strong: as a
// new specifier; weak: in its slot) once its features are exhausted and is
// otherwise retained.
RuleResult merge(const Expression& sel, const Expression& arg);
RuleResult move(const Expression& e);

struct DerivationNode;
using DerivationTreePtr = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  enum class Kind { Leaf, Merge, Move };
  Kind kind = Kind::Leaf;

  const LexicalItem* item = nullptr;  // Leaf

  DerivationTreePtr left, right;  // Merge: selector side, argument side
  MergeVariant variant = MergeVariant::Complement;
  bool arg_became_mover = false;

  DerivationTreePtr child;  // Move
  Strength strength = Strength::Strong;
  std::string base;

  Expression expr;  // result of this step

  std::size_t leaves = 1;
  std::size_t epsilon_leaves = 0;
};

DerivationTreePtr leaf(const LexicalItem& item);
std::variant<DerivationTreePtr, RuleFailure> merge_trees(
    const DerivationTreePtr& sel, const DerivationTreePtr& arg);
std::variant<DerivationTreePtr, RuleFailure> move_tree(
    const DerivationTreePtr& child);

// Surface tokens of the tree's root expression.
std::vector<std::string> yield_of(const DerivationTreePtr& tree);

// Compact canonical string for a tree: total order on derivations and
// dedup key during search.
std::string derivation_key(const DerivationTreePtr& tree);

// Total number of unchecked features (head + movers) of an expression.
std::size_t feature_count(const Expression& e);

}  // namespace mg
