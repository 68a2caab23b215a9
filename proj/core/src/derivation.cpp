#include "mg/derivation.hpp"

#include <algorithm>
#include <sstream>

namespace mg {

namespace {

PhonSeq concat(PhonSeq a, const PhonSeq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void sort_movers(std::vector<Chain>& movers) {
  std::sort(movers.begin(), movers.end(),
            [](const Chain& a, const Chain& b) { return a.id < b.id; });
}

// Replaces the unique slot `id` (if present) by `repl` within one sequence.
bool splice_slot(PhonSeq& seq, std::uint64_t id, const PhonSeq& repl) {
  for (auto it = seq.begin(); it != seq.end(); ++it) {
    if (it->is_slot() && it->slot == id) {
      it = seq.erase(it);
      seq.insert(it, repl.begin(), repl.end());
      return true;
    }
  }
  return false;
}

void splice_slot_everywhere(Expression& e, std::uint64_t id,
                            const PhonSeq& repl) {
  if (splice_slot(e.spec, id, repl)) return;
  if (splice_slot(e.head, id, repl)) return;
  if (splice_slot(e.comp, id, repl)) return;
  for (auto& m : e.movers)
    if (splice_slot(m.phon, id, repl)) return;
}

}  // namespace

RuleResult merge(const Expression& sel, const Expression& arg) {
  if (sel.features.empty() || arg.features.empty())
    return RuleFailure::CategoryMismatch;
  const Feature& s = sel.features.front();
  const Feature& a = arg.features.front();
  if (s.kind != FeatureKind::Sel || a.kind != FeatureKind::Cat ||
      s.base != a.base)
    return RuleFailure::CategoryMismatch;

  std::vector<Feature> arg_rest(arg.features.begin() + 1, arg.features.end());
  const bool as_mover = !arg_rest.empty();

  Expression r;
  r.features.assign(sel.features.begin() + 1, sel.features.end());
  r.lexical = false;
  r.head_item = sel.head_item;
  r.movers = sel.movers;
  r.movers.insert(r.movers.end(), arg.movers.begin(), arg.movers.end());

  // Head formation and what is left of the argument's own material.
  PhonSeq leftover;
  switch (s.headmove) {
    case HeadMove::Left:  // =>x : argument head prefixes the selecting head
      r.head = concat(arg.head, sel.head);
      leftover = concat(arg.spec, arg.comp);
      break;
    case HeadMove::Right:  // x<= : argument head suffixes the selecting head
      r.head = concat(sel.head, arg.head);
      leftover = concat(arg.spec, arg.comp);
      break;
    case HeadMove::None:
      r.head = sel.head;
      leftover = concat(concat(arg.spec, arg.head), arg.comp);
      break;
  }

  PhonSeq placed;
  if (as_mover) {
    Chain chain{next_chain_id(), std::move(leftover), std::move(arg_rest)};
    placed.push_back(Segment{{}, chain.id});
    r.movers.push_back(std::move(chain));
  } else {
    placed = std::move(leftover);
  }
  if (!smc_admissible(r.movers)) return RuleFailure::SmcViolation;
  sort_movers(r.movers);

  if (s.headmove != HeadMove::None) {
    // Incorporation: the argument's remainder joins the complement.
    r.spec = sel.spec;
    r.comp = concat(sel.comp, placed);
  } else if (sel.lexical) {
    r.spec = sel.spec;
    r.comp = std::move(placed);
  } else {
    r.spec = concat(std::move(placed), sel.spec);
    r.comp = sel.comp;
  }
  return r;
}

RuleResult move(const Expression& e) {
  if (e.features.empty() || e.features.front().kind != FeatureKind::LicPlus)
    return RuleFailure::MoveNoMatch;
  const Feature& f = e.features.front();

  std::size_t idx = e.movers.size();
  for (std::size_t i = 0; i < e.movers.size(); ++i) {
    if (e.movers[i].features.front().base == f.base) {
      idx = i;
      break;  // SMC guarantees at most one match
    }
  }
  if (idx == e.movers.size()) return RuleFailure::MoveNoMatch;

  Expression r = e;
  r.features.erase(r.features.begin());
  Chain& chain = r.movers[idx];
  chain.features.erase(chain.features.begin());
  if (!chain.features.empty()) {
    // Retained: more licensees to check.  Popping the first licensee can
    // expose a base collision with another chain.
    if (!smc_admissible(r.movers)) return RuleFailure::SmcViolation;
    return r;
  }

  Chain landed = std::move(chain);
  r.movers.erase(r.movers.begin() + idx);
  if (f.strength == Strength::Strong) {
    splice_slot_everywhere(r, landed.id, {});
    r.spec = concat(std::move(landed.phon), r.spec);
  } else {
    splice_slot_everywhere(r, landed.id, landed.phon);
  }
  return r;
}

DerivationTreePtr leaf(const LexicalItem& item) {
  auto n = std::make_shared<DerivationNode>();
  n->kind = DerivationNode::Kind::Leaf;
  n->item = &item;
  n->expr = leaf_expression(item);
  n->leaves = 1;
  n->epsilon_leaves = item.is_epsilon() ? 1 : 0;
  return n;
}

std::variant<DerivationTreePtr, RuleFailure> merge_trees(
    const DerivationTreePtr& sel, const DerivationTreePtr& arg) {
  RuleResult r = merge(sel->expr, arg->expr);
  if (auto* fail = std::get_if<RuleFailure>(&r)) return *fail;

  auto n = std::make_shared<DerivationNode>();
  n->kind = DerivationNode::Kind::Merge;
  n->left = sel;
  n->right = arg;
  const Feature& s = sel->expr.features.front();
  switch (s.headmove) {
    case HeadMove::Left:
      n->variant = MergeVariant::IncorporateLeft;
      break;
    case HeadMove::Right:
      n->variant = MergeVariant::IncorporateRight;
      break;
    case HeadMove::None:
      n->variant = sel->expr.lexical ? MergeVariant::Complement
                                     : MergeVariant::Specifier;
      break;
  }
  n->arg_became_mover = arg->expr.features.size() > 1;
  n->expr = std::move(std::get<Expression>(r));
  n->leaves = sel->leaves + arg->leaves;
  n->epsilon_leaves = sel->epsilon_leaves + arg->epsilon_leaves;
  return DerivationTreePtr(std::move(n));
}

std::variant<DerivationTreePtr, RuleFailure> move_tree(
    const DerivationTreePtr& child) {
  RuleResult r = move(child->expr);
  if (auto* fail = std::get_if<RuleFailure>(&r)) return *fail;

  auto n = std::make_shared<DerivationNode>();
  n->kind = DerivationNode::Kind::Move;
  n->child = child;
  n->strength = child->expr.features.front().strength;
  n->base = child->expr.features.front().base;
  n->expr = std::move(std::get<Expression>(r));
  n->leaves = child->leaves;
  n->epsilon_leaves = child->epsilon_leaves;
  return DerivationTreePtr(std::move(n));
}

std::vector<std::string> yield_of(const DerivationTreePtr& tree) {
  return materialize(tree->expr);
}

namespace {

void key_rec(const DerivationTreePtr& t, std::ostream& os) {
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      os << '(' << t->item->id << ')';
      break;
    case DerivationNode::Kind::Merge: {
      char v = 'c';
      if (t->variant == MergeVariant::Specifier) v = 's';
      if (t->variant == MergeVariant::IncorporateLeft) v = 'l';
      if (t->variant == MergeVariant::IncorporateRight) v = 'r';
      os << "(M" << v;
      key_rec(t->left, os);
      key_rec(t->right, os);
      os << ')';
      break;
    }
    case DerivationNode::Kind::Move:
      os << "(V" << (t->strength == Strength::Strong ? 's' : 'w') << t->base;
      key_rec(t->child, os);
      os << ')';
      break;
  }
}

}  // namespace

std::string derivation_key(const DerivationTreePtr& tree) {
  std::ostringstream os;
  key_rec(tree, os);
  return os.str();
}

std::size_t feature_count(const Expression& e) {
  std::size_t n = e.features.size();
  for (const auto& m : e.movers) n += m.features.size();
  return n;
}

}  // namespace mg
