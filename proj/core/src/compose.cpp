#include "mg/compose.hpp"

#include <optional>

#include "mg/clitic_order.hpp"
#include "mg/errors.hpp"

namespace mg {

int feat(const Expression& e) {
  return e.features.empty() && e.movers.empty() ? 1 : 0;
}

int sem(const Expression& x, const Expression& y) {
  return feat(x) | feat(y);
}

namespace {

struct Pend {
  TermPtr term;
  std::string display;
};

std::string join_displays(const std::vector<Pend>& pending) {
  std::string out;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (i) out += ", ";
    out += pending[i].display;
  }
  return out;
}

// Operand states after a merge consumes the two front features.
void pop_front_feature(Expression& e) {
  if (!e.features.empty()) e.features.erase(e.features.begin());
}

// The two halves a move reunites: the chain being attracted (front
// licensee popped) and the expression without it (front licensor popped).
std::pair<Expression, Expression> move_halves(const DerivationNode& n) {
  Expression chain_half;
  Expression rest = n.child->expr;
  pop_front_feature(rest);
  for (auto it = rest.movers.begin(); it != rest.movers.end(); ++it) {
    if (!it->features.empty() && it->features.front().base == n.base) {
      chain_half.features.assign(it->features.begin() + 1,
                                 it->features.end());
      rest.movers.erase(it);
      break;
    }
  }
  return {std::move(rest), std::move(chain_half)};
}

std::string merge_direction(MergeVariant v) {
  return v == MergeVariant::Specifier ? ">" : "<";
}

struct NodeResult {
  std::vector<Pend> pending;
  SemanticNodePtr node;
};

struct Composer {
  const ComposeOptions& opts;
  std::size_t placeholders = 0;

  std::string fresh_placeholder() {
    std::size_t n = placeholders++;
    return n == 0 ? "Y" : "Y" + std::to_string(n);
  }

  // A successful one-directional application, beta-normalized.
  std::optional<TermPtr> applied(const Pend& fn, const Pend& arg) {
    if (fn.term->kind != TermKind::Abs) return std::nullopt;
    BetaResult r = beta_reduce(app(fn.term, arg.term));
    if (!r.normal || has_const_over_abs(r.term)) return std::nullopt;
    return r.term;
  }

  // Folds one term into the accumulator if exactly one direction works.
  // Returns false if neither direction is well-formed.
  bool fold_into(Pend& acc, const Pend& e) {
    auto fwd = applied(acc, e);
    auto bwd = applied(e, acc);
    if (fwd && bwd && !alpha_equal(*fwd, *bwd))
      throw ComposeError("ambiguous application between '" + acc.display +
                         "' and '" + e.display + "'");
    if (fwd) {
      acc.term = *fwd;
      acc.display += ", " + e.display;
      return true;
    }
    if (bwd) {
      acc.term = *bwd;
      acc.display = e.display + " @ " + acc.display;
      return true;
    }
    return false;
  }

  // Left fold with a FIFO retry queue: a term neither side can consume yet
  // is deferred and retried after every successful application.  A ready
  // step that cannot apply anything at all is a composition error.
  void fire(std::vector<Pend>& pending, const std::string& where) {
    if (pending.size() <= 1) return;
    Pend acc = std::move(pending.front());
    std::vector<Pend> queue;
    bool progressed = false;
    auto retry = [&] {
      bool progress = true;
      while (progress) {
        progress = false;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          if (fold_into(acc, queue[i])) {
            queue.erase(queue.begin() + i);
            progress = true;
            break;
          }
        }
      }
    };
    for (std::size_t i = 1; i < pending.size(); ++i) {
      if (fold_into(acc, pending[i])) {
        progressed = true;
        retry();
      } else {
        queue.push_back(std::move(pending[i]));
      }
    }
    if (!progressed)
      throw ComposeError("no application possible at " + where + " node '" +
                         acc.display + ", " + join_displays(queue) + "'");
    pending.clear();
    pending.push_back(std::move(acc));
    for (auto& q : queue) pending.push_back(std::move(q));
  }

  NodeResult walk_leaf(const DerivationNode& n) {
    const LexicalItem& item = *n.item;
    std::vector<Pend> pending;
    std::string display;
    if (!item.sem) {
      display = "t";  // silent argument with no content of its own
    } else {
      TermPtr term = item.sem;
      for (const auto& v : free_variables(term))
        if (is_placeholder_name(v))
          term = substitute(term, v, var(fresh_placeholder()));
      if (!item.is_epsilon())
        display = item.phon_string();
      else if (term->kind == TermKind::Var)
        display = "t";  // placeholder-only content: a reunited copy
      else if (is_identity(term))
        display = "\xce\xb5";
      else
        display = "Infl";  // silent functional content (tense and kin)
      if (!is_identity(term)) pending.push_back({term, display});
    }
    auto node = std::make_shared<SemanticNode>();
    node->label = display;
    for (const auto& p : pending) node->pending.push_back(p.term);
    return {std::move(pending), std::move(node)};
  }

  NodeResult walk(const DerivationTreePtr& t) {
    if (t->kind == DerivationNode::Kind::Leaf) return walk_leaf(*t);

    if (t->kind == DerivationNode::Kind::Merge) {
      NodeResult sel = walk(t->left);
      NodeResult arg = walk(t->right);
      const bool sel_derived = t->left->kind != DerivationNode::Kind::Leaf;
      const bool arg_derived = t->right->kind != DerivationNode::Kind::Leaf;

      std::vector<Pend> pending;
      // The list whose derivation is further along folds first; with one
      // derived side that is the derived one, otherwise the selector.
      if (arg_derived && !sel_derived) {
        pending = std::move(arg.pending);
        for (auto& p : sel.pending) pending.push_back(std::move(p));
      } else {
        pending = std::move(sel.pending);
        for (auto& p : arg.pending) pending.push_back(std::move(p));
      }

      Expression post_sel = t->left->expr;
      Expression post_arg = t->right->expr;
      pop_front_feature(post_sel);
      pop_front_feature(post_arg);
      const std::string direction = merge_direction(t->variant);
      const bool ready =
          sem(post_sel, post_arg) == 1 || opts.immediate_application;
      if (ready) fire(pending, direction);

      auto node = std::make_shared<SemanticNode>();
      node->direction = direction;
      node->fired = ready;
      node->label = join_displays(pending);
      for (const auto& p : pending) node->pending.push_back(p.term);
      node->children = {std::move(sel.node), std::move(arg.node)};
      return {std::move(pending), std::move(node)};
    }

    // Move node.
    NodeResult child = walk(t->child);
    std::vector<Pend> pending = std::move(child.pending);
    auto [rest, chain_half] = move_halves(*t);
    const bool ready =
        sem(rest, chain_half) == 1 || opts.immediate_application;
    if (ready) fire(pending, "unary");

    // A move on a clitic licensor reunites the clitic with its trace; mark
    // the running term with the clitic's phonology.  The tag travels with
    // the term, so later stages still show which trace was recovered.
    std::string bare_tag;
    if (clitic_case_for_licensor(t->base) && t->expr.head_item) {
      const std::string tag = "t(" + t->expr.head_item->phon_string() + ")";
      if (pending.empty())
        bare_tag = tag;
      else
        pending.front().display = tag + " @ " + pending.front().display;
    }

    auto node = std::make_shared<SemanticNode>();
    node->direction = "unary";
    node->fired = ready;
    node->label = pending.empty() ? bare_tag : join_displays(pending);
    for (const auto& p : pending) node->pending.push_back(p.term);
    node->children = {std::move(child.node)};
    return {std::move(pending), std::move(node)};
  }
};

}  // namespace

Composition compose(const DerivationTreePtr& d, const Lexicon& lex,
                    const ComposeOptions& options) {
  (void)lex;  // leaves carry their items; the lexicon fixes their lifetime
  Composer composer{options};
  NodeResult r = composer.walk(d);

  Composition out;
  out.root = r.node;
  if (r.pending.empty()) {
    out.formula = identity_term();
  } else if (r.pending.size() == 1) {
    out.formula = r.pending.front().term;
  } else {
    throw ComposeError("composition incomplete: " +
                       std::to_string(r.pending.size()) +
                       " terms remain at the root (" +
                       join_displays(r.pending) + ")");
  }
  out.free_variables = free_variables(out.formula);
  return out;
}

}  // namespace mg
