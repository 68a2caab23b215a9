#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "mg/derivation.hpp"
#include "mg/expression.hpp"
#include "mg/lexicon.hpp"
#include "mg/render.hpp"

using namespace mg;

namespace {

const LexicalItem& find_item(const Lexicon& lex, const std::string& id) {
  for (const auto& item : lex.items)
    if (item.id == id) return item;
  FAIL("missing lexicon item: ", id);
  static LexicalItem dummy;
  return dummy;
}

Expression ok(RuleResult r) {
  REQUIRE(std::holds_alternative<Expression>(r));
  return std::get<Expression>(std::move(r));
}

DerivationTreePtr ok(std::variant<DerivationTreePtr, RuleFailure> r) {
  REQUIRE(std::holds_alternative<DerivationTreePtr>(r));
  return std::get<DerivationTreePtr>(std::move(r));
}

RuleFailure fail(RuleResult r) {
  REQUIRE(std::holds_alternative<RuleFailure>(r));
  return std::get<RuleFailure>(r);
}

std::vector<std::string> toks(std::initializer_list<const char*> ts) {
  return {ts.begin(), ts.end()};
}

// Independent reference model for the strong-movement fragment: token
// vectors only, movers lose their merge position entirely (so it cannot
// express in-situ discharge, which the tests pin by explicit sequences
// instead).
struct NaiveExpr {
  std::vector<std::string> spec, head, comp;
  struct NaiveChain {
    std::vector<std::string> tokens;
    std::vector<Feature> features;
  };
  std::vector<NaiveChain> movers;
  std::vector<Feature> features;
  bool lexical = true;
};

NaiveExpr naive_leaf(const LexicalItem& item) {
  NaiveExpr e;
  e.head = item.phon;
  e.features = item.features;
  return e;
}

std::vector<std::string> cat_tokens(
    std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

NaiveExpr naive_merge(const NaiveExpr& sel, const NaiveExpr& arg) {
  NaiveExpr r;
  r.lexical = false;
  r.features.assign(sel.features.begin() + 1, sel.features.end());
  r.movers = sel.movers;
  r.movers.insert(r.movers.end(), arg.movers.begin(), arg.movers.end());

  std::vector<std::string> leftover;
  switch (sel.features.front().headmove) {
    case HeadMove::Left:
      r.head = cat_tokens({&arg.head, &sel.head});
      leftover = cat_tokens({&arg.spec, &arg.comp});
      break;
    case HeadMove::Right:
      r.head = cat_tokens({&sel.head, &arg.head});
      leftover = cat_tokens({&arg.spec, &arg.comp});
      break;
    case HeadMove::None:
      r.head = sel.head;
      leftover = cat_tokens({&arg.spec, &arg.head, &arg.comp});
      break;
  }

  if (arg.features.size() > 1) {
    r.movers.push_back({leftover,
                        {arg.features.begin() + 1, arg.features.end()}});
    leftover.clear();
  }
  if (sel.features.front().headmove != HeadMove::None) {
    r.spec = sel.spec;
    r.comp = cat_tokens({&sel.comp, &leftover});
  } else if (sel.lexical) {
    r.spec = sel.spec;
    r.comp = leftover;
  } else {
    r.spec = cat_tokens({&leftover, &sel.spec});
    r.comp = sel.comp;
  }
  return r;
}

NaiveExpr naive_move(const NaiveExpr& e) {
  NaiveExpr r = e;
  const Feature f = r.features.front();
  REQUIRE(f.strength == Strength::Strong);  // weak not modeled
  r.features.erase(r.features.begin());
  for (std::size_t i = 0; i < r.movers.size(); ++i) {
    if (r.movers[i].features.front().base != f.base) continue;
    r.movers[i].features.erase(r.movers[i].features.begin());
    if (r.movers[i].features.empty()) {
      r.spec = cat_tokens({&r.movers[i].tokens, &r.spec});
      r.movers.erase(r.movers.begin() + i);
    }
    return r;
  }
  FAIL("naive move: no matching chain");
  return r;
}

std::vector<std::string> naive_yield(const NaiveExpr& e) {
  return cat_tokens({&e.spec, &e.head, &e.comp});
}

}  // namespace

TEST_CASE("leaf expressions") {
  Lexicon lex = parse_lexicon(
      "voit :: =d =d verbe :: Id\n"
      "\xce\xb5 :: d -k -g :: Y\n"
      "ce type :: d :: guy\n");
  Expression v = leaf_expression(find_item(lex, "voit:=d =d verbe"));
  CHECK(v.lexical);
  CHECK(v.head.size() == 1);
  CHECK(v.head[0].tokens == toks({"voit"}));
  CHECK(v.spec.empty());
  CHECK(v.comp.empty());
  CHECK(v.features.size() == 3);
  CHECK(v.head_item->phon_string() == "voit");

  Expression t = leaf_expression(find_item(lex, "\xce\xb5:d -k -g"));
  CHECK(t.head.empty());
  CHECK(materialize(t).empty());

  Expression ct = leaf_expression(find_item(lex, "ce type:d"));
  CHECK(materialize(ct) == toks({"ce", "type"}));
}

TEST_CASE("complement and specifier placement") {
  Lexicon lex = parse_lexicon(
      "voit :: =d =d verbe\n"
      "marie :: d\n"
      "jean :: d\n");
  const auto& voit = find_item(lex, "voit:=d =d verbe");
  const auto& marie = find_item(lex, "marie:d");
  const auto& jean = find_item(lex, "jean:d");

  // Lexical selector: argument becomes the complement, to the right.
  Expression vp = ok(merge(leaf_expression(voit), leaf_expression(marie)));
  CHECK(materialize(vp) == toks({"voit", "marie"}));
  CHECK_FALSE(vp.lexical);
  CHECK(to_string(vp.features) == "=d verbe");

  // Derived selector: argument becomes a specifier, to the left.
  Expression full = ok(merge(vp, leaf_expression(jean)));
  CHECK(materialize(full) == toks({"jean", "voit", "marie"}));
  CHECK(to_string(full.features) == "verbe");

  // The tree records which variant applied.
  auto t1 = ok(merge_trees(leaf(voit), leaf(marie)));
  CHECK(t1->variant == MergeVariant::Complement);
  auto t2 = ok(merge_trees(t1, leaf(jean)));
  CHECK(t2->variant == MergeVariant::Specifier);
  CHECK(t2->leaves == 3);
}

TEST_CASE("head attraction joins heads and demotes the remainder") {
  Lexicon lex = parse_lexicon(
      "donne :: v\n"
      "\xce\xb5 :: =>v =d +k =d v\n"
      "lui :: verbe<= +F dat\n"
      "voit :: verbe\n");

  // =>v : attracted head lands left of the (silent) selecting head.
  Expression shell = ok(merge(
      leaf_expression(find_item(lex, "\xce\xb5:=>v =d +k =d v")),
      leaf_expression(find_item(lex, "donne:v"))));
  CHECK(materialize(shell) == toks({"donne"}));
  CHECK(to_string(shell.features) == "=d +k =d v");
  CHECK_FALSE(shell.lexical);

  // verbe<= : attracted head lands right of the selecting head.
  Expression cluster = ok(merge(
      leaf_expression(find_item(lex, "lui:verbe<= +f dat")),
      leaf_expression(find_item(lex, "voit:verbe"))));
  CHECK(materialize(cluster) == toks({"lui", "voit"}));
  CHECK(to_string(cluster.features) == "+f dat");

  auto tl = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=>v =d +k =d v")),
                           leaf(find_item(lex, "donne:v"))));
  CHECK(tl->variant == MergeVariant::IncorporateLeft);
  auto tr = ok(merge_trees(leaf(find_item(lex, "lui:verbe<= +f dat")),
                           leaf(find_item(lex, "voit:verbe"))));
  CHECK(tr->variant == MergeVariant::IncorporateRight);
}

TEST_CASE("argument with leftover licensees becomes a mover chain") {
  Lexicon lex = parse_lexicon(
      "voit :: =d =d verbe\n"
      "jean :: d -k\n");
  Expression vp = ok(merge(leaf_expression(find_item(lex, "voit:=d =d verbe")),
                           leaf_expression(find_item(lex, "jean:d -k"))));
  REQUIRE(vp.movers.size() == 1);
  CHECK(to_string(vp.movers[0].features) == "-k");
  // The chain's tokens do not surface until the chain lands.
  CHECK(materialize(vp) == toks({"voit", "jean"}));  // live chain in situ
  CHECK(vp.comp.size() == 1);
  CHECK(vp.comp[0].is_slot());

  auto tree = ok(merge_trees(leaf(find_item(lex, "voit:=d =d verbe")),
                             leaf(find_item(lex, "jean:d -k"))));
  CHECK(tree->arg_became_mover);
}

TEST_CASE("category mismatch and SMC violations are distinct failures") {
  Lexicon lex = parse_lexicon(
      "voit :: =d =d verbe\n"
      "jean :: d -k\n"
      "marie :: d -k\n"
      "\xce\xb5 :: =t c\n");
  Expression voit = leaf_expression(find_item(lex, "voit:=d =d verbe"));
  Expression jean = leaf_expression(find_item(lex, "jean:d -k"));
  Expression marie = leaf_expression(find_item(lex, "marie:d -k"));
  Expression comp = leaf_expression(find_item(lex, "\xce\xb5:=t c"));

  CHECK(fail(merge(voit, comp)) == RuleFailure::CategoryMismatch);
  CHECK(fail(merge(jean, voit)) == RuleFailure::CategoryMismatch);

  Expression vp = ok(merge(voit, jean));
  CHECK(fail(merge(vp, marie)) == RuleFailure::SmcViolation);
}

TEST_CASE("strong move lands as specifier, weak move discharges in situ") {
  Lexicon strong = parse_lexicon(
      "host :: =d +f x\n"
      "obj one :: d -f\n");
  Expression s = ok(merge(leaf_expression(find_item(strong, "host:=d +f x")),
                          leaf_expression(find_item(strong, "obj one:d -f"))));
  s = ok(move(s));
  CHECK(materialize(s) == toks({"obj", "one", "host"}));
  CHECK(s.movers.empty());
  CHECK(to_string(s.features) == "x");

  Lexicon weak = parse_lexicon(
      "host :: =d *f x\n"
      "obj one :: d -f\n");
  Expression w = ok(merge(leaf_expression(find_item(weak, "host:=d *f x")),
                          leaf_expression(find_item(weak, "obj one:d -f"))));
  w = ok(move(w));
  CHECK(materialize(w) == toks({"host", "obj", "one"}));
  CHECK(w.movers.empty());
}

TEST_CASE("move retains a chain that still has licensees") {
  Lexicon lex = parse_lexicon(
      "host :: =d +a +b x\n"
      "arg :: d -a -b\n");
  Expression e = ok(merge(leaf_expression(find_item(lex, "host:=d +a +b x")),
                          leaf_expression(find_item(lex, "arg:d -a -b"))));
  e = ok(move(e));
  REQUIRE(e.movers.size() == 1);
  CHECK(to_string(e.movers[0].features) == "-b");
  CHECK(materialize(e) == toks({"host", "arg"}));  // still in situ

  e = ok(move(e));
  CHECK(e.movers.empty());
  CHECK(materialize(e) == toks({"arg", "host"}));
}

TEST_CASE("move retention re-checks chain distinctness") {
  // After +a is checked, both chains would front -b: blocked.
  Lexicon lex = parse_lexicon(
      "host :: =d =d +a x\n"
      "one :: d -a -b\n"
      "two :: d -b\n");
  Expression e = ok(merge(leaf_expression(find_item(lex, "host:=d =d +a x")),
                          leaf_expression(find_item(lex, "one:d -a -b"))));
  e = ok(merge(e, leaf_expression(find_item(lex, "two:d -b"))));
  CHECK(fail(move(e)) == RuleFailure::SmcViolation);
}

TEST_CASE("move without a matching chain fails") {
  Lexicon lex = parse_lexicon(
      "host :: =d +q x\n"
      "arg :: d -r\n");
  Expression e = ok(merge(leaf_expression(find_item(lex, "host:=d +q x")),
                          leaf_expression(find_item(lex, "arg:d -r"))));
  CHECK(fail(move(e)) == RuleFailure::MoveNoMatch);
  CHECK(fail(move(leaf_expression(find_item(lex, "arg:d -r")))) ==
        RuleFailure::MoveNoMatch);
}

TEST_CASE("is_complete") {
  Lexicon lex = parse_lexicon(
      "a :: c\n"
      "b :: t\n"
      "x :: c -k\n");
  CHECK(is_complete(leaf_expression(find_item(lex, "a:c"))));
  CHECK_FALSE(is_complete(leaf_expression(find_item(lex, "b:t"))));
  CHECK_FALSE(is_complete(leaf_expression(find_item(lex, "x:c -k"))));
}

TEST_CASE("replay: jean la donne") {
  Lexicon lex = load_lexicon_file(std::string(MGC_DATA_DIR) +
                                  "/french-clitics.lex");
  auto shell = leaf(find_item(lex, "\xce\xb5:=>v =d +k =d v"));
  auto donne = leaf(find_item(lex, "donne:v"));
  auto trace = leaf(find_item(lex, "\xce\xb5:d -k -g"));
  auto jean = leaf(find_item(lex, "jean:d -k"));
  auto la = leaf(find_item(lex, "la:=v +g acc"));
  auto tns = leaf(find_item(lex, "\xce\xb5:=acc +k t"));
  auto comp = leaf(find_item(lex, "\xce\xb5:=t c"));

  std::vector<DerivationTreePtr> steps;
  auto push = [&](DerivationTreePtr t) {
    steps.push_back(t);
    return t;
  };
  auto d = push(ok(merge_trees(shell, donne)));
  d = push(ok(merge_trees(d, trace)));
  d = push(ok(move_tree(d)));  // +k, retained: -g still pending
  d = push(ok(merge_trees(d, jean)));
  d = push(ok(merge_trees(la, d)));
  d = push(ok(move_tree(d)));  // +g, silent copy lands
  d = push(ok(merge_trees(tns, d)));
  d = push(ok(move_tree(d)));  // +k, jean lands
  d = push(ok(merge_trees(comp, d)));

  CHECK(is_complete(d->expr));
  CHECK(yield_of(d) == toks({"jean", "la", "donne"}));
  CHECK(d->leaves == 7);
  CHECK(d->epsilon_leaves == 4);

  // Every structure-building step checks exactly two features.
  std::vector<const DerivationNode*> ordered;
  for (const auto& s : steps) ordered.push_back(s.get());
  auto count_inputs = [](const DerivationNode* n) {
    if (n->kind == DerivationNode::Kind::Merge)
      return feature_count(n->left->expr) + feature_count(n->right->expr);
    return feature_count(n->child->expr);
  };
  for (const auto* n : ordered)
    CHECK(count_inputs(n) - feature_count(n->expr) == 2);
  CHECK(feature_count(d->expr) == 1);

  // Reference model agreement (all movement here is strong).
  NaiveExpr n = naive_merge(naive_leaf(*shell->item), naive_leaf(*donne->item));
  n = naive_merge(n, naive_leaf(*trace->item));
  n = naive_move(n);
  n = naive_merge(n, naive_leaf(*jean->item));
  n = naive_merge(naive_leaf(*la->item), n);
  n = naive_move(n);
  n = naive_merge(naive_leaf(*tns->item), n);
  n = naive_move(n);
  n = naive_merge(naive_leaf(*comp->item), n);
  CHECK(naive_yield(n) == yield_of(d));

  // Deterministic canonical key.
  CHECK(derivation_key(d) ==
        "(Mc(\xce\xb5:=t c)(Vsk(Mc(\xce\xb5:=acc +k t)(Vsg(Mc(la:=v +g acc)"
        "(Ms(Vsk(Ms(Ml(\xce\xb5:=>v =d +k =d v)(donne:v))(\xce\xb5:d -k -g)))"
        "(jean:d -k)))))))");
}

TEST_CASE("replay: dislocation, strong fronting vs weak in-situ") {
  Lexicon lex = load_lexicon_file(std::string(MGC_DATA_DIR) +
                                  "/french-clitics.lex");
  const auto& cetype = find_item(lex, "ce type:d");
  const auto& marie = find_item(lex, "marie:d -k");
  const auto& voit = find_item(lex, "voit:=d =d verbe");
  const auto& trop = find_item(lex, "trop:=>verbe verbe");
  const auto& le_h = find_item(lex, "le:verbe<= +h acc");
  const auto& tns = find_item(lex, "\xce\xb5:=acc +k t");

  auto build = [&](const LexicalItem& comma, const LexicalItem& comp) {
    auto c = ok(merge_trees(leaf(comma), leaf(cetype)));
    auto d = ok(merge_trees(leaf(voit), c));     // object, becomes a chain
    d = ok(merge_trees(d, leaf(marie)));         // subject, becomes a chain
    d = ok(merge_trees(leaf(trop), d));          // adverb attracts the head
    d = ok(merge_trees(leaf(le_h), d));          // clitic attaches
    d = ok(move_tree(d));                        // +h, chain retained
    d = ok(merge_trees(leaf(tns), d));
    d = ok(move_tree(d));                        // +k, marie lands
    d = ok(merge_trees(leaf(comp), d));
    d = ok(move_tree(d));                        // ±disloc
    REQUIRE(is_complete(d->expr));
    return yield_of(d);
  };

  // Fronting comma builds "ce type ,"; the strong licensor fronts it.
  CHECK(build(find_item(lex, ",:=>d d -h -disloc"),
              find_item(lex, "\xce\xb5:=t +disloc c")) ==
        toks({"ce", "type", ",", "marie", "le", "voit", "trop"}));

  // Trailing comma builds ", ce type"; the weak licensor leaves it in situ.
  CHECK(build(find_item(lex, ",:d<= d -h -disloc"),
              find_item(lex, "\xce\xb5:=t *disloc c")) ==
        toks({"marie", "le", "voit", "trop", ",", "ce", "type"}));
}

TEST_CASE("replay: il semble le lui donner") {
  Lexicon lex = load_lexicon_file(std::string(MGC_DATA_DIR) +
                                  "/french-clitics.lex");
  auto d = ok(merge_trees(leaf(find_item(lex, "donner:=d =d inf")),
                          leaf(find_item(lex, "\xce\xb5:d -g"))));
  d = ok(merge_trees(d, leaf(find_item(lex, "\xce\xb5:d -f"))));
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=>inf verbe")), d));
  d = ok(merge_trees(leaf(find_item(lex, "lui:verbe<= +f dat")), d));
  d = ok(move_tree(d));  // +f
  d = ok(merge_trees(leaf(find_item(lex, "le:dat<= +g acc")), d));
  d = ok(move_tree(d));  // +g
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:acc<= verbe")), d));
  d = ok(merge_trees(leaf(find_item(lex, "semble:=verbe =d raisingv")), d));
  d = ok(merge_trees(d, leaf(find_item(lex, "\xce\xb5:d -subj -case"))));
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=>raisingv endclitic")), d));
  d = ok(merge_trees(leaf(find_item(lex, "il:=endclitic +subj nom")), d));
  d = ok(move_tree(d));  // +subj, chain retained (-case pending)
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=nom +case t")), d));
  d = ok(move_tree(d));  // +case
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=t c")), d));

  CHECK(is_complete(d->expr));
  CHECK(yield_of(d) == toks({"il", "semble", "le", "lui", "donner"}));
  CHECK(d->leaves == 13);
  CHECK(d->epsilon_leaves == 8);
}

namespace {

DerivationTreePtr build_d1(const Lexicon& lex) {
  auto d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=>v =d +k =d v")),
                          leaf(find_item(lex, "donne:v"))));
  d = ok(merge_trees(d, leaf(find_item(lex, "\xce\xb5:d -k -g"))));
  d = ok(move_tree(d));
  d = ok(merge_trees(d, leaf(find_item(lex, "jean:d -k"))));
  d = ok(merge_trees(leaf(find_item(lex, "la:=v +g acc")), d));
  d = ok(move_tree(d));
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=acc +k t")), d));
  d = ok(move_tree(d));
  d = ok(merge_trees(leaf(find_item(lex, "\xce\xb5:=t c")), d));
  return d;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("derivation JSON matches the committed fixture") {
  Lexicon lex = load_lexicon_file(std::string(MGC_DATA_DIR) +
                                  "/french-clitics.lex");
  std::string expected =
      slurp(std::string(MGC_FIXTURE_DIR) + "/d1.json");
  CHECK(to_json(build_d1(lex)) + "\n" == expected);
}

TEST_CASE("DOT and qtree exports") {
  Lexicon lex = load_lexicon_file(std::string(MGC_DATA_DIR) +
                                  "/french-clitics.lex");
  auto d = build_d1(lex);

  std::string dot = to_dot(d);
  CHECK(dot.find("digraph derivation {") == 0);
  CHECK(dot.find("jean\\nd -k") != std::string::npos);
  CHECK(dot.find("move +k") != std::string::npos);
  CHECK(dot.find("merge head-left") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n15 ") != std::string::npos);  // 9 steps + 7 leaves = 16
  CHECK(dot.find("n16") == std::string::npos);

  std::string qtree = to_qtree(d);
  CHECK(qtree.find("\\Tree [.{merge complement : c}") == 0);
  CHECK(qtree.find("{jean : d -k}") != std::string::npos);
  CHECK(qtree.find("[.{move +g : acc}") != std::string::npos);
}

TEST_CASE("signatures canonicalize chain identities") {
  Lexicon lex = parse_lexicon(
      "voit :: =d =d verbe\n"
      "jean :: d -k\n");
  auto build = [&] {
    return ok(merge(leaf_expression(find_item(lex, "voit:=d =d verbe")),
                    leaf_expression(find_item(lex, "jean:d -k"))));
  };
  Expression a = build();
  Expression b = build();
  CHECK(a.movers[0].id != b.movers[0].id);  // globally fresh ids
  CHECK(signature(a) == signature(b));      // but equal canonical forms
  CHECK(signature(a).find("_0") != std::string::npos);
}
