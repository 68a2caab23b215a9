#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mg {

// Untyped lambda calculus with named constants.  Terms are immutable and
// shared; all operations build new nodes instead of mutating.
//
//   Var    free or bound variable, identified by name
//   Const  semantic constant with a fixed arity (e.g. give/2, pres/1)
//   Abs    λ binder
//   App    left-associative application
//
// Constants are compared by (name, arity): give/2 and give/3 are distinct.

enum class TermKind { Var, Const, Abs, App };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  TermKind kind;
  std::string name;  // Var: variable name; Const: constant name; Abs: binder
  int arity = 0;     // Const only
  TermPtr body;      // Abs only
  TermPtr fn, arg;   // App only

  static TermPtr make_var(std::string name);
  static TermPtr make_const(std::string name, int arity);
  static TermPtr make_abs(std::string binder, TermPtr body);
  static TermPtr make_app(TermPtr fn, TermPtr arg);
};

inline TermPtr var(std::string name) { return Term::make_var(std::move(name)); }
inline TermPtr constant(std::string name, int arity) {
  return Term::make_const(std::move(name), arity);
}
inline TermPtr abs(std::string binder, TermPtr body) {
  return Term::make_abs(std::move(binder), std::move(body));
}
inline TermPtr app(TermPtr fn, TermPtr arg) {
  return Term::make_app(std::move(fn), std::move(arg));
}

// λx.x — the lexicon's default "semantically inert" term.
TermPtr identity_term();
bool is_identity(const TermPtr& t);

// Free variables, by name.
std::set<std::string> free_variables(const TermPtr& t);

// Capture-avoiding substitution t[name := value].
TermPtr substitute(const TermPtr& t, const std::string& name,
                   const TermPtr& value);

// Normal-order beta reduction, bounded by maxSteps redex contractions.
// `normal` is false when the bound was hit before reaching normal form.
struct BetaResult {
  TermPtr term;
  bool normal = false;
  std::size_t steps = 0;
};
BetaResult beta_reduce(const TermPtr& t, std::size_t max_steps = 100000);

// Alpha equivalence (de Bruijn comparison); free variables match by name.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// True if the term contains, anywhere, a constant applied to a lambda
// abstraction in argument position — the shape a first-order formula can
// never have.  Used to reject ill-directed applications during composition.
bool has_const_over_abs(const TermPtr& t);

// Canonical rendering: bound variables are renamed v0, v1, ... in binder
// order, free variables keep their names, constant application spines print
// as name(a1, ..., an).  alpha_equal(a, b) implies render(a) == render(b).
std::string render(const TermPtr& t);

// Parser for the rendering / lexicon syntax:
//
//   term  := 'λ' ident '.' term | '\' ident '.' term | apply
//   apply := atom { atom | '(' term {',' term} ')' }
//   atom  := ident | '(' term ')'
//
// f(a, b) abbreviates ((f a) b).  An identifier is a variable if bound by
// an enclosing λ or if it looks like a placeholder (Y, Y1, Y2, ...);
// otherwise it is a constant whose arity is the number of arguments it is
// applied to at its widest use in the term.  "Id" denotes λx.x.
TermPtr parse_lambda_term(std::string_view src);

// True for names in the placeholder namespace: 'Y' followed by digits only.
bool is_placeholder_name(const std::string& name);

}  // namespace mg
