#include "mg/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "mg/errors.hpp"

namespace mg {

TermPtr Term::make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr Term::make_const(std::string name, int arity) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->name = std::move(name);
  t->arity = arity;
  return t;
}

TermPtr Term::make_abs(std::string binder, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Abs;
  t->name = std::move(binder);
  t->body = std::move(body);
  return t;
}

TermPtr Term::make_app(TermPtr fn, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->fn = std::move(fn);
  t->arg = std::move(arg);
  return t;
}

TermPtr identity_term() {
  static const TermPtr id = abs("x", var("x"));
  return id;
}

bool is_identity(const TermPtr& t) {
  return t && t->kind == TermKind::Abs && t->body->kind == TermKind::Var &&
         t->body->name == t->name;
}

namespace {

void collect_free(const TermPtr& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t->name) == bound.rend())
        out.insert(t->name);
      break;
    case TermKind::Const:
      break;
    case TermKind::Abs:
      bound.push_back(t->name);
      collect_free(t->body, bound, out);
      bound.pop_back();
      break;
    case TermKind::App:
      collect_free(t->fn, bound, out);
      collect_free(t->arg, bound, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_variables(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

namespace {

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate)) candidate += '\'';
  return candidate;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& name,
                   const TermPtr& value) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == name ? value : t;
    case TermKind::Const:
      return t;
    case TermKind::App: {
      TermPtr fn = substitute(t->fn, name, value);
      TermPtr arg = substitute(t->arg, name, value);
      if (fn == t->fn && arg == t->arg) return t;
      return app(std::move(fn), std::move(arg));
    }
    case TermKind::Abs: {
      if (t->name == name) return t;  // shadowed
      std::set<std::string> fv_value = free_variables(value);
      if (!fv_value.count(t->name)) {
        TermPtr body = substitute(t->body, name, value);
        if (body == t->body) return t;
        return abs(t->name, std::move(body));
      }
      // Binder would capture a free variable of `value`: rename it first.
      std::set<std::string> avoid = fv_value;
      auto fv_body = free_variables(t->body);
      avoid.insert(fv_body.begin(), fv_body.end());
      avoid.insert(name);
      std::string renamed = fresh_name(t->name, avoid);
      TermPtr body = substitute(t->body, t->name, var(renamed));
      return abs(renamed, substitute(body, name, value));
    }
  }
  return t;  // unreachable
}

namespace {

// One leftmost-outermost contraction; returns nullptr if t is normal.
TermPtr step(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return nullptr;
    case TermKind::App: {
      if (t->fn->kind == TermKind::Abs)
        return substitute(t->fn->body, t->fn->name, t->arg);
      if (TermPtr fn = step(t->fn)) return app(std::move(fn), t->arg);
      if (TermPtr arg = step(t->arg)) return app(t->fn, std::move(arg));
      return nullptr;
    }
    case TermKind::Abs: {
      if (TermPtr body = step(t->body)) return abs(t->name, std::move(body));
      return nullptr;
    }
  }
  return nullptr;  // unreachable
}

}  // namespace

BetaResult beta_reduce(const TermPtr& t, std::size_t max_steps) {
  BetaResult r;
  r.term = t;
  while (r.steps < max_steps) {
    TermPtr next = step(r.term);
    if (!next) {
      r.normal = true;
      return r;
    }
    r.term = std::move(next);
    ++r.steps;
  }
  r.normal = step(r.term) == nullptr;
  return r;
}

namespace {

bool alpha_equal_rec(const TermPtr& a, const TermPtr& b,
                     std::vector<std::string>& env_a,
                     std::vector<std::string>& env_b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      auto ia = std::find(env_a.rbegin(), env_a.rend(), a->name);
      auto ib = std::find(env_b.rbegin(), env_b.rend(), b->name);
      bool bound_a = ia != env_a.rend();
      bool bound_b = ib != env_b.rend();
      if (bound_a != bound_b) return false;
      if (bound_a) return (ia - env_a.rbegin()) == (ib - env_b.rbegin());
      return a->name == b->name;
    }
    case TermKind::Const:
      return a->name == b->name && a->arity == b->arity;
    case TermKind::Abs: {
      env_a.push_back(a->name);
      env_b.push_back(b->name);
      bool eq = alpha_equal_rec(a->body, b->body, env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return eq;
    }
    case TermKind::App:
      return alpha_equal_rec(a->fn, b->fn, env_a, env_b) &&
             alpha_equal_rec(a->arg, b->arg, env_a, env_b);
  }
  return false;  // unreachable
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  std::vector<std::string> env_a, env_b;
  return alpha_equal_rec(a, b, env_a, env_b);
}

bool has_const_over_abs(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return false;
    case TermKind::Abs:
      return has_const_over_abs(t->body);
    case TermKind::App: {
      // Unwind the application spine.
      std::vector<TermPtr> args;
      TermPtr head = t;
      while (head->kind == TermKind::App) {
        args.push_back(head->arg);
        head = head->fn;
      }
      if (head->kind == TermKind::Const) {
        for (const auto& a : args)
          if (a->kind == TermKind::Abs) return true;
      }
      for (const auto& a : args)
        if (has_const_over_abs(a)) return true;
      return has_const_over_abs(head);
    }
  }
  return false;  // unreachable
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Renderer {
  const std::set<std::string>& avoid;  // free variables of the whole term
  int counter = 0;
  std::vector<std::pair<std::string, std::string>> scope;  // binder -> printed

  std::string next_binder() {
    std::string name;
    do {
      name = "v" + std::to_string(counter++);
    } while (avoid.count(name));
    return name;
  }

  std::string lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    return name;  // free
  }

  // `atom` requests parentheses around abstractions (argument/head position).
  void emit(const TermPtr& t, std::string& out, bool atom) {
    switch (t->kind) {
      case TermKind::Var:
        out += lookup(t->name);
        return;
      case TermKind::Const:
        out += t->name;
        return;
      case TermKind::Abs: {
        if (atom) out += '(';
        std::string printed = next_binder();
        out += "\xce\xbb";  // λ
        out += printed;
        out += ". ";
        scope.emplace_back(t->name, printed);
        emit(t->body, out, false);
        scope.pop_back();
        if (atom) out += ')';
        return;
      }
      case TermKind::App: {
        std::vector<TermPtr> args;
        TermPtr head = t;
        while (head->kind == TermKind::App) {
          args.push_back(head->arg);
          head = head->fn;
        }
        std::reverse(args.begin(), args.end());
        emit(head, out, true);
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) out += ", ";
          emit(args[i], out, true);
        }
        out += ')';
        return;
      }
    }
  }
};

}  // namespace

std::string render(const TermPtr& t) {
  std::set<std::string> fv = free_variables(t);
  Renderer r{fv};
  std::string out;
  r.emit(t, out, false);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

bool is_placeholder_name(const std::string& name) {
  if (name.empty() || name[0] != 'Y') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

namespace {

struct Token {
  enum Kind { Ident, Lambda, Dot, LParen, RParen, Comma, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex_term(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '\\') {
      out.push_back({Token::Lambda, "\\", i});
      ++i;
      continue;
    }
    // UTF-8 λ
    if (c == 0xce && i + 1 < src.size() &&
        static_cast<unsigned char>(src[i + 1]) == 0xbb) {
      out.push_back({Token::Lambda, "\xce\xbb", i});
      i += 2;
      continue;
    }
    if (c == '.') {
      out.push_back({Token::Dot, ".", i});
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::LParen, "(", i});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::RParen, ")", i});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Token::Comma, ",", i});
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_' || src[i] == '\''))
        ++i;
      out.push_back(
          {Token::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    throw SyntaxError("unexpected character '" + std::string(1, src[i]) +
                          "' in lambda term",
                      "offset " + std::to_string(i));
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

// Raw AST before variable/constant resolution.
struct Raw {
  enum Kind { Ident, Abs, App } kind;
  std::string name;                    // Ident, Abs binder
  std::shared_ptr<Raw> body, fn, arg;  // Abs / App
};
using RawPtr = std::shared_ptr<Raw>;

class TermParser {
public:
  explicit TermParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  RawPtr parse() {
    RawPtr t = term();
    expect(Token::End, "end of term");
    return t;
  }

private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(what, "offset " + std::to_string(peek().pos));
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what);
    return take();
  }

  RawPtr term() {
    if (peek().kind == Token::Lambda) {
      take();
      Token binder = expect(Token::Ident, "binder name after lambda");
      expect(Token::Dot, "'.' after binder");
      auto node = std::make_shared<Raw>();
      node->kind = Raw::Abs;
      node->name = binder.text;
      node->body = term();
      return node;
    }
    return apply();
  }

  RawPtr apply() {
    RawPtr head = atom();
    for (;;) {
      if (peek().kind == Token::LParen) {
        take();
        head = applied(std::move(head), term());
        while (peek().kind == Token::Comma) {
          take();
          head = applied(std::move(head), term());
        }
        expect(Token::RParen, "')'");
        continue;
      }
      if (peek().kind == Token::Ident) {
        head = applied(std::move(head), atom());
        continue;
      }
      return head;
    }
  }

  RawPtr atom() {
    if (peek().kind == Token::LParen) {
      take();
      RawPtr inner = term();
      expect(Token::RParen, "')'");
      return inner;
    }
    if (peek().kind == Token::Ident) {
      auto node = std::make_shared<Raw>();
      node->kind = Raw::Ident;
      node->name = take().text;
      return node;
    }
    fail("expected a term");
  }

  static RawPtr applied(RawPtr fn, RawPtr arg) {
    auto node = std::make_shared<Raw>();
    node->kind = Raw::App;
    node->fn = std::move(fn);
    node->arg = std::move(arg);
    return node;
  }
};

// Widest application count per identifier, for constant arities.
void collect_arities(const RawPtr& t, std::vector<std::string>& bound,
                     std::map<std::string, int>& arity, int applied_to) {
  switch (t->kind) {
    case Raw::Ident: {
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) {
        int& a = arity[t->name];
        a = std::max(a, applied_to);
      }
      return;
    }
    case Raw::Abs:
      bound.push_back(t->name);
      collect_arities(t->body, bound, arity, 0);
      bound.pop_back();
      return;
    case Raw::App:
      collect_arities(t->fn, bound, arity, applied_to + 1);
      collect_arities(t->arg, bound, arity, 0);
      return;
  }
}

TermPtr resolve(const RawPtr& t, std::vector<std::string>& bound,
                const std::map<std::string, int>& arity) {
  switch (t->kind) {
    case Raw::Ident: {
      bool is_bound =
          std::find(bound.begin(), bound.end(), t->name) != bound.end();
      if (is_bound || is_placeholder_name(t->name)) return var(t->name);
      if (t->name == "Id") return identity_term();
      return constant(t->name, arity.at(t->name));
    }
    case Raw::Abs: {
      bound.push_back(t->name);
      TermPtr body = resolve(t->body, bound, arity);
      bound.pop_back();
      return abs(t->name, std::move(body));
    }
    case Raw::App:
      return app(resolve(t->fn, bound, arity), resolve(t->arg, bound, arity));
  }
  return nullptr;  // unreachable
}

}  // namespace

TermPtr parse_lambda_term(std::string_view src) {
  TermParser parser(lex_term(src));
  RawPtr raw = parser.parse();
  std::map<std::string, int> arity;
  std::vector<std::string> bound;
  collect_arities(raw, bound, arity, 0);
  return resolve(raw, bound, arity);
}

}  // namespace mg
