#include "mg/render.hpp"

#include <sstream>

#include "json.hpp"

namespace mg {

namespace {

const char* variant_name(MergeVariant v) {
  switch (v) {
    case MergeVariant::Complement:
      return "complement";
    case MergeVariant::Specifier:
      return "specifier";
    case MergeVariant::IncorporateLeft:
      return "head-left";
    case MergeVariant::IncorporateRight:
      return "head-right";
  }
  return "?";
}

nlohmann::ordered_json json_rec(const DerivationTreePtr& t) {
  nlohmann::ordered_json j;
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      j["node"] = "leaf";
      j["item"] = t->item->id;
      j["phon"] = t->item->phon_string();
      j["features"] = to_string(t->item->features);
      break;
    case DerivationNode::Kind::Merge:
      j["node"] = "merge";
      j["variant"] = variant_name(t->variant);
      j["argBecameMover"] = t->arg_became_mover;
      j["features"] = to_string(t->expr.features);
      j["children"] = {json_rec(t->left), json_rec(t->right)};
      break;
    case DerivationNode::Kind::Move:
      j["node"] = "move";
      j["strength"] = t->strength == Strength::Strong ? "strong" : "weak";
      j["base"] = t->base;
      j["features"] = to_string(t->expr.features);
      j["children"] = {json_rec(t->child)};
      break;
  }
  return j;
}

nlohmann::ordered_json term_json_rec(const TermPtr& t) {
  nlohmann::ordered_json j;
  switch (t->kind) {
    case TermKind::Var:
      j["kind"] = "var";
      j["name"] = t->name;
      break;
    case TermKind::Const:
      j["kind"] = "const";
      j["name"] = t->name;
      j["arity"] = t->arity;
      break;
    case TermKind::Abs:
      j["kind"] = "abs";
      j["var"] = t->name;
      j["body"] = term_json_rec(t->body);
      break;
    case TermKind::App:
      j["kind"] = "app";
      j["fn"] = term_json_rec(t->fn);
      j["arg"] = term_json_rec(t->arg);
      break;
  }
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

int dot_rec(const DerivationTreePtr& t, int& counter, std::ostream& os) {
  int id = counter++;
  std::string head, detail;
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      head = t->item->phon_string();
      detail = to_string(t->item->features);
      break;
    case DerivationNode::Kind::Merge:
      head = std::string("merge ") + variant_name(t->variant);
      detail = to_string(t->expr.features);
      break;
    case DerivationNode::Kind::Move:
      head = std::string("move ") +
             (t->strength == Strength::Strong ? "+" : "*") + t->base;
      detail = to_string(t->expr.features);
      break;
  }
  os << "  n" << id << " [label=\"" << dot_escape(head) << "\\n"
     << dot_escape(detail) << "\"];\n";
  if (t->kind == DerivationNode::Kind::Merge) {
    int l = dot_rec(t->left, counter, os);
    int r = dot_rec(t->right, counter, os);
    os << "  n" << id << " -> n" << l << ";\n";
    os << "  n" << id << " -> n" << r << ";\n";
  } else if (t->kind == DerivationNode::Kind::Move) {
    int c = dot_rec(t->child, counter, os);
    os << "  n" << id << " -> n" << c << ";\n";
  }
  return id;
}

void qtree_rec(const DerivationTreePtr& t, std::ostream& os) {
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      os << '{' << t->item->phon_string() << " : "
         << to_string(t->item->features) << '}';
      break;
    case DerivationNode::Kind::Merge:
      os << "[.{merge " << variant_name(t->variant) << " : "
         << to_string(t->expr.features) << "} ";
      qtree_rec(t->left, os);
      os << ' ';
      qtree_rec(t->right, os);
      os << " ]";
      break;
    case DerivationNode::Kind::Move:
      os << "[.{move " << (t->strength == Strength::Strong ? "+" : "*")
         << t->base << " : " << to_string(t->expr.features) << "} ";
      qtree_rec(t->child, os);
      os << " ]";
      break;
  }
}

}  // namespace

std::string to_json(const DerivationTreePtr& tree) {
  return json_rec(tree).dump(2);
}

std::string to_json(const TermPtr& term) { return term_json_rec(term).dump(2); }

std::string to_dot(const DerivationTreePtr& tree) {
  std::ostringstream os;
  os << "digraph derivation {\n  node [shape=box];\n";
  int counter = 0;
  dot_rec(tree, counter, os);
  os << "}\n";
  return os.str();
}

std::string to_qtree(const DerivationTreePtr& tree) {
  std::ostringstream os;
  os << "\\Tree ";
  qtree_rec(tree, os);
  os << '\n';
  return os.str();
}

}  // namespace mg
