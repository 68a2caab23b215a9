#include "mg/clitic_order.hpp"

#include <algorithm>
#include <array>

namespace mg {

namespace {

constexpr std::array<const char*, 7> kCaseNames = {
    "nominative", "negative",  "reflexive", "accusative",
    "dative",     "locative",  "genitive"};

}  // namespace

std::string to_string(CliticCase c) {
  return kCaseNames[static_cast<std::size_t>(c)];
}

std::optional<CliticCase> clitic_case_from_string(const std::string& name) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i)
    if (name == kCaseNames[i]) return static_cast<CliticCase>(i);
  return std::nullopt;
}

bool check_clitic_order(const CliticCluster& cluster) {
  // States 0..7: 0 = nothing seen, i = slot i-1 was the last clitic.
  int state = 0;
  for (CliticCase c : cluster) {
    int slot = static_cast<int>(c) + 1;
    if (slot <= state) return false;  // repeat or out of order
    state = slot;
  }
  return true;
}

const std::vector<std::string>& clitic_state_order() {
  static const std::vector<std::string> order = {
      "clitic", "genitif", "oblique", "dat", "acc", "endclitic", "nom"};
  return order;
}

bool is_clitic_state(const std::string& base) {
  const auto& order = clitic_state_order();
  return std::find(order.begin(), order.end(), base) != order.end();
}

bool clitic_edge_allowed(const std::string& from, const std::string& to) {
  const auto& order = clitic_state_order();
  auto f = std::find(order.begin(), order.end(), from);
  auto t = std::find(order.begin(), order.end(), to);
  if (f == order.end() || t == order.end()) return false;
  return f < t;
}

std::optional<CliticCase> clitic_case_for_licensor(const std::string& base) {
  if (base == "g" || base == "h") return CliticCase::Accusative;
  if (base == "f") return CliticCase::Dative;
  if (base == "en") return CliticCase::Genitive;
  if (base == "y") return CliticCase::Locative;
  if (base == "subj") return CliticCase::Nominative;
  return std::nullopt;
}

namespace {

void collect_discharges(const DerivationTreePtr& t, CliticCluster& out) {
  switch (t->kind) {
    case DerivationNode::Kind::Leaf:
      return;
    case DerivationNode::Kind::Merge:
      collect_discharges(t->left, out);
      collect_discharges(t->right, out);
      return;
    case DerivationNode::Kind::Move:
      collect_discharges(t->child, out);
      if (auto c = clitic_case_for_licensor(t->base)) out.push_back(*c);
      return;
  }
}

}  // namespace

CliticCluster extract_clitic_cluster(const DerivationTreePtr& tree) {
  CliticCluster cluster;
  collect_discharges(tree, cluster);
  std::reverse(cluster.begin(), cluster.end());
  return cluster;
}

}  // namespace mg
