#include "mg/expression.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <unordered_set>

namespace mg {

Expression leaf_expression(const LexicalItem& item) {
  Expression e;
  if (!item.phon.empty()) e.head.push_back(Segment{item.phon, 0});
  e.features = item.features;
  e.lexical = true;
  e.head_item = &item;
  return e;
}

bool smc_admissible(const std::vector<Chain>& movers) {
  std::unordered_set<std::string> bases;
  for (const auto& m : movers) {
    if (m.features.empty()) return false;
    if (!bases.insert(m.features.front().base).second) return false;
  }
  return true;
}

bool is_complete(const Expression& e) {
  return e.movers.empty() && e.features.size() == 1 &&
         e.features.front().kind == FeatureKind::Cat &&
         e.features.front().base == "c";
}

namespace {

const Chain* find_chain(const std::vector<Chain>& movers, std::uint64_t id) {
  for (const auto& m : movers)
    if (m.id == id) return &m;
  return nullptr;
}

void flatten(const PhonSeq& seq, const std::vector<Chain>& movers,
             std::vector<std::string>& out) {
  for (const auto& seg : seq) {
    if (seg.is_slot()) {
      if (const Chain* c = find_chain(movers, seg.slot))
        flatten(c->phon, movers, out);
    } else {
      out.insert(out.end(), seg.tokens.begin(), seg.tokens.end());
    }
  }
}

void write_seq(std::ostream& os, const PhonSeq& seq,
               std::map<std::uint64_t, std::size_t>& ids) {
  os << '[';
  bool first = true;
  for (const auto& seg : seq) {
    if (!first) os << ' ';
    first = false;
    if (seg.is_slot()) {
      auto [it, fresh] = ids.emplace(seg.slot, ids.size());
      os << '_' << it->second;
    } else {
      for (std::size_t i = 0; i < seg.tokens.size(); ++i)
        os << (i ? " " : "") << seg.tokens[i];
    }
  }
  os << ']';
}

}  // namespace

std::vector<std::string> materialize(const Expression& e) {
  std::vector<std::string> out;
  flatten(e.spec, e.movers, out);
  flatten(e.head, e.movers, out);
  flatten(e.comp, e.movers, out);
  return out;
}

std::string signature(const Expression& e) {
  std::map<std::uint64_t, std::size_t> ids;
  std::ostringstream os;
  write_seq(os, e.spec, ids);
  write_seq(os, e.head, ids);
  write_seq(os, e.comp, ids);
  os << ' ' << (e.lexical ? "::" : ":") << ' ';
  for (std::size_t i = 0; i < e.features.size(); ++i)
    os << (i ? " " : "") << to_string(e.features[i]);
  for (const auto& m : e.movers) {
    auto [it, fresh] = ids.emplace(m.id, ids.size());
    os << ", _" << it->second << '=';
    write_seq(os, m.phon, ids);
    for (const auto& f : m.features) os << ' ' << to_string(f);
  }
  return os.str();
}

std::uint64_t next_chain_id() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

}  // namespace mg
