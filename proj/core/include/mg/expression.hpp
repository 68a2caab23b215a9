#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mg/feature.hpp"
#include "mg/lexicon.hpp"

namespace mg {

// Phonology is a sequence of segments.  A segment is either a run of
// surface tokens or a slot tied to a mover chain: when an argument merges
// as a mover, its tokens live in the chain and a slot marks the merge
// position.  Weak move discharges the chain into its slot (phonology stays
// in place); strong move deletes the slot and prepends the chain's tokens
// as a specifier.  The surface yield is read off by resolving slots.
struct Segment {
  std::vector<std::string> tokens;  // non-slot segments
  std::uint64_t slot = 0;           // != 0: slot of the chain with this id

  bool is_slot() const { return slot != 0; }
  bool operator==(const Segment&) const = default;
};
using PhonSeq = std::vector<Segment>;

// A moving sub-expression: captured phonology plus its unchecked licensees.
struct Chain {
  std::uint64_t id = 0;
  PhonSeq phon;
  std::vector<Feature> features;  // non-empty; first is Lic-

  bool operator==(const Chain&) const = default;
};

struct Expression {
  PhonSeq spec, head, comp;
  std::vector<Feature> features;  // remaining features of the head
  std::vector<Chain> movers;      // kept sorted by id
  bool lexical = true;            // never yet merged
  const LexicalItem* head_item = nullptr;  // current head's lexical item

  bool operator==(const Expression& o) const {
    return spec == o.spec && head == o.head && comp == o.comp &&
           features == o.features && movers == o.movers &&
           lexical == o.lexical;
  }
};

// Leaf expression for a lexical item (the item must outlive the expression).
Expression leaf_expression(const LexicalItem& item);

// True iff no two chains share the base of their first licensee.
bool smc_admissible(const std::vector<Chain>& movers);

// True iff features are exactly [Cat(c)] and no movers remain.
bool is_complete(const Expression& e);

// Surface tokens: spec · head · comp with live chains resolved in place.
std::vector<std::string> materialize(const Expression& e);

// Canonical one-line form for memoization signatures and debugging; chain
// ids are renumbered by first occurrence so structurally equal expressions
// built at different times produce identical signatures.
std::string signature(const Expression& e);

// Fresh process-unique chain id.
std::uint64_t next_chain_id();

}  // namespace mg
