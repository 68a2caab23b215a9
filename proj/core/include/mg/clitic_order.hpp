#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mg/derivation.hpp"

namespace mg {

// Surface slot classes of a French preverbal clitic cluster, in their
// obligatory left-to-right order:
//
//   nominative | negative | reflexive | accusative | dative | locative | genitive
//
// A cluster is well formed iff its cases form a subsequence of that order
// with at most one clitic per slot.

enum class CliticCase {
  Nominative,
  Negative,
  Reflexive,
  Accusative,
  Dative,
  Locative,
  Genitive,
};

using CliticCluster = std::vector<CliticCase>;

std::string to_string(CliticCase c);
std::optional<CliticCase> clitic_case_from_string(const std::string& name);

// Left-to-right FSA over the seven slots (one state per slot plus start).
// Accepts exactly the strictly slot-increasing sequences.
bool check_clitic_order(const CliticCluster& cluster);

// ---------------------------------------------------------------------------
// Cliticization state machine of the lexicon.  Cluster construction walks
// category states strictly forward along
//
//   verbe → clitic → genitif → oblique → dat → acc → endclitic → nom
//
// so a lexical entry consuming state `from` (selector base) and producing
// state `to` (category base) is only admissible when `from` precedes `to`.
// Because every clitic attaches to the RIGHT of the existing cluster head,
// later attachment means further left on the surface; the forward walk
// therefore yields exactly the surface slot order above.

const std::vector<std::string>& clitic_state_order();
bool is_clitic_state(const std::string& base);

// True iff `from` strictly precedes `to` in the state order.
bool clitic_edge_allowed(const std::string& from, const std::string& to);

// Maps a clitic's licensor base (g, h, f, en, y, subj) to the surface slot
// it fills; nullopt for non-clitic licensors (k, disloc, case).  h is the
// accusative slot of a dislocation-doubling clitic.
std::optional<CliticCase> clitic_case_for_licensor(const std::string& base);

// The cases of the clitics a derivation reunites with their traces, in
// surface left-to-right order.  Each clitic fires its licensor exactly
// once, and later attachments surface further left, so the cluster is the
// reverse of the bottom-up discharge order.
CliticCluster extract_clitic_cluster(const DerivationTreePtr& tree);

}  // namespace mg
