#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "umf/candidates.hpp"
#include "umf/profile.hpp"

namespace umf {

struct Sense {
  std::string sense_id;
  std::vector<std::string> target_forms;                    // NFC, disjoint across senses
  std::vector<std::pair<std::string, double>> indicators;   // source word -> weight
};

struct SenseEntry {
  std::string lemma;             // lowercase source lemma
  std::vector<Sense> senses;     // >= 2; order is the tie-break order
};

/// Polysemous source words mapped to target senses with contextual
/// indicators. Immutable after load.
struct SenseLexicon {
  std::map<std::string, SenseEntry> entries;

  const SenseEntry* find_lemma(std::string_view lowercased_token) const;
};

/// Loads the lexicon JSON: {"entries": {lemma: [{"sense_id", "target_forms":
/// [...], "indicators": {word: weight}}]}}. Validates that each entry has
/// >= 2 senses and that target_forms are disjoint across senses.
SenseLexicon load_lexicon(const std::filesystem::path& path);
SenseLexicon parse_lexicon(const Json& doc);

struct AmbiguityHit {
  std::string source_word;   // token as written (lowercased)
  std::size_t token_index;
  const SenseEntry* entry;   // owned by the lexicon
};

/// One hit per source token whose lowercased lemma matches a lexicon entry.
std::vector<AmbiguityHit> detect_ambiguities(const std::string& source_text,
                                             const SenseLexicon& lexicon);

struct SenseResolution {
  std::string source_word;
  std::string lemma;
  std::string chosen;                            // sense_id with maximal score
  std::map<std::string, double> score_by_sense;
  bool confident = false;                        // top - runner-up >= margin
};

inline constexpr double kConfidenceMargin = 1.0;

/// Scores each sense by summing indicator weights over indicators present in
/// the source tokens; argmax wins, lexicon order breaks ties (unconfident).
SenseResolution resolve_sense(const AmbiguityHit& hit,
                              const std::vector<std::string>& source_tokens);

/// Token-level logit adjustments forwarded to the generator.
struct BiasMap {
  std::map<std::string, double> adjustments;  // target form -> logit delta

  bool empty() const { return adjustments.empty(); }
};

inline constexpr double kDefaultBoost = 1.0;
inline constexpr double kDefaultPenalty = 0.5;

/// +boost on every target form of each confident resolution's chosen sense,
/// -penalty on the forms of its rejected senses. Unconfident resolutions
/// contribute nothing.
BiasMap build_bias_map(std::span<const SenseResolution> resolutions,
                       const SenseLexicon& lexicon, double boost = kDefaultBoost,
                       double penalty = kDefaultPenalty);

/// Per-candidate sense compliance: over confident resolutions, 1.0 when the
/// candidate contains a chosen-sense form, 0.0 when it contains a rejected
/// form, 0.5 when neither; averaged. No confident resolutions -> 1.0.
double score_sense_compliance(const Candidate& candidate,
                              std::span<const SenseResolution> resolutions,
                              const SenseLexicon& lexicon);

Json bias_map_to_json(const BiasMap& bias);

}  // namespace umf
