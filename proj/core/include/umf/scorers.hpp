#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umf/candidates.hpp"
#include "umf/directive.hpp"
#include "umf/profile.hpp"
#include "umf/text.hpp"

namespace umf {

/// A marker occurrence backing a score: `position` is the byte offset of the
/// marker in the candidate text.
struct MatchEvidence {
  std::string marker;
  std::size_t position = 0;
};

struct DimensionScore {
  DimensionId dimension = DimensionId::word_order;
  double score = 0.0;  // in [0,1]
  std::vector<MatchEvidence> evidence;
};

/// Scores for the dimensions that were applicable; a dimension absent from
/// the map was skipped (not-applicable) and is excluded from both sums of the
/// compliance average.
using ScoreSet = std::map<DimensionId, DimensionScore>;

enum class Register { informal, formal };

/// Source-side cues driving the applicability gates. Produced by the shipped
/// English keyword detector; the pipeline accepts a substitute analyzer.
struct SourceCues {
  bool negated = false;
  bool relative_clause = false;
  bool copula = false;
  Register register_ = Register::informal;
};

/// Keyword-based cue detection over the source sentence. `formal_flag`, when
/// present (corpus-supplied), overrides register detection.
SourceCues detect_source_cues(const std::string& source_text,
                              std::optional<bool> formal_flag = {});

/// Word-order compliance. SOV targets: 1.0 iff the final token ends with any
/// verb_final_suffix (MissingMarkers when the inventory is empty). VSO
/// targets: 1.0 iff the first token bears a tam/agreement verb marker. SVO
/// targets: 1.0 unconditionally.
DimensionScore score_word_order(const Candidate& candidate, const LanguageProfile& target);

/// Case-suffix density: observed suffix-bearing tokens over
/// round(case_richness * token count), clipped at 1; expected 0 -> 1.0.
DimensionScore score_case_marking(const Candidate& candidate, const LanguageProfile& target);

inline constexpr double kMorphologyMinLength = 3.0;
inline constexpr double kMorphologySpan = 6.0;

/// Mean token length ramp: clamp((L - 3) / (6 * complexity), 0, 1).
DimensionScore score_morphology(const Candidate& candidate, const LanguageProfile& target);

/// Generic presence-density scorer for the marker dimensions: fraction of the
/// dimension's expected marker roles found in the candidate. Honorifics
/// compare the candidate's register against the source register instead.
/// Returns nullopt when the dimension is not applicable for this sentence
/// (gate closed, or the profile ships no observable roles for it).
std::optional<DimensionScore> score_marker_dimension(const Candidate& candidate,
                                                     const LanguageProfile& target,
                                                     DimensionId dimension,
                                                     const SourceCues& cues);

/// Scores every active dimension of the directive, applying the
/// applicability gates; inapplicable dimensions are absent from the result.
ScoreSet score_candidate(const Candidate& candidate, const LanguageProfile& target,
                         const DirectiveVector& directive, const SourceCues& cues);

/// Eq-style weighted average: sum(directive[i]*score[i]) / sum(directive[i])
/// over dimensions both active and present in `scores`. Throws
/// NoActiveDimensions when that set is empty or carries zero directive mass.
double compute_umf_score(const ScoreSet& scores, const DirectiveVector& directive);

Json score_set_to_json(const ScoreSet& scores, bool with_evidence = true);

}  // namespace umf
