#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "umf/candidates.hpp"
#include "umf/directive.hpp"
#include "umf/scorers.hpp"
#include "umf/senses.hpp"

namespace umf {

struct RerankConfig {
  double alpha = 0.5;                  // Eq. mixing parameter
  double activation_threshold = 0.1;
  int top_k = 4;                       // candidates retained for scoring
  int beam_width = 32;
  double boost = kDefaultBoost;
  double penalty = kDefaultPenalty;
  bool score_all = false;              // score all beam_width candidates (ablation)
  bool raw_model_scores = false;       // skip min-max normalization (comparison)

  void validate() const;  // throws RangeError
};

/// Min-max normalization of model_score over the candidate set, keyed by
/// original_rank. Single candidate or all-equal scores -> all 1.0.
std::map<int, double> normalize_model_scores(const std::vector<Candidate>& candidates);

/// alpha * model + (1 - alpha) * umf; all inputs must lie in [0,1].
double final_score(double model, double umf, double alpha);

/// Final scores within this distance are ties, resolved toward the lower
/// original rank.
inline constexpr double kTieEpsilon = 1e-12;

struct CandidateTrace {
  Candidate candidate;
  double normalized_model_score = 0.0;
  double umf_score = 0.0;         // raw compliance average (pre sense gate)
  double sense_compliance = 1.0;
  double final_score = 0.0;
  ScoreSet dimension_scores;
};

struct RerankResult {
  std::string sentence_id;
  std::string source_text;
  std::string target_lang;
  Candidate chosen;
  Candidate baseline;             // original_rank 1
  bool changed = false;           // chosen.original_rank != 1
  std::string skip_reason;        // non-empty when reranking was skipped
  std::vector<CandidateTrace> per_candidate;
  std::optional<bool> honored_bias;  // generator provenance, when known
};

/// Combines model confidence with typological compliance. The directive is
/// computed once at construction; an identical-language pair (zero directive)
/// puts the reranker into skip mode where every result is the baseline.
class Reranker {
 public:
  Reranker(const LanguageProfile& src, const LanguageProfile& tgt,
           const SenseLexicon* lexicon, RerankConfig config,
           const std::optional<DimensionArray<double>>& weight_override = {});

  RerankResult rerank(const CandidateSet& set,
                      std::optional<bool> formal_flag = {}) const;

  /// Variant taking precomputed source cues (pipeline hook for an external
  /// analyzer).
  RerankResult rerank_with_cues(const CandidateSet& set, const SourceCues& cues) const;

  const DirectiveVector* directive() const {
    return directive_ ? &*directive_ : nullptr;
  }
  bool degenerate_pair() const { return !directive_.has_value(); }
  const RerankConfig& config() const { return config_; }

 private:
  LanguageProfile src_;
  LanguageProfile tgt_;
  const SenseLexicon* lexicon_;  // nullable, not owned
  RerankConfig config_;
  std::optional<DirectiveVector> directive_;
};

Json rerank_result_to_json(const RerankResult& result, bool with_dimension_scores = true);
RerankResult rerank_result_from_json(const Json& doc);

}  // namespace umf
