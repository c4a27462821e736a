#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "umf/generator.hpp"
#include "umf/metrics.hpp"
#include "umf/rerank.hpp"

namespace umf {

struct CorpusSentence {
  std::string sentence_id;
  std::string source_text;
  std::optional<bool> formal;
  std::vector<std::string> phenomena;
};

/// JSONL corpus, one {"sentence_id", "source_text", ...} object per line.
std::vector<CorpusSentence> read_corpus(const std::filesystem::path& path);

/// Substitution point for an external linguistic analyzer (stage-1 input
/// analysis); the default wraps detect_source_cues.
using SourceAnalyzer = std::function<SourceCues(const CorpusSentence&)>;

struct TranslateOptions {
  RerankConfig rerank;
  int jobs = 8;  // bounded in-flight sentences
  std::optional<DimensionArray<double>> weight_override;
  SourceAnalyzer analyzer;  // empty -> keyword cue detector
};

struct TranslateSummary {
  std::size_t total = 0;
  std::size_t changed = 0;
  std::size_t failed = 0;
  double change_rate_pct = 0.0;
};

/// For each sentence: detect ambiguities, resolve senses, build the bias map,
/// fetch candidates, rerank, append the result to `results_out` (JSONL, input
/// order). Per-sentence failures are reported on `diag` and skipped.
TranslateSummary run_translate(const std::vector<CorpusSentence>& corpus,
                               CandidateSource& source, const LanguageProfile& src,
                               const LanguageProfile& tgt, const SenseLexicon* lexicon,
                               const TranslateOptions& options, std::ostream& results_out,
                               std::ostream& diag);

/// Minimal per-sentence view of a results file needed for evaluation.
struct ResultRecord {
  std::string sentence_id;
  bool changed = false;
  double chosen_umf_score = 0.0;
};

std::vector<ResultRecord> read_result_records(const std::filesystem::path& path);

struct EvaluateOptions {
  std::string language;  // report row label
  /// Per-language (divergence magnitude, change rate) pairs for the optional
  /// correlation helper.
  std::vector<std::pair<double, double>> divergence_change_pairs;
};

/// Joins rerank results with human labels: adjudicates disagreements (a row
/// with annotator_id "adjudicator" wins; unresolved disagreements are
/// excluded with a warning), computes the metric suite, and kappa when two
/// annotators are present. Throws IdMismatch when a label references an
/// unknown sentence id.
MetricsReport run_evaluate(const std::vector<ResultRecord>& results,
                           const std::vector<InterventionLabel>& labels,
                           const EvaluateOptions& options = {});

inline constexpr std::string_view kAdjudicatorId = "adjudicator";

}  // namespace umf
