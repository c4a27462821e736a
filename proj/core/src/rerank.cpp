#include "umf/rerank.hpp"

#include <algorithm>
#include <cmath>

#include "umf/errors.hpp"

namespace umf {

void RerankConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw RangeError("alpha must lie in [0,1]");
  if (top_k < 1) throw RangeError("top_k must be >= 1");
  if (beam_width < top_k) throw RangeError("beam_width must be >= top_k");
  if (!(activation_threshold >= 0.0 && activation_threshold <= 1.0)) {
    throw RangeError("activation threshold must lie in [0,1]");
  }
  if (!(boost > 0.0) || penalty < 0.0) {
    throw RangeError("boost must be > 0 and penalty >= 0");
  }
}

std::map<int, double> normalize_model_scores(const std::vector<Candidate>& candidates) {
  if (candidates.empty()) throw EmptySet("no candidates to normalize");
  double lo = candidates.front().model_score;
  double hi = lo;
  for (const Candidate& c : candidates) {
    lo = std::min(lo, c.model_score);
    hi = std::max(hi, c.model_score);
  }
  std::map<int, double> out;
  for (const Candidate& c : candidates) {
    out[c.original_rank] = hi > lo ? (c.model_score - lo) / (hi - lo) : 1.0;
  }
  return out;
}

double final_score(double model, double umf, double alpha) {
  if (!(model >= 0.0 && model <= 1.0 && umf >= 0.0 && umf <= 1.0 &&
        alpha >= 0.0 && alpha <= 1.0)) {
    throw RangeError("final_score inputs must lie in [0,1]");
  }
  return alpha * model + (1.0 - alpha) * umf;
}

Reranker::Reranker(const LanguageProfile& src, const LanguageProfile& tgt,
                   const SenseLexicon* lexicon, RerankConfig config,
                   const std::optional<DimensionArray<double>>& weight_override)
    : src_(src), tgt_(tgt), lexicon_(lexicon), config_(config) {
  config_.validate();
  try {
    directive_ = build_directive(src_, tgt_, config_.activation_threshold, weight_override);
  } catch (const ZeroVector&) {
    directive_.reset();  // identical-language pair: skip mode
  }
}

RerankResult Reranker::rerank(const CandidateSet& set, std::optional<bool> formal_flag) const {
  return rerank_with_cues(set, detect_source_cues(set.source_text, formal_flag));
}

RerankResult Reranker::rerank_with_cues(const CandidateSet& set, const SourceCues& cues) const {
  if (set.candidates.empty()) throw EmptySet("candidate set '" + set.sentence_id + "' is empty");

  RerankResult result;
  result.sentence_id = set.sentence_id;
  result.source_text = set.source_text;
  result.target_lang = set.target_lang;
  result.baseline = set.candidates.front();

  if (!directive_) {
    result.chosen = result.baseline;
    result.changed = false;
    result.skip_reason = "identical-language pair: zero directive vector";
    return result;
  }

  // top-K retention by original rank precedes scoring
  std::vector<Candidate> retained = set.candidates;
  std::sort(retained.begin(), retained.end(), [](const Candidate& a, const Candidate& b) {
    return a.original_rank < b.original_rank;
  });
  if (!config_.score_all && retained.size() > static_cast<std::size_t>(config_.top_k)) {
    retained.resize(static_cast<std::size_t>(config_.top_k));
  }

  std::map<int, double> model_norm;
  if (config_.raw_model_scores) {
    for (const Candidate& c : retained) {
      model_norm[c.original_rank] = std::clamp(c.model_score, 0.0, 1.0);
    }
  } else {
    model_norm = normalize_model_scores(retained);
  }

  std::vector<SenseResolution> resolutions;
  if (lexicon_ != nullptr) {
    const auto tokens = source_tokens(set.source_text);
    for (const AmbiguityHit& hit : detect_ambiguities(set.source_text, *lexicon_)) {
      resolutions.push_back(resolve_sense(hit, tokens));
    }
  }

  const Candidate* best = nullptr;
  double best_score = -1.0;
  for (const Candidate& c : retained) {
    CandidateTrace trace;
    trace.candidate = c;
    trace.normalized_model_score = model_norm[c.original_rank];
    trace.dimension_scores = score_candidate(c, tgt_, *directive_, cues);
    trace.umf_score = compute_umf_score(trace.dimension_scores, *directive_);
    trace.sense_compliance =
        lexicon_ ? score_sense_compliance(c, resolutions, *lexicon_) : 1.0;
    trace.final_score = final_score(trace.normalized_model_score,
                                    trace.umf_score * trace.sense_compliance, config_.alpha);

    // strict improvement beyond the tie window; ties keep the lower rank
    const bool wins =
        best == nullptr ||
        (trace.final_score > best_score + kTieEpsilon) ||
        (std::fabs(trace.final_score - best_score) <= kTieEpsilon &&
         c.original_rank < best->original_rank);
    if (wins) {
      best = &c;
      best_score = trace.final_score;
    }
    result.per_candidate.push_back(std::move(trace));
  }

  result.chosen = *best;
  result.changed = result.chosen.original_rank != 1;
  return result;
}

Json rerank_result_to_json(const RerankResult& result, bool with_dimension_scores) {
  Json doc = Json::object();
  doc["sentence_id"] = result.sentence_id;
  doc["source_text"] = result.source_text;
  doc["target_lang"] = result.target_lang;
  auto candidate_json = [](const Candidate& c) {
    return Json{{"text", c.text}, {"model_score", c.model_score}, {"rank", c.original_rank}};
  };
  doc["chosen"] = candidate_json(result.chosen);
  doc["baseline"] = candidate_json(result.baseline);
  doc["changed"] = result.changed;
  if (!result.skip_reason.empty()) doc["skip_reason"] = result.skip_reason;
  if (result.honored_bias.has_value()) {
    doc["provenance"] = Json{{"honored_bias", *result.honored_bias}};
  }
  Json per = Json::array();
  for (const CandidateTrace& t : result.per_candidate) {
    Json entry = Json::object();
    entry["rank"] = t.candidate.original_rank;
    entry["text"] = t.candidate.text;
    entry["model_score"] = t.candidate.model_score;
    entry["normalized_model_score"] = t.normalized_model_score;
    entry["umf_score"] = t.umf_score;
    entry["sense_compliance"] = t.sense_compliance;
    entry["final_score"] = t.final_score;
    if (with_dimension_scores) {
      entry["dimension_scores"] = score_set_to_json(t.dimension_scores, /*with_evidence=*/false);
    }
    per.push_back(std::move(entry));
  }
  doc["per_candidate"] = per;
  return doc;
}

RerankResult rerank_result_from_json(const Json& doc) {
  RerankResult result;
  result.sentence_id = doc.at("sentence_id").get<std::string>();
  result.source_text = doc.at("source_text").get<std::string>();
  result.target_lang = doc.value("target_lang", std::string());
  auto parse_candidate = [](const Json& j) {
    Candidate c;
    c.text = j.at("text").get<std::string>();
    c.model_score = j.value("model_score", 0.0);
    c.original_rank = j.at("rank").get<int>();
    return c;
  };
  result.chosen = parse_candidate(doc.at("chosen"));
  result.baseline = parse_candidate(doc.at("baseline"));
  result.changed = doc.at("changed").get<bool>();
  result.skip_reason = doc.value("skip_reason", std::string());
  if (doc.contains("provenance") && doc["provenance"].contains("honored_bias")) {
    result.honored_bias = doc["provenance"]["honored_bias"].get<bool>();
  }
  if (doc.contains("per_candidate")) {
    for (const auto& entry : doc["per_candidate"]) {
      CandidateTrace t;
      t.candidate.original_rank = entry.at("rank").get<int>();
      t.candidate.text = entry.at("text").get<std::string>();
      t.candidate.model_score = entry.value("model_score", 0.0);
      t.normalized_model_score = entry.value("normalized_model_score", 0.0);
      t.umf_score = entry.value("umf_score", 0.0);
      t.sense_compliance = entry.value("sense_compliance", 1.0);
      t.final_score = entry.value("final_score", 0.0);
      result.per_candidate.push_back(std::move(t));
    }
  }
  return result;
}

}  // namespace umf
