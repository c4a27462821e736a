#include "umf/pipeline.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

std::vector<CorpusSentence> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path.string());
  std::vector<CorpusSentence> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!doc.contains("sentence_id") || !doc.contains("source_text")) {
      throw SchemaError(path.string() + ":" + std::to_string(line_no) +
                        ": corpus lines need sentence_id and source_text");
    }
    CorpusSentence s;
    s.sentence_id = doc["sentence_id"].get<std::string>();
    s.source_text = doc["source_text"].get<std::string>();
    if (doc.contains("formal")) s.formal = doc["formal"].get<bool>();
    if (doc.contains("phenomena")) {
      for (const auto& tag : doc["phenomena"]) s.phenomena.push_back(tag.get<std::string>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

TranslateSummary run_translate(const std::vector<CorpusSentence>& corpus,
                               CandidateSource& source, const LanguageProfile& src,
                               const LanguageProfile& tgt, const SenseLexicon* lexicon,
                               const TranslateOptions& options, std::ostream& results_out,
                               std::ostream& diag) {
  if (corpus.empty()) throw EmptyInput("empty corpus");

  const Reranker reranker(src, tgt, lexicon, options.rerank, options.weight_override);

  struct Slot {
    std::string line;   // serialized result, empty on failure
    std::string error;
    bool changed = false;
  };
  std::vector<Slot> slots(corpus.size());

  // bounded in-flight processing; output is assembled in input order below
  const int jobs = std::max(1, options.jobs);
  std::atomic<std::size_t> next{0};
  std::mutex source_mutex;  // candidate sources may not be thread-safe

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      const CorpusSentence& sentence = corpus[i];
      try {
        GeneratorRequest request;
        request.source_text = sentence.source_text;
        request.source_lang = src.language_code;
        request.target_lang = tgt.language_code;
        request.n = options.rerank.beam_width;
        if (lexicon != nullptr) {
          const auto tokens = source_tokens(sentence.source_text);
          std::vector<SenseResolution> resolutions;
          for (const AmbiguityHit& hit : detect_ambiguities(sentence.source_text, *lexicon)) {
            resolutions.push_back(resolve_sense(hit, tokens));
          }
          request.bias =
              build_bias_map(resolutions, *lexicon, options.rerank.boost, options.rerank.penalty);
        }

        FetchResult fetched;
        {
          std::lock_guard<std::mutex> lock(source_mutex);
          fetched = source.fetch(sentence.sentence_id, request);
        }

        RerankResult result;
        if (options.analyzer) {
          result = reranker.rerank_with_cues(fetched.set, options.analyzer(sentence));
        } else {
          result = reranker.rerank(fetched.set, sentence.formal);
        }
        result.honored_bias = fetched.honored_bias;

        Slot& slot = slots[i];
        slot.line = rerank_result_to_json(result).dump();
        slot.changed = result.changed;
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };

  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  TranslateSummary summary;
  summary.total = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!slots[i].error.empty()) {
      ++summary.failed;
      diag << "umf: sentence '" << corpus[i].sentence_id << "' failed: " << slots[i].error
           << "\n";
      continue;
    }
    results_out << slots[i].line << "\n";
    if (slots[i].changed) ++summary.changed;
  }
  const std::size_t completed = summary.total - summary.failed;
  summary.change_rate_pct = completed == 0 ? 0.0 : change_rate(summary.changed, completed);
  return summary;
}

std::vector<ResultRecord> read_result_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open results file: " + path.string());
  std::vector<ResultRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ResultRecord record;
    record.sentence_id = doc.at("sentence_id").get<std::string>();
    record.changed = doc.at("changed").get<bool>();
    if (doc.contains("per_candidate")) {
      const int chosen_rank = doc.at("chosen").at("rank").get<int>();
      for (const auto& entry : doc["per_candidate"]) {
        if (entry.at("rank").get<int>() == chosen_rank) {
          record.chosen_umf_score = entry.value("umf_score", 0.0);
        }
      }
    }
    out.push_back(std::move(record));
  }
  return out;
}

namespace {

struct SentenceLabels {
  std::map<std::string, Classification> by_annotator;
  std::optional<Classification> adjudicated;
};

}  // namespace

MetricsReport run_evaluate(const std::vector<ResultRecord>& results,
                           const std::vector<InterventionLabel>& labels,
                           const EvaluateOptions& options) {
  if (results.empty()) throw EmptyInput("no results to evaluate");

  std::set<std::string> known_ids;
  std::set<std::string> intervened_ids;
  std::vector<double> chosen_scores;
  for (const ResultRecord& r : results) {
    known_ids.insert(r.sentence_id);
    if (r.changed) intervened_ids.insert(r.sentence_id);
    chosen_scores.push_back(r.chosen_umf_score);
  }

  std::map<std::string, SentenceLabels> grouped;
  std::set<std::string> annotators;
  for (const InterventionLabel& label : labels) {
    if (!known_ids.count(label.sentence_id)) {
      throw IdMismatch("label references unknown sentence id '" + label.sentence_id + "'");
    }
    SentenceLabels& sl = grouped[label.sentence_id];
    if (label.annotator_id == kAdjudicatorId) {
      sl.adjudicated = label.classification;
    } else {
      sl.by_annotator[label.annotator_id] = label.classification;
      annotators.insert(label.annotator_id);
    }
  }

  MetricsReport report;
  report.language = options.language;
  report.total_cases = results.size();
  report.interventions = intervened_ids.size();
  report.change_rate_pct = change_rate(report.interventions, report.total_cases);
  report.mean_umf_score = mean_compliance(chosen_scores);

  // adjudicate per labeled intervention
  std::size_t adjudicated_total = 0;
  for (const auto& [id, sl] : grouped) {
    if (!intervened_ids.count(id)) {
      report.warnings.push_back("label for unchanged sentence '" + id + "' ignored");
      continue;
    }
    std::optional<Classification> final_cls;
    if (sl.by_annotator.size() == 1) {
      final_cls = sl.by_annotator.begin()->second;
    } else if (sl.by_annotator.size() >= 2) {
      const Classification first = sl.by_annotator.begin()->second;
      bool agree = true;
      for (const auto& [annot, cls] : sl.by_annotator) {
        if (cls != first) agree = false;
      }
      if (agree) {
        final_cls = first;
      } else if (sl.adjudicated) {
        final_cls = *sl.adjudicated;
      } else {
        report.excluded += 1;
        report.warnings.push_back("sentence '" + id +
                                  "' excluded: annotators disagree without adjudication");
        continue;
      }
    } else if (sl.adjudicated) {
      final_cls = *sl.adjudicated;
    }
    if (!final_cls) continue;
    ++adjudicated_total;
    switch (*final_cls) {
      case Classification::improvement: ++report.improvements; break;
      case Classification::neutral: ++report.neutrals; break;
      case Classification::error: ++report.errors; break;
    }
  }

  if (adjudicated_total > 0) {
    // precision/gain-risk are computed over adjudicated interventions
    report.intervention_precision_pct =
        intervention_precision(report.improvements, adjudicated_total);
    report.gain_risk_ratio = gain_risk(report.improvements, report.errors, adjudicated_total);
    if (adjudicated_total + report.excluded < report.interventions) {
      report.warnings.push_back("only " + std::to_string(adjudicated_total) + " of " +
                                std::to_string(report.interventions) +
                                " interventions carry labels");
    }
  }

  // kappa when exactly two annotators labeled a common subset
  if (annotators.size() == 2) {
    const std::string a = *annotators.begin();
    const std::string b = *std::next(annotators.begin());
    std::vector<Classification> la;
    std::vector<Classification> lb;
    for (const auto& [id, sl] : grouped) {
      auto ita = sl.by_annotator.find(a);
      auto itb = sl.by_annotator.find(b);
      if (ita != sl.by_annotator.end() && itb != sl.by_annotator.end()) {
        la.push_back(ita->second);
        lb.push_back(itb->second);
      }
    }
    if (!la.empty()) report.kappa = cohen_kappa(la, lb);
  }

  if (!options.divergence_change_pairs.empty() && options.divergence_change_pairs.size() >= 2) {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& [divergence, change] : options.divergence_change_pairs) {
      x.push_back(divergence);
      y.push_back(change);
    }
    report.divergence_correlation = pearson_correlation(x, y);
  }
  return report;
}

}  // namespace umf
