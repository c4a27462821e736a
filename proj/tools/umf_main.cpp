#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "umf/directive.hpp"
#include "umf/divergence.hpp"
#include "umf/errors.hpp"
#include "umf/generator.hpp"
#include "umf/metrics.hpp"
#include "umf/pipeline.hpp"
#include "umf/profile.hpp"
#include "umf/rerank.hpp"

namespace {

struct GlobalOptions {
  std::string profiles_dir = "data/profiles";
  std::string config_file;
  long seed = 0;  // reserved; the pipeline is deterministic
};

umf::LanguageProfile load_language(const GlobalOptions& global, const std::string& code) {
  return umf::load_profile(std::filesystem::path(global.profiles_dir) /
                           (code + ".profile.json"));
}

umf::Json load_config_doc(const std::string& path) {
  if (path.empty()) return umf::Json();
  std::ifstream in(path);
  if (!in) throw umf::ParseError("cannot open config file: " + path);
  try {
    return umf::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw umf::ParseError(std::string("malformed config JSON: ") + e.what());
  }
}

// precedence: CLI flag > config file > built-in default
template <typename T>
void config_fill(const umf::Json& doc, CLI::App* cmd, const char* key, const char* flag,
                 T& target) {
  if (!doc.is_object() || !doc.contains(key)) return;
  const CLI::Option* opt = cmd->get_option_no_throw(flag);
  if (opt != nullptr && opt->count() > 0) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw umf::ParseError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::optional<umf::DimensionArray<double>> load_weights_flag(const std::string& weights_file,
                                                             const umf::LanguageProfile& tgt) {
  if (weights_file.empty()) return std::nullopt;
  return umf::load_weight_overrides(weights_file, umf::profile_weights(tgt));
}

std::unique_ptr<umf::CandidateSource> make_source(const std::string& candidates_file) {
  if (!candidates_file.empty()) {
    return std::make_unique<umf::FileCandidateSource>(candidates_file);
  }
  return std::make_unique<umf::HttpCandidateSource>(umf::http_config_from_env());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typological reranking for black-box translation candidates"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--profiles", global.profiles_dir, "Directory with <code>.profile.json files");
  app.add_option("--config", global.config_file, "JSON config file (flag defaults)");
  app.add_option("--seed", global.seed, "Reserved; runs are deterministic");

  std::string src_code = "en";
  std::string tgt_code = "si";
  std::string candidates_file;
  std::string lexicon_file;
  std::string weights_file;
  std::string corpus_file;
  std::string out_file;
  std::string results_file;
  std::string labels_file;
  std::string labels_b_file;
  std::string language_label;
  std::vector<std::string> profile_paths;
  umf::RerankConfig rerank_cfg;
  int jobs = 8;

  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("--src", src_code, "Source language code")->capture_default_str();
    cmd->add_option("--tgt", tgt_code, "Target language code")->capture_default_str();
  };

  CLI::App* divergence_cmd =
      app.add_subcommand("divergence", "Divergence vector between two profiles");
  add_pair_options(divergence_cmd);

  CLI::App* directive_cmd =
      app.add_subcommand("directive", "Weighted, normalized directive vector");
  add_pair_options(directive_cmd);
  directive_cmd->add_option("--threshold", rerank_cfg.activation_threshold,
                            "Activation threshold on raw divergence")
      ->capture_default_str();
  directive_cmd->add_option("--weights", weights_file, "Weight-override JSON file");

  CLI::App* score_cmd =
      app.add_subcommand("score", "Per-candidate per-dimension scores with evidence");
  add_pair_options(score_cmd);
  score_cmd->add_option("--candidates", candidates_file, "Candidate JSONL file")->required();
  score_cmd->add_option("--lexicon", lexicon_file, "Sense lexicon JSON file");
  score_cmd->add_option("--threshold", rerank_cfg.activation_threshold)->capture_default_str();

  CLI::App* rerank_cmd = app.add_subcommand("rerank", "Rerank a candidate file");
  add_pair_options(rerank_cmd);
  rerank_cmd->add_option("--candidates", candidates_file, "Candidate JSONL file")->required();
  rerank_cmd->add_option("--alpha", rerank_cfg.alpha, "Model/compliance mixing parameter")
      ->capture_default_str();
  rerank_cmd->add_option("--top-k", rerank_cfg.top_k, "Candidates retained for scoring")
      ->capture_default_str();
  rerank_cmd->add_option("--beam-width", rerank_cfg.beam_width)->capture_default_str();
  rerank_cmd->add_option("--threshold", rerank_cfg.activation_threshold)->capture_default_str();
  rerank_cmd->add_option("--boost", rerank_cfg.boost)->capture_default_str();
  rerank_cmd->add_option("--penalty", rerank_cfg.penalty)->capture_default_str();
  rerank_cmd->add_flag("--score-all", rerank_cfg.score_all, "Score all candidates (ablation)");
  rerank_cmd->add_flag("--raw-model-scores", rerank_cfg.raw_model_scores,
                       "Skip min-max normalization");
  rerank_cmd->add_option("--lexicon", lexicon_file, "Sense lexicon JSON file");
  rerank_cmd->add_option("--weights", weights_file, "Weight-override JSON file");
  rerank_cmd->add_option("--out", out_file, "Results JSONL file (default stdout)");

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "End-to-end: corpus -> generator -> rerank -> results");
  add_pair_options(translate_cmd);
  translate_cmd->add_option("--corpus", corpus_file, "Corpus JSONL file")->required();
  translate_cmd->add_option("--candidates", candidates_file,
                            "File-backed generator (JSONL); otherwise HTTP from environment");
  translate_cmd->add_option("--out", out_file, "Results JSONL file")->required();
  translate_cmd->add_option("--alpha", rerank_cfg.alpha)->capture_default_str();
  translate_cmd->add_option("--top-k", rerank_cfg.top_k)->capture_default_str();
  translate_cmd->add_option("--beam-width", rerank_cfg.beam_width)->capture_default_str();
  translate_cmd->add_option("--threshold", rerank_cfg.activation_threshold)
      ->capture_default_str();
  translate_cmd->add_option("--boost", rerank_cfg.boost)->capture_default_str();
  translate_cmd->add_option("--penalty", rerank_cfg.penalty)->capture_default_str();
  translate_cmd->add_flag("--score-all", rerank_cfg.score_all);
  translate_cmd->add_flag("--raw-model-scores", rerank_cfg.raw_model_scores);
  translate_cmd->add_option("--lexicon", lexicon_file)->capture_default_str();
  translate_cmd->add_option("--weights", weights_file);
  translate_cmd->add_option("--jobs", jobs, "Bounded in-flight sentences")
      ->capture_default_str();

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Metric suite over results and human labels");
  evaluate_cmd->add_option("--results", results_file, "Results JSONL file")->required();
  evaluate_cmd->add_option("--labels", labels_file, "Annotator label CSV")->required();
  evaluate_cmd->add_option("--labels-b", labels_b_file, "Second annotator label CSV");
  evaluate_cmd->add_option("--language", language_label, "Report row label");
  std::string correlation_file;
  evaluate_cmd->add_option(
      "--correlation", correlation_file,
      "JSON array of [divergence, change_rate] pairs for the correlation helper");

  CLI::App* validate_cmd = app.add_subcommand("validate-profile", "Check profile invariants");
  validate_cmd->add_option("files", profile_paths, "Profile JSON files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* active = app.get_subcommands().front();
    const umf::Json config = load_config_doc(global.config_file);
    {
      const CLI::Option* opt = app.get_option_no_throw("--profiles");
      if (config.is_object() && config.contains("profiles") &&
          !(opt != nullptr && opt->count() > 0)) {
        global.profiles_dir = config.at("profiles").get<std::string>();
      }
    }
    config_fill(config, active, "alpha", "--alpha", rerank_cfg.alpha);
    config_fill(config, active, "top_k", "--top-k", rerank_cfg.top_k);
    config_fill(config, active, "beam_width", "--beam-width", rerank_cfg.beam_width);
    config_fill(config, active, "threshold", "--threshold", rerank_cfg.activation_threshold);
    config_fill(config, active, "boost", "--boost", rerank_cfg.boost);
    config_fill(config, active, "penalty", "--penalty", rerank_cfg.penalty);
    config_fill(config, active, "score_all", "--score-all", rerank_cfg.score_all);
    config_fill(config, active, "raw_model_scores", "--raw-model-scores",
                rerank_cfg.raw_model_scores);
    config_fill(config, active, "lexicon", "--lexicon", lexicon_file);
    config_fill(config, active, "weights", "--weights", weights_file);
    config_fill(config, active, "jobs", "--jobs", jobs);

    if (active == divergence_cmd) {
      const auto src = load_language(global, src_code);
      const auto tgt = load_language(global, tgt_code);
      const auto vector = umf::compute_divergence_vector(src, tgt);
      std::cout << umf::divergence_to_json(vector).dump(2) << "\n";
      std::cout << umf::divergence_table(vector, src, tgt);
      return 0;
    }

    if (active == directive_cmd) {
      const auto src = load_language(global, src_code);
      const auto tgt = load_language(global, tgt_code);
      const auto directive = umf::build_directive(src, tgt, rerank_cfg.activation_threshold,
                                                  load_weights_flag(weights_file, tgt));
      std::cout << umf::directive_to_json(directive).dump(2) << "\n";
      return 0;
    }

    if (active == score_cmd) {
      const auto src = load_language(global, src_code);
      const auto tgt = load_language(global, tgt_code);
      const auto directive =
          umf::build_directive(src, tgt, rerank_cfg.activation_threshold);
      std::optional<umf::SenseLexicon> lexicon;
      if (!lexicon_file.empty()) lexicon = umf::load_lexicon(lexicon_file);

      for (const umf::CandidateSet& set : umf::read_candidate_file(candidates_file)) {
        const auto cues = umf::detect_source_cues(set.source_text);
        std::vector<umf::SenseResolution> resolutions;
        if (lexicon) {
          const auto tokens = umf::source_tokens(set.source_text);
          for (const auto& hit : umf::detect_ambiguities(set.source_text, *lexicon)) {
            resolutions.push_back(umf::resolve_sense(hit, tokens));
          }
        }
        for (const umf::Candidate& c : set.candidates) {
          const auto scores = umf::score_candidate(c, tgt, directive, cues);
          umf::Json line = umf::Json::object();
          line["sentence_id"] = set.sentence_id;
          line["rank"] = c.original_rank;
          line["text"] = c.text;
          line["umf_score"] = umf::compute_umf_score(scores, directive);
          line["sense_compliance"] =
              lexicon ? umf::score_sense_compliance(c, resolutions, *lexicon) : 1.0;
          line["dimension_scores"] = umf::score_set_to_json(scores, /*with_evidence=*/true);
          std::cout << line.dump() << "\n";
        }
      }
      return 0;
    }

    if (active == rerank_cmd) {
      const auto src = load_language(global, src_code);
      const auto tgt = load_language(global, tgt_code);
      std::optional<umf::SenseLexicon> lexicon;
      if (!lexicon_file.empty()) lexicon = umf::load_lexicon(lexicon_file);
      const umf::Reranker reranker(src, tgt, lexicon ? &*lexicon : nullptr, rerank_cfg,
                                   load_weights_flag(weights_file, tgt));
      std::ofstream out_stream;
      std::ostream* out = &std::cout;
      if (!out_file.empty()) {
        out_stream.open(out_file);
        if (!out_stream) throw umf::Error("cannot open output file: " + out_file);
        out = &out_stream;
      }
      std::size_t changed = 0;
      std::size_t total = 0;
      for (const umf::CandidateSet& set : umf::read_candidate_file(candidates_file)) {
        const auto result = reranker.rerank(set);
        (*out) << umf::rerank_result_to_json(result).dump() << "\n";
        ++total;
        if (result.changed) ++changed;
      }
      std::cerr << "umf: reranked " << total << " sentences, change rate "
                << umf::round2(umf::change_rate(changed, total)) << "%\n";
      return 0;
    }

    if (active == translate_cmd) {
      const auto src = load_language(global, src_code);
      const auto tgt = load_language(global, tgt_code);
      std::optional<umf::SenseLexicon> lexicon;
      if (!lexicon_file.empty()) lexicon = umf::load_lexicon(lexicon_file);
      const auto corpus = umf::read_corpus(corpus_file);
      auto source = make_source(candidates_file);

      umf::TranslateOptions options;
      options.rerank = rerank_cfg;
      options.jobs = jobs;
      options.weight_override = load_weights_flag(weights_file, tgt);

      std::ofstream out(out_file);
      if (!out) throw umf::Error("cannot open output file: " + out_file);
      const auto summary =
          umf::run_translate(corpus, *source, src, tgt, lexicon ? &*lexicon : nullptr,
                             options, out, std::cerr);
      std::cout << "translated " << summary.total - summary.failed << "/" << summary.total
                << " sentences, change rate " << umf::round2(summary.change_rate_pct)
                << "%, failures " << summary.failed << "\n";
      return summary.failed == 0 ? 0 : 1;
    }

    if (active == evaluate_cmd) {
      const auto records = umf::read_result_records(results_file);
      auto labels = umf::read_labels_csv(labels_file);
      if (!labels_b_file.empty()) {
        const auto more = umf::read_labels_csv(labels_b_file);
        labels.insert(labels.end(), more.begin(), more.end());
      }
      umf::EvaluateOptions options;
      options.language = language_label;
      if (!correlation_file.empty()) {
        std::ifstream in(correlation_file);
        if (!in) throw umf::ParseError("cannot open correlation file: " + correlation_file);
        for (const auto& pair : umf::Json::parse(in)) {
          options.divergence_change_pairs.emplace_back(pair.at(0).get<double>(),
                                                       pair.at(1).get<double>());
        }
      }
      const auto report = umf::run_evaluate(records, labels, options);
      std::cout << umf::report_to_json(report).dump(2) << "\n";
      std::cout << umf::report_table(report);
      return 0;
    }

    if (active == validate_cmd) {
      bool all_valid = true;
      for (const std::string& path : profile_paths) {
        try {
          std::ifstream in(path);
          if (!in) throw umf::ParseError("cannot open profile file: " + path);
          const auto doc = umf::Json::parse(in);
          const auto profile = umf::parse_profile(doc);
          const auto violations = umf::validate_profile(profile);
          if (violations.empty()) {
            std::cout << path << ": OK (" << profile.language_code << ", "
                      << profile.language_name << ")\n";
          } else {
            all_valid = false;
            for (const auto& v : violations) {
              std::cout << path << ": " << umf::to_string(v.dimension) << ": " << v.reason
                        << "\n";
            }
          }
        } catch (const nlohmann::json::exception& e) {
          all_valid = false;
          std::cout << path << ": parse error: " << e.what() << "\n";
        } catch (const umf::Error& e) {
          all_valid = false;
          std::cout << path << ": " << e.what() << "\n";
        }
      }
      return all_valid ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "umf: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
