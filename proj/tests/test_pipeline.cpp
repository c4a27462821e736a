#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/test_support.hpp"
#include "umf/errors.hpp"
#include "umf/pipeline.hpp"

using namespace umf;
using namespace umf::test;

namespace {

struct Fixture {
  std::filesystem::path corpus;
  std::filesystem::path candidates;
  std::vector<SyntheticSentence> sentences;

  explicit Fixture(std::size_t count, unsigned seed = 11) {
    std::mt19937 rng(seed);
    sentences = make_intervention_fixture(rng, count);
    const auto dir = std::filesystem::temp_directory_path();
    corpus = dir / "umf_pipe_corpus.jsonl";
    candidates = dir / "umf_pipe_candidates.jsonl";
    write_corpus_file(corpus, sentences);
    write_candidate_file(candidates, sentences);
  }

  ~Fixture() {
    std::filesystem::remove(corpus);
    std::filesystem::remove(candidates);
  }
};

const SenseLexicon& shipped_lexicon() {
  static const SenseLexicon lex =
      load_lexicon(data_dir() / "lexicons" / "en-si.lexicon.json");
  return lex;
}

std::string translate_to_string(const Fixture& fixture, const TranslateOptions& options) {
  const auto corpus = read_corpus(fixture.corpus);
  FileCandidateSource source(fixture.candidates);
  std::ostringstream results;
  std::ostringstream diag;
  run_translate(corpus, source, english(), sinhala(), &shipped_lexicon(), options, results,
                diag);
  return results.str();
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("corpus parsing picks up optional fields") {
  const auto path = std::filesystem::temp_directory_path() / "umf_corpus_opt.jsonl";
  {
    std::ofstream out(path);
    out << R"({"sentence_id": "a", "source_text": "Hello", "formal": true, "phenomena": ["tam"]})"
        << "\n";
    out << R"({"sentence_id": "b", "source_text": "World"})" << "\n";
  }
  const auto corpus = read_corpus(path);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].formal == true);
  CHECK(corpus[0].phenomena == std::vector<std::string>{"tam"});
  CHECK_FALSE(corpus[1].formal.has_value());
  std::filesystem::remove(path);
}

TEST_CASE("translate writes one result per sentence in input order") {
  Fixture fixture(25);
  TranslateOptions options;
  options.jobs = 4;
  const std::string output = translate_to_string(fixture, options);

  std::istringstream lines(output);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    const Json doc = Json::parse(line);
    REQUIRE(doc["sentence_id"] == fixture.sentences[i].corpus.sentence_id);
    ++i;
  }
  CHECK(i == 25);
}

TEST_CASE("translate is byte-identical across runs and job counts") {
  Fixture fixture(40);
  TranslateOptions options;
  options.jobs = 8;
  const std::string first = translate_to_string(fixture, options);
  const std::string second = translate_to_string(fixture, options);
  CHECK(first == second);

  options.jobs = 1;
  CHECK(translate_to_string(fixture, options) == first);
}

TEST_CASE("alpha 1 run reports a zero change rate") {
  Fixture fixture(20);
  const auto corpus = read_corpus(fixture.corpus);
  FileCandidateSource source(fixture.candidates);
  TranslateOptions options;
  options.rerank.alpha = 1.0;
  std::ostringstream results;
  std::ostringstream diag;
  const auto summary = run_translate(corpus, source, english(), sinhala(), nullptr, options,
                                     results, diag);
  CHECK(summary.changed == 0);
  CHECK(summary.change_rate_pct == 0.0);
  CHECK(summary.failed == 0);
}

TEST_CASE("empty corpus errors before any work") {
  Fixture fixture(1);
  FileCandidateSource source(fixture.candidates);
  TranslateOptions options;
  std::ostringstream out;
  CHECK_THROWS_AS(run_translate({}, source, english(), sinhala(), nullptr, options, out, out),
                  EmptyInput);
}

TEST_CASE("missing candidates fail that sentence and the run continues") {
  Fixture fixture(5);
  auto corpus = read_corpus(fixture.corpus);
  CorpusSentence extra;
  extra.sentence_id = "no-candidates";
  extra.source_text = "This sentence has no candidates";
  corpus.insert(corpus.begin() + 2, extra);

  FileCandidateSource source(fixture.candidates);
  TranslateOptions options;
  std::ostringstream results;
  std::ostringstream diag;
  const auto summary = run_translate(corpus, source, english(), sinhala(), nullptr, options,
                                     results, diag);
  CHECK(summary.failed == 1);
  CHECK(summary.total == 6);
  CHECK(diag.str().find("no-candidates") != std::string::npos);

  std::istringstream lines(results.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 5);
}

TEST_CASE("results are self-contained: stored traces reproduce final scores") {
  Fixture fixture(10);
  TranslateOptions options;
  const std::string output = translate_to_string(fixture, options);
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    const auto result = rerank_result_from_json(Json::parse(line));
    for (const auto& trace : result.per_candidate) {
      const double recombined =
          options.rerank.alpha * trace.normalized_model_score +
          (1.0 - options.rerank.alpha) * trace.umf_score * trace.sense_compliance;
      REQUIRE(std::fabs(recombined - trace.final_score) < 1e-12);
    }
  }
}

TEST_CASE("evaluate joins results with labels and adjudicates disagreements") {
  std::vector<ResultRecord> results;
  for (int i = 0; i < 10; ++i) {
    ResultRecord r;
    r.sentence_id = "s" + std::to_string(i);
    r.changed = i < 4;  // s0..s3 intervened
    r.chosen_umf_score = 0.5 + 0.05 * i;
    results.push_back(r);
  }
  std::vector<InterventionLabel> labels;
  auto add = [&](const std::string& id, const std::string& annot, Classification c) {
    labels.push_back({id, annot, c});
  };
  using C = Classification;
  add("s0", "a", C::improvement);
  add("s0", "b", C::improvement);  // agree
  add("s1", "a", C::improvement);
  add("s1", "b", C::error);        // disagree, adjudicated to improvement
  add("s1", "adjudicator", C::improvement);
  add("s2", "a", C::error);
  add("s2", "b", C::neutral);      // disagree, no adjudication: excluded
  add("s3", "a", C::neutral);
  add("s3", "b", C::neutral);      // agree

  const MetricsReport report = run_evaluate(results, labels);
  CHECK(report.total_cases == 10);
  CHECK(report.interventions == 4);
  CHECK(round2(report.change_rate_pct) == 40.0);
  CHECK(report.improvements == 2);
  CHECK(report.neutrals == 1);
  CHECK(report.errors == 0);
  CHECK(report.excluded == 1);
  // precision over the 3 adjudicated interventions, neutrals as non-improvements
  CHECK(round2(*report.intervention_precision_pct) == 66.67);
  REQUIRE(report.kappa.has_value());
  // two annotators, 4 aligned sentences, 2 agreements
  CHECK(*report.kappa == doctest::Approx(kappa_oracle(
                             {C::improvement, C::improvement, C::error, C::neutral},
                             {C::improvement, C::error, C::neutral, C::neutral}))
                             .epsilon(1e-12));

  CHECK(*report.mean_umf_score ==
        doctest::Approx(mean_compliance(std::vector<double>{
            0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95})));
}

TEST_CASE("labels for unknown ids raise IdMismatch naming the id") {
  std::vector<ResultRecord> results;
  ResultRecord r;
  r.sentence_id = "known";
  r.changed = true;
  results.push_back(r);
  const std::vector<InterventionLabel> labels{
      {"ghost", "a", Classification::improvement}};
  CHECK_THROWS_WITH_AS(run_evaluate(results, labels), doctest::Contains("ghost"), IdMismatch);
}

TEST_CASE("divergence correlation helper appears when magnitudes are supplied") {
  std::vector<ResultRecord> results;
  for (int i = 0; i < 4; ++i) {
    ResultRecord r;
    r.sentence_id = "s" + std::to_string(i);
    r.changed = i % 2 == 0;
    results.push_back(r);
  }
  EvaluateOptions options;
  options.divergence_change_pairs = {{0.95, 45.16}, {0.9, 26.69}, {0.3, 4.4}, {0.2, 3.23}};
  const auto report = run_evaluate(results, {}, options);
  REQUIRE(report.divergence_correlation.has_value());
  CHECK(*report.divergence_correlation > 0.8);
}

}  // TEST_SUITE
