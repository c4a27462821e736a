#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "umf/directive.hpp"
#include "umf/divergence.hpp"
#include "umf/metrics.hpp"
#include "umf/profile.hpp"
#include "umf/rerank.hpp"
#include "umf/scorers.hpp"

namespace {

using namespace umf;

std::filesystem::path data_dir() {
#ifdef UMF_BENCH_DATA_DIR
  return std::filesystem::path(UMF_BENCH_DATA_DIR);
#else
  return std::filesystem::path("data");
#endif
}

const LanguageProfile& english() {
  static const LanguageProfile p = load_profile(data_dir() / "profiles" / "en.profile.json");
  return p;
}

const LanguageProfile& sinhala() {
  static const LanguageProfile p = load_profile(data_dir() / "profiles" / "si.profile.json");
  return p;
}

// a full-width beam: one compliant candidate buried behind violating fillers
CandidateSet beam_fixture(int width) {
  CandidateSet set;
  set.sentence_id = "bench";
  set.source_text = "The children play in the garden";
  set.target_lang = "si";
  const std::vector<std::string> fillers{
      "ළමයි සෙල්ලම් උද්‍යානය", "මිනිස්සු වැඩ නගරය", "ගුරුවරු කියවීම පාසල",
      "සිසුවෝ ඉගෙනීම ගෙදර", "ගොවියෝ දිවීම වත්ත"};
  for (int rank = 1; rank <= width; ++rank) {
    Candidate c;
    c.original_rank = rank;
    c.model_score = -1.0 - 0.05 * rank;
    c.text = rank == 3 ? "ළමයි උද්‍යානයේ සෙල්ලම් කරනවා"
                       : fillers[static_cast<std::size_t>(rank) % fillers.size()];
    set.candidates.push_back(std::move(c));
  }
  return set;
}

void BM_DivergenceVector(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_divergence_vector(english(), sinhala()));
  }
}
BENCHMARK(BM_DivergenceVector);

void BM_BuildDirective(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_directive(english(), sinhala()));
  }
}
BENCHMARK(BM_BuildDirective);

void BM_ScoreCandidate(benchmark::State& state) {
  const DirectiveVector directive = build_directive(english(), sinhala());
  const SourceCues cues = detect_source_cues("The children play in the garden");
  Candidate c;
  c.text = "ළමයි උද්‍යානයේ සෙල්ලම් කරනවා";
  c.original_rank = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_candidate(c, sinhala(), directive, cues));
  }
}
BENCHMARK(BM_ScoreCandidate);

void BM_RerankBeam(benchmark::State& state) {
  RerankConfig cfg;
  cfg.top_k = static_cast<int>(state.range(0));
  cfg.beam_width = 32;
  const Reranker reranker(english(), sinhala(), nullptr, cfg);
  const CandidateSet set = beam_fixture(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reranker.rerank(set));
  }
}
BENCHMARK(BM_RerankBeam)->Arg(4)->Arg(32);

void BM_CohenKappa(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Classification> a(n);
  std::vector<Classification> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<Classification>(rng() % 3);
    b[i] = static_cast<Classification>(rng() % 3);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohen_kappa(a, b));
  }
}
BENCHMARK(BM_CohenKappa)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
