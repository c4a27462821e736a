#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "umf/candidates.hpp"
#include "umf/directive.hpp"
#include "umf/metrics.hpp"
#include "umf/pipeline.hpp"
#include "umf/profile.hpp"
#include "umf/rerank.hpp"
#include "umf/scorers.hpp"

namespace umf::test {

std::filesystem::path data_dir();
const LanguageProfile& english();
const LanguageProfile& sinhala();

/// Table 2, in canonical dimension order.
const DimensionArray<double>& published_divergence();

/// Published English->Sinhala directive vector (3-decimal entries).
const DimensionArray<double>& published_directive();

// --- randomized generators --------------------------------------------------

double uniform(std::mt19937& rng, double lo, double hi);
int uniform_int(std::mt19937& rng, int lo, int hi);

/// A pair of valid profiles with matching kinds per dimension (shipped-shape
/// kinds, random values); equal values are forced with some probability so
/// zero-divergence entries occur.
std::pair<LanguageProfile, LanguageProfile> random_profile_pair(std::mt19937& rng);

/// Random UTF-8 string mixing ASCII, Sinhala, punctuation and exotic planes.
std::string random_utf8(std::mt19937& rng, std::size_t max_codepoints);

Classification random_classification(std::mt19937& rng);

// --- synthetic intervention fixture ------------------------------------------

/// One sentence whose rank-1 candidate violates word order while a
/// lower-ranked candidate complies.
struct SyntheticSentence {
  CorpusSentence corpus;
  CandidateSet candidates;
  int compliant_rank = 2;
};

std::vector<SyntheticSentence> make_intervention_fixture(std::mt19937& rng, std::size_t count);

void write_corpus_file(const std::filesystem::path& path,
                       const std::vector<SyntheticSentence>& fixture);
void write_candidate_file(const std::filesystem::path& path,
                          const std::vector<SyntheticSentence>& fixture);

/// The section 3.5 "play" fixture: rank-1 candidate carries the instrument
/// sense, rank-2 the recreational sense, equal model scores.
CandidateSet play_fixture();

// --- independent oracles -----------------------------------------------------

/// Recombines the public single-dimension scorers with the literal weighted
/// average, independently of Reranker's internal path.
double oracle_umf(const Candidate& candidate, const LanguageProfile& target,
                  const DirectiveVector& directive, const SourceCues& cues);

/// argmax of alpha*model + (1-alpha)*umf*sense with the rank tiebreak,
/// recomputed from scratch. Returns the chosen original_rank.
int oracle_select(const CandidateSet& set, const LanguageProfile& target,
                  const DirectiveVector& directive, double alpha,
                  const SenseLexicon* lexicon);

/// Direct confusion-matrix kappa in long double, written independently of
/// metrics.cpp.
double kappa_oracle(const std::vector<Classification>& a,
                    const std::vector<Classification>& b);

}  // namespace umf::test
