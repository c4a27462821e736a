#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "umf/profile.hpp"

namespace umf {

/// One generator hypothesis. model_score is the generator-native confidence
/// (higher is better); rank-only generators are mapped via model_score =
/// -rank at parse time.
struct Candidate {
  std::string text;             // target language, NFC
  double model_score = 0.0;
  int original_rank = 1;        // 1 = generator's top
};

/// One source sentence plus its N ranked candidates (ranks contiguous from 1).
struct CandidateSet {
  std::string sentence_id;
  std::string source_text;
  std::string target_lang;
  std::vector<Candidate> candidates;

  const Candidate* by_rank(int rank) const;
};

/// Validates rank contiguity and non-empty text; NFC-normalizes candidate
/// text. Throws ParseError/SchemaError.
CandidateSet parse_candidate_set(const Json& doc);

Json candidate_set_to_json(const CandidateSet& set);

/// JSONL file of CandidateSet objects, one per line.
std::vector<CandidateSet> read_candidate_file(const std::filesystem::path& path);

}  // namespace umf
