#include "umf/candidates.hpp"

#include <algorithm>
#include <fstream>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

const Candidate* CandidateSet::by_rank(int rank) const {
  for (const auto& c : candidates) {
    if (c.original_rank == rank) return &c;
  }
  return nullptr;
}

CandidateSet parse_candidate_set(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("candidate set: expected an object");
  for (const char* field : {"sentence_id", "source_text", "target_lang", "candidates"}) {
    if (!doc.contains(field)) {
      throw SchemaError(std::string("candidate set: missing '") + field + "'");
    }
  }
  CandidateSet set;
  set.sentence_id = doc["sentence_id"].get<std::string>();
  set.source_text = doc["source_text"].get<std::string>();
  set.target_lang = doc["target_lang"].get<std::string>();
  const Json& arr = doc["candidates"];
  if (!arr.is_array() || arr.empty()) {
    throw SchemaError("candidate set '" + set.sentence_id + "': 'candidates' must be a non-empty array");
  }
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("text") || !item.contains("rank")) {
      throw SchemaError("candidate set '" + set.sentence_id + "': candidates need 'text' and 'rank'");
    }
    Candidate c;
    c.text = nfc(item["text"].get<std::string>());
    if (trim(c.text).empty()) {
      throw SchemaError("candidate set '" + set.sentence_id + "': empty candidate text");
    }
    c.original_rank = item["rank"].get<int>();
    if (item.contains("model_score")) {
      c.model_score = item["model_score"].get<double>();
    } else {
      // rank-only generators: commensurable score, higher is better
      c.model_score = -static_cast<double>(c.original_rank);
    }
    set.candidates.push_back(std::move(c));
  }
  std::sort(set.candidates.begin(), set.candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.original_rank < b.original_rank;
            });
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    if (set.candidates[i].original_rank != static_cast<int>(i) + 1) {
      throw SchemaError("candidate set '" + set.sentence_id +
                        "': ranks must be contiguous from 1");
    }
    if (i > 0 && set.candidates[i].model_score > set.candidates[i - 1].model_score) {
      throw SchemaError("candidate set '" + set.sentence_id +
                        "': model_score must be non-increasing in rank");
    }
  }
  return set;
}

Json candidate_set_to_json(const CandidateSet& set) {
  Json doc = Json::object();
  doc["sentence_id"] = set.sentence_id;
  doc["source_text"] = set.source_text;
  doc["target_lang"] = set.target_lang;
  Json arr = Json::array();
  for (const auto& c : set.candidates) {
    arr.push_back(Json{{"text", c.text}, {"model_score", c.model_score}, {"rank", c.original_rank}});
  }
  doc["candidates"] = arr;
  return doc;
}

std::vector<CandidateSet> read_candidate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open candidate file: " + path.string());
  std::vector<CandidateSet> out;
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
    out.push_back(parse_candidate_set(doc));
  }
  return out;
}

}  // namespace umf
