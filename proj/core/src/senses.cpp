#include "umf/senses.hpp"

#include <algorithm>
#include <fstream>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

namespace {

// Shipped inflection list for source lemma lookup; exact lowercase matching
// otherwise.
const std::map<std::string, std::string>& inflection_map() {
  static const std::map<std::string, std::string> m{
      {"plays", "play"},
      {"playing", "play"},
      {"played", "play"},
  };
  return m;
}

}  // namespace

const SenseEntry* SenseLexicon::find_lemma(std::string_view lowercased_token) const {
  std::string key(lowercased_token);
  auto it = entries.find(key);
  if (it != entries.end()) return &it->second;
  auto inf = inflection_map().find(key);
  if (inf != inflection_map().end()) {
    it = entries.find(inf->second);
    if (it != entries.end()) return &it->second;
  }
  return nullptr;
}

SenseLexicon parse_lexicon(const Json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object()) {
    throw SchemaError("lexicon: top level must be {\"entries\": {...}}");
  }
  SenseLexicon lex;
  for (const auto& [lemma_raw, senses_json] : doc["entries"].items()) {
    const std::string lemma = ascii_lower(trim(lemma_raw));
    if (lemma.empty()) throw SchemaError("lexicon: empty lemma");
    if (!senses_json.is_array() || senses_json.size() < 2) {
      throw SchemaError("lexicon entry '" + lemma + "': needs at least 2 senses");
    }
    SenseEntry entry;
    entry.lemma = lemma;
    std::set<std::string> seen_forms;
    for (const auto& sj : senses_json) {
      if (!sj.is_object() || !sj.contains("sense_id") || !sj.contains("target_forms")) {
        throw SchemaError("lexicon entry '" + lemma + "': senses need sense_id and target_forms");
      }
      Sense sense;
      sense.sense_id = sj["sense_id"].get<std::string>();
      for (const auto& form : sj["target_forms"]) {
        std::string f = nfc(form.get<std::string>());
        if (trim(f).empty()) {
          throw SchemaError("lexicon entry '" + lemma + "': empty target form");
        }
        if (!seen_forms.insert(f).second) {
          throw SchemaError("lexicon entry '" + lemma + "': target form '" + f +
                            "' appears in more than one sense");
        }
        sense.target_forms.push_back(std::move(f));
      }
      if (sj.contains("indicators")) {
        if (!sj["indicators"].is_object()) {
          throw SchemaError("lexicon entry '" + lemma + "': indicators must be an object");
        }
        for (const auto& [word, weight] : sj["indicators"].items()) {
          double w = weight.is_number() ? weight.get<double>() : -1.0;
          if (!(w > 0.0)) {
            throw SchemaError("lexicon entry '" + lemma + "': indicator weights must be > 0");
          }
          sense.indicators.emplace_back(ascii_lower(word), w);
        }
      }
      entry.senses.push_back(std::move(sense));
    }
    lex.entries.emplace(lemma, std::move(entry));
  }
  return lex;
}

SenseLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file: " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed lexicon JSON in " + path.string() + ": " + e.what());
  }
  return parse_lexicon(doc);
}

std::vector<AmbiguityHit> detect_ambiguities(const std::string& source_text,
                                             const SenseLexicon& lexicon) {
  std::vector<AmbiguityHit> hits;
  const auto tokens = source_tokens(source_text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (const SenseEntry* entry = lexicon.find_lemma(tokens[i])) {
      hits.push_back(AmbiguityHit{tokens[i], i, entry});
    }
  }
  return hits;
}

SenseResolution resolve_sense(const AmbiguityHit& hit,
                              const std::vector<std::string>& source_tokens) {
  SenseResolution res;
  res.source_word = hit.source_word;
  res.lemma = hit.entry->lemma;

  const std::set<std::string> context(source_tokens.begin(), source_tokens.end());
  double best = -1.0;
  double runner_up = -1.0;
  for (const Sense& sense : hit.entry->senses) {
    double score = 0.0;
    for (const auto& [word, weight] : sense.indicators) {
      if (context.count(word)) score += weight;
    }
    res.score_by_sense[sense.sense_id] = score;
    // strict > keeps lexicon order as the tiebreak
    if (score > best) {
      runner_up = best;
      best = score;
      res.chosen = sense.sense_id;
    } else if (score > runner_up) {
      runner_up = score;
    }
  }
  res.confident = best - std::max(runner_up, 0.0) >= kConfidenceMargin;
  return res;
}

BiasMap build_bias_map(std::span<const SenseResolution> resolutions,
                       const SenseLexicon& lexicon, double boost, double penalty) {
  if (!(boost > 0.0) || penalty < 0.0) {
    throw RangeError("bias map requires boost > 0 and penalty >= 0");
  }
  BiasMap bias;
  for (const SenseResolution& res : resolutions) {
    if (!res.confident) continue;
    auto it = lexicon.entries.find(res.lemma);
    if (it == lexicon.entries.end()) continue;
    for (const Sense& sense : it->second.senses) {
      const double delta = sense.sense_id == res.chosen ? boost : -penalty;
      for (const std::string& form : sense.target_forms) {
        bias.adjustments[form] = delta;
      }
    }
  }
  return bias;
}

double score_sense_compliance(const Candidate& candidate,
                              std::span<const SenseResolution> resolutions,
                              const SenseLexicon& lexicon) {
  double total = 0.0;
  std::size_t counted = 0;
  for (const SenseResolution& res : resolutions) {
    if (!res.confident) continue;
    auto it = lexicon.entries.find(res.lemma);
    if (it == lexicon.entries.end()) continue;
    bool has_chosen = false;
    bool has_rejected = false;
    for (const Sense& sense : it->second.senses) {
      for (const std::string& form : sense.target_forms) {
        if (candidate.text.find(form) == std::string::npos) continue;
        if (sense.sense_id == res.chosen) {
          has_chosen = true;
        } else {
          has_rejected = true;
        }
      }
    }
    total += has_chosen ? 1.0 : (has_rejected ? 0.0 : 0.5);
    ++counted;
  }
  if (counted == 0) return 1.0;
  return total / static_cast<double>(counted);
}

Json bias_map_to_json(const BiasMap& bias) {
  Json obj = Json::object();
  for (const auto& [form, delta] : bias.adjustments) {
    obj[form] = delta;
  }
  return obj;
}

}  // namespace umf
