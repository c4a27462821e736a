#include "umf/scorers.hpp"

#include <algorithm>
#include <cmath>

#include "umf/errors.hpp"

namespace umf {

namespace {

const std::set<std::string>& negator_words() {
  static const std::set<std::string> w{"not",    "never",  "no",      "none",  "nothing",
                                       "nobody", "neither", "nor",    "cannot", "without"};
  return w;
}

const std::set<std::string>& relative_pronouns() {
  static const std::set<std::string> w{"who", "whom", "whose", "which", "that"};
  return w;
}

const std::set<std::string>& copula_words() {
  static const std::set<std::string> w{"is", "are", "was", "were", "am", "be", "been", "being"};
  return w;
}

const std::set<std::string>& formal_cues() {
  static const std::set<std::string> w{"sir", "madam", "ma'am",     "please", "kindly",
                                       "mr",  "mrs",   "ms",        "dr",     "professor",
                                       "respectfully"};
  return w;
}

struct TokenMatch {
  const Token* token;
  const std::string* marker;
};

// first marker (longest wins on overlap) whose string is a suffix of the token
std::optional<TokenMatch> match_token(const Token& token,
                                      const std::vector<std::string>& markers) {
  const std::string* best = nullptr;
  for (const std::string& m : markers) {
    if (token_ends_with(token.text, m)) {
      if (best == nullptr || m.size() > best->size()) best = &m;
    }
  }
  if (best == nullptr) return std::nullopt;
  return TokenMatch{&token, best};
}

MatchEvidence make_evidence(const TokenMatch& m) {
  return MatchEvidence{*m.marker, m.token->offset + m.token->text.size() - m.marker->size()};
}

// any token bearing any of the markers; evidence for every hit
bool scan_role(const std::vector<Token>& tokens, const std::vector<std::string>& markers,
               std::vector<MatchEvidence>& evidence) {
  bool found = false;
  for (const Token& t : tokens) {
    if (auto m = match_token(t, markers)) {
      evidence.push_back(make_evidence(*m));
      found = true;
    }
  }
  return found;
}

double numeric_value_or(const LanguageProfile& profile, DimensionId id, double fallback) {
  if (const auto* n = std::get_if<Numeric>(&profile.dimension(id).value)) {
    return n->value;
  }
  return fallback;
}

}  // namespace

SourceCues detect_source_cues(const std::string& source_text, std::optional<bool> formal_flag) {
  SourceCues cues;
  const auto tokens = source_tokens(source_text);
  for (const std::string& t : tokens) {
    if (negator_words().count(t) || token_ends_with(t, "n't")) cues.negated = true;
    if (relative_pronouns().count(t)) cues.relative_clause = true;
    if (copula_words().count(t)) cues.copula = true;
    if (formal_cues().count(t)) cues.register_ = Register::formal;
  }
  if (formal_flag.has_value()) {
    cues.register_ = *formal_flag ? Register::formal : Register::informal;
  }
  return cues;
}

DimensionScore score_word_order(const Candidate& candidate, const LanguageProfile& target) {
  const auto* order = std::get_if<Categorical>(&target.dimension(DimensionId::word_order).value);
  if (order == nullptr) {
    throw KindMismatch("target word_order must be categorical");
  }
  DimensionScore result;
  result.dimension = DimensionId::word_order;
  const auto tokens = tokenize_target(candidate.text);
  const MarkerInventory& markers = target.dimension(DimensionId::word_order).markers;

  if (order->label == "SOV") {
    if (markers.verb_final_suffixes.empty()) {
      throw MissingMarkers("SOV target '" + target.language_code +
                           "' has no verb_final_suffixes");
    }
    if (auto m = match_token(tokens.back(), markers.verb_final_suffixes)) {
      result.score = 1.0;
      result.evidence.push_back(make_evidence(*m));
    } else {
      result.score = 0.0;
    }
    return result;
  }
  if (order->label == "VSO") {
    // verb-initial: the first token should carry a tam/agreement verb marker
    std::vector<std::string> verb_markers = target.dimension(DimensionId::tam).markers.tam_markers;
    const auto& agr = target.dimension(DimensionId::agreement).markers.agreement_markers;
    verb_markers.insert(verb_markers.end(), agr.begin(), agr.end());
    if (auto m = match_token(tokens.front(), verb_markers)) {
      result.score = 1.0;
      result.evidence.push_back(make_evidence(*m));
    } else {
      result.score = 0.0;
    }
    return result;
  }
  // SVO and the remaining orders share the source's dominant pattern; the
  // dimension is normally inactive for them anyway
  result.score = 1.0;
  return result;
}

DimensionScore score_case_marking(const Candidate& candidate, const LanguageProfile& target) {
  DimensionScore result;
  result.dimension = DimensionId::case_marking;
  const auto tokens = tokenize_target(candidate.text);
  const auto suffixes = target.dimension(DimensionId::case_marking).markers.all_case_suffixes();

  std::size_t observed = 0;
  for (const Token& t : tokens) {
    if (auto m = match_token(t, suffixes)) {
      result.evidence.push_back(make_evidence(*m));
      ++observed;
    }
  }
  const double richness = numeric_value_or(target, DimensionId::case_marking, 0.0);
  const auto expected =
      static_cast<long>(std::llround(richness * static_cast<double>(tokens.size())));
  if (expected <= 0) {
    result.score = 1.0;
    return result;
  }
  result.score = std::min(1.0, static_cast<double>(observed) / static_cast<double>(expected));
  return result;
}

DimensionScore score_morphology(const Candidate& candidate, const LanguageProfile& target) {
  DimensionScore result;
  result.dimension = DimensionId::morphology;
  const auto tokens = tokenize_target(candidate.text);
  std::size_t total = 0;
  for (const Token& t : tokens) total += codepoint_count(t.text);
  const double mean_len = static_cast<double>(total) / static_cast<double>(tokens.size());

  const double complexity = numeric_value_or(target, DimensionId::morphology, 0.0);
  const double reference = kMorphologyMinLength + kMorphologySpan * complexity;
  if (reference <= kMorphologyMinLength) {
    result.score = 1.0;  // analytic target: any word length complies
    return result;
  }
  result.score =
      std::clamp((mean_len - kMorphologyMinLength) / (reference - kMorphologyMinLength), 0.0, 1.0);
  return result;
}

namespace {

// D4 table: observable marker roles per dimension. Dimensions without
// surface roles in the profile schema (serial verbs, definiteness, animacy,
// pro-drop) are unobservable for marker scoring and stay not-applicable.
std::vector<const std::vector<std::string>*> roles_for(const MarkerInventory& inv,
                                                       DimensionId dimension) {
  std::vector<const std::vector<std::string>*> roles;
  auto add = [&](const std::vector<std::string>& list) {
    if (!list.empty()) roles.push_back(&list);
  };
  switch (dimension) {
    case DimensionId::agreement:
      add(inv.agreement_markers);
      add(inv.plural_markers);
      break;
    case DimensionId::tam:
      add(inv.tam_markers);
      break;
    case DimensionId::negation:
      add(inv.negation_markers);
      break;
    case DimensionId::relative_clauses:
      add(inv.relativizer_markers);
      break;
    case DimensionId::copula:
      add(inv.copula_forms);
      break;
    case DimensionId::info_structure:
      add(inv.topic_focus_particles);
      break;
    default:
      break;
  }
  return roles;
}

bool is_marker_dimension(DimensionId d) {
  switch (d) {
    case DimensionId::agreement:
    case DimensionId::tam:
    case DimensionId::honorifics:
    case DimensionId::negation:
    case DimensionId::serial_verbs:
    case DimensionId::definiteness:
    case DimensionId::animacy:
    case DimensionId::info_structure:
    case DimensionId::pro_drop:
    case DimensionId::relative_clauses:
    case DimensionId::copula:
      return true;
    default:
      return false;
  }
}

std::optional<DimensionScore> score_honorifics(const std::vector<Token>& tokens,
                                               const MarkerInventory& inv,
                                               const SourceCues& cues) {
  if (inv.honorific_formal.empty() && inv.honorific_informal.empty()) {
    return std::nullopt;
  }
  DimensionScore result;
  result.dimension = DimensionId::honorifics;
  std::vector<MatchEvidence> formal_ev;
  std::vector<MatchEvidence> informal_ev;
  scan_role(tokens, inv.honorific_formal, formal_ev);
  scan_role(tokens, inv.honorific_informal, informal_ev);

  if (formal_ev.size() == informal_ev.size()) {
    // no register marker found (or an even mix): undetermined
    result.score = 0.5;
    return result;
  }
  const Register candidate_register =
      formal_ev.size() > informal_ev.size() ? Register::formal : Register::informal;
  result.evidence = candidate_register == Register::formal ? formal_ev : informal_ev;
  result.score = candidate_register == cues.register_ ? 1.0 : 0.0;
  if (result.score == 0.0) result.evidence.clear();
  return result;
}

}  // namespace

std::optional<DimensionScore> score_marker_dimension(const Candidate& candidate,
                                                     const LanguageProfile& target,
                                                     DimensionId dimension,
                                                     const SourceCues& cues) {
  if (!is_marker_dimension(dimension)) {
    throw UnsupportedDimension("dimension '" + std::string(to_string(dimension)) +
                               "' has a dedicated scorer");
  }
  // applicability gates: only sentences that exhibit the phenomenon on the
  // source side test these dimensions
  if (dimension == DimensionId::negation && !cues.negated) return std::nullopt;
  if (dimension == DimensionId::relative_clauses && !cues.relative_clause) return std::nullopt;
  if (dimension == DimensionId::copula && !cues.copula) return std::nullopt;

  const auto tokens = tokenize_target(candidate.text);
  const MarkerInventory& inv = target.dimension(dimension).markers;

  if (dimension == DimensionId::honorifics) {
    return score_honorifics(tokens, inv, cues);
  }

  const auto roles = roles_for(inv, dimension);
  if (roles.empty()) return std::nullopt;

  DimensionScore result;
  result.dimension = dimension;
  std::size_t found = 0;
  for (const auto* role : roles) {
    if (scan_role(tokens, *role, result.evidence)) ++found;
  }
  result.score = static_cast<double>(found) / static_cast<double>(roles.size());
  return result;
}

ScoreSet score_candidate(const Candidate& candidate, const LanguageProfile& target,
                         const DirectiveVector& directive, const SourceCues& cues) {
  ScoreSet scores;
  for (const DimensionId id : directive.active) {
    switch (id) {
      case DimensionId::word_order:
        scores.emplace(id, score_word_order(candidate, target));
        break;
      case DimensionId::case_marking:
        scores.emplace(id, score_case_marking(candidate, target));
        break;
      case DimensionId::morphology:
        scores.emplace(id, score_morphology(candidate, target));
        break;
      case DimensionId::classifiers:
      case DimensionId::evidentiality:
        // no surface scorer; active only for exotic pairs, skipped as N/A
        break;
      default:
        if (auto s = score_marker_dimension(candidate, target, id, cues)) {
          scores.emplace(id, std::move(*s));
        }
        break;
    }
  }
  return scores;
}

double compute_umf_score(const ScoreSet& scores, const DirectiveVector& directive) {
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& [id, score] : scores) {
    if (!directive.is_active(id)) continue;
    numerator += directive[id] * score.score;
    denominator += directive[id];
  }
  if (denominator <= 0.0) {
    throw NoActiveDimensions("no active, applicable dimensions with directive mass");
  }
  return numerator / denominator;
}

Json score_set_to_json(const ScoreSet& scores, bool with_evidence) {
  Json obj = Json::object();
  for (const DimensionId id : all_dimensions()) {
    auto it = scores.find(id);
    if (it == scores.end()) continue;
    Json entry = Json::object();
    entry["score"] = it->second.score;
    if (with_evidence) {
      Json ev = Json::array();
      for (const auto& m : it->second.evidence) {
        ev.push_back(Json{{"marker", m.marker}, {"position", m.position}});
      }
      entry["evidence"] = ev;
    }
    obj[std::string(to_string(id))] = entry;
  }
  return obj;
}

}  // namespace umf
