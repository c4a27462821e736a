#include "umf/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

namespace {

constexpr std::array<std::string_view, kDimensionCount> kDimensionNames{
    "word_order",   "case_marking", "morphology", "agreement",
    "tam",          "classifiers",  "honorifics", "evidentiality",
    "serial_verbs", "definiteness", "animacy",    "info_structure",
    "negation",     "pro_drop",     "relative_clauses", "copula",
};

// Shipped weight set W. 1.2 / 1.0 / 1.0 / 0.5 for word order, case marking,
// information structure and copula; the rest recovered from the published
// English->Sinhala directive vector (confirmed by the directive golden test).
constexpr DimensionArray<double> kDefaultWeights{
    1.2,  // word_order
    1.0,  // case_marking
    0.8,  // morphology
    0.6,  // agreement
    0.7,  // tam
    0.8,  // classifiers
    0.9,  // honorifics
    0.8,  // evidentiality
    0.7,  // serial_verbs
    0.8,  // definiteness
    0.6,  // animacy
    1.0,  // info_structure
    0.8,  // negation
    0.7,  // pro_drop
    0.6,  // relative_clauses
    0.5,  // copula
};

const std::set<std::string>& word_order_labels() {
  static const std::set<std::string> labels{"SVO", "SOV", "VSO", "VOS", "OVS", "OSV"};
  return labels;
}

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

std::vector<std::string> parse_marker_list(const Json& arr, const std::string& where) {
  if (!arr.is_array()) schema_fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) schema_fail(where, "marker entries must be strings");
    out.push_back(nfc(item.get<std::string>()));
  }
  return out;
}

MarkerInventory parse_markers(const Json& obj, const std::string& where) {
  if (!obj.is_object()) schema_fail(where, "markers must be an object");
  MarkerInventory inv;
  for (const auto& [key, value] : obj.items()) {
    const std::string loc = where + ".markers." + key;
    if (key == "verb_final_suffixes") {
      inv.verb_final_suffixes = parse_marker_list(value, loc);
    } else if (key == "case_suffixes") {
      if (!value.is_object()) schema_fail(loc, "expected an object of case-name -> suffix list");
      for (const auto& [case_name, suffixes] : value.items()) {
        inv.case_suffixes[case_name] = parse_marker_list(suffixes, loc + "." + case_name);
      }
    } else if (key == "plural_markers") {
      inv.plural_markers = parse_marker_list(value, loc);
    } else if (key == "agreement_markers") {
      inv.agreement_markers = parse_marker_list(value, loc);
    } else if (key == "tam_markers") {
      inv.tam_markers = parse_marker_list(value, loc);
    } else if (key == "honorific_formal") {
      inv.honorific_formal = parse_marker_list(value, loc);
    } else if (key == "honorific_informal") {
      inv.honorific_informal = parse_marker_list(value, loc);
    } else if (key == "negation_markers") {
      inv.negation_markers = parse_marker_list(value, loc);
    } else if (key == "relativizer_markers") {
      inv.relativizer_markers = parse_marker_list(value, loc);
    } else if (key == "copula_forms") {
      inv.copula_forms = parse_marker_list(value, loc);
    } else if (key == "topic_focus_particles") {
      inv.topic_focus_particles = parse_marker_list(value, loc);
    } else {
      schema_fail(loc, "unknown marker role");
    }
  }
  return inv;
}

DimensionValue parse_value(const std::string& kind, const Json& value, const std::string& where) {
  if (kind == "categorical") {
    if (!value.is_string()) schema_fail(where, "categorical value must be a string");
    return Categorical{value.get<std::string>()};
  }
  if (kind == "numeric") {
    if (!value.is_number()) schema_fail(where, "numeric value must be a number");
    return Numeric{value.get<double>()};
  }
  if (kind == "feature_set") {
    if (!value.is_array()) schema_fail(where, "feature_set value must be an array of strings");
    FeatureSet fs;
    for (const auto& item : value) {
      if (!item.is_string()) schema_fail(where, "features must be strings");
      fs.features.insert(item.get<std::string>());
    }
    return fs;
  }
  if (kind == "composite") {
    if (!value.is_array()) schema_fail(where, "composite value must be an array of components");
    Composite comp;
    for (const auto& item : value) {
      if (!item.is_object() || !item.contains("name") || !item.contains("value") ||
          !item["name"].is_string() || !item["value"].is_number()) {
        schema_fail(where, "components must be {\"name\", \"value\"} objects");
      }
      comp.components.push_back({item["name"].get<std::string>(), item["value"].get<double>()});
    }
    return comp;
  }
  if (kind == "boolean") {
    if (!value.is_boolean()) schema_fail(where, "boolean value must be true/false");
    return Boolean{value.get<bool>()};
  }
  if (kind == "boolean_pair") {
    if (!value.is_array() || value.size() != 2 || !value[0].is_boolean() ||
        !value[1].is_boolean()) {
      schema_fail(where, "boolean_pair value must be [flag, flag]");
    }
    return BooleanPair{value[0].get<bool>(), value[1].get<bool>()};
  }
  schema_fail(where, "unknown kind '" + kind + "'");
}

void check_marker_strings(const MarkerInventory& inv, DimensionId id,
                          std::vector<Violation>& out) {
  auto check_list = [&](const std::vector<std::string>& list, const char* role) {
    for (const auto& m : list) {
      if (trim(m).empty()) {
        out.push_back({id, std::string(role) + " contains an empty marker string"});
      }
    }
  };
  check_list(inv.verb_final_suffixes, "verb_final_suffixes");
  for (const auto& [name, list] : inv.case_suffixes) {
    check_list(list, "case_suffixes");
  }
  check_list(inv.plural_markers, "plural_markers");
  check_list(inv.agreement_markers, "agreement_markers");
  check_list(inv.tam_markers, "tam_markers");
  check_list(inv.honorific_formal, "honorific_formal");
  check_list(inv.honorific_informal, "honorific_informal");
  check_list(inv.negation_markers, "negation_markers");
  check_list(inv.relativizer_markers, "relativizer_markers");
  check_list(inv.copula_forms, "copula_forms");
  check_list(inv.topic_focus_particles, "topic_focus_particles");
}

Json markers_to_json(const MarkerInventory& inv) {
  Json obj = Json::object();
  auto put = [&](const char* key, const std::vector<std::string>& list) {
    if (!list.empty()) obj[key] = list;
  };
  put("verb_final_suffixes", inv.verb_final_suffixes);
  if (!inv.case_suffixes.empty()) {
    Json cases = Json::object();
    for (const auto& [name, list] : inv.case_suffixes) cases[name] = list;
    obj["case_suffixes"] = cases;
  }
  put("plural_markers", inv.plural_markers);
  put("agreement_markers", inv.agreement_markers);
  put("tam_markers", inv.tam_markers);
  put("honorific_formal", inv.honorific_formal);
  put("honorific_informal", inv.honorific_informal);
  put("negation_markers", inv.negation_markers);
  put("relativizer_markers", inv.relativizer_markers);
  put("copula_forms", inv.copula_forms);
  put("topic_focus_particles", inv.topic_focus_particles);
  return obj;
}

Json value_to_json(const DimensionValue& v, std::string& kind_out) {
  struct Visitor {
    std::string& kind;
    Json operator()(const Categorical& c) {
      kind = "categorical";
      return c.label;
    }
    Json operator()(const Numeric& n) {
      kind = "numeric";
      return n.value;
    }
    Json operator()(const FeatureSet& fs) {
      kind = "feature_set";
      Json arr = Json::array();
      for (const auto& f : fs.features) arr.push_back(f);
      return arr;
    }
    Json operator()(const Composite& c) {
      kind = "composite";
      Json arr = Json::array();
      for (const auto& comp : c.components) {
        arr.push_back(Json{{"name", comp.name}, {"value", comp.value}});
      }
      return arr;
    }
    Json operator()(const Boolean& b) {
      kind = "boolean";
      return b.flag;
    }
    Json operator()(const BooleanPair& p) {
      kind = "boolean_pair";
      return Json::array({p.first, p.second});
    }
  };
  return std::visit(Visitor{kind_out}, v);
}

}  // namespace

std::string_view to_string(DimensionId id) { return kDimensionNames[index_of(id)]; }

std::optional<DimensionId> dimension_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    if (kDimensionNames[i] == name) return static_cast<DimensionId>(i);
  }
  return std::nullopt;
}

std::string_view kind_name(const DimensionValue& v) {
  switch (v.index()) {
    case 0: return "categorical";
    case 1: return "numeric";
    case 2: return "feature_set";
    case 3: return "composite";
    case 4: return "boolean";
    default: return "boolean_pair";
  }
}

bool MarkerInventory::empty() const {
  return verb_final_suffixes.empty() && case_suffixes.empty() && plural_markers.empty() &&
         agreement_markers.empty() && tam_markers.empty() && honorific_formal.empty() &&
         honorific_informal.empty() && negation_markers.empty() &&
         relativizer_markers.empty() && copula_forms.empty() && topic_focus_particles.empty();
}

std::vector<std::string> MarkerInventory::all_case_suffixes() const {
  std::vector<std::string> out;
  for (const auto& [name, list] : case_suffixes) {
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

LanguageProfile parse_profile(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("profile: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "language_code" && key != "language_name" && key != "dimensions") {
      throw SchemaError("profile: unknown top-level field '" + key + "'");
    }
  }
  if (!doc.contains("language_code") || !doc["language_code"].is_string()) {
    throw SchemaError("profile: missing or non-string 'language_code'");
  }
  if (!doc.contains("language_name") || !doc["language_name"].is_string()) {
    throw SchemaError("profile: missing or non-string 'language_name'");
  }
  if (!doc.contains("dimensions") || !doc["dimensions"].is_object()) {
    throw SchemaError("profile: missing 'dimensions' object");
  }

  LanguageProfile profile;
  profile.language_code = doc["language_code"].get<std::string>();
  profile.language_name = doc["language_name"].get<std::string>();

  const Json& dims = doc["dimensions"];
  std::array<bool, kDimensionCount> seen{};
  for (const auto& [key, dim_obj] : dims.items()) {
    const auto id = dimension_from_string(key);
    if (!id) throw SchemaError("dimensions: unknown dimension id '" + key + "'");
    const std::string where = "dimensions." + key;
    if (!dim_obj.is_object()) schema_fail(where, "must be an object");
    for (const auto& [field, fv] : dim_obj.items()) {
      if (field != "kind" && field != "value" && field != "weight" && field != "markers") {
        schema_fail(where, "unknown field '" + field + "'");
      }
    }
    if (!dim_obj.contains("kind") || !dim_obj["kind"].is_string()) {
      schema_fail(where, "missing 'kind'");
    }
    if (!dim_obj.contains("value")) schema_fail(where, "missing 'value'");

    Dimension d;
    d.id = *id;
    d.value = parse_value(dim_obj["kind"].get<std::string>(), dim_obj["value"], where);
    if (dim_obj.contains("weight")) {
      if (!dim_obj["weight"].is_number()) schema_fail(where, "'weight' must be a number");
      d.weight = dim_obj["weight"].get<double>();
    } else {
      d.weight = kDefaultWeights[index_of(*id)];
    }
    if (dim_obj.contains("markers")) {
      d.markers = parse_markers(dim_obj["markers"], where);
    }
    at(profile.dimensions, *id) = std::move(d);
    seen[index_of(*id)] = true;
  }
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    if (!seen[i]) {
      throw SchemaError("dimensions: missing dimension '" + std::string(kDimensionNames[i]) +
                        "'");
    }
  }
  return profile;
}

LanguageProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file: " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed profile JSON in " + path.string() + ": " + e.what());
  }
  LanguageProfile profile = parse_profile(doc);
  const auto violations = validate_profile(profile);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << path.string() << ": invalid profile:";
    for (const auto& v : violations) {
      msg << " [" << to_string(v.dimension) << "] " << v.reason << ";";
    }
    throw SchemaError(msg.str());
  }
  return profile;
}

std::vector<Violation> validate_profile(const LanguageProfile& profile) {
  std::vector<Violation> out;
  for (const DimensionId id : all_dimensions()) {
    const Dimension& d = profile.dimension(id);
    if (!(d.weight > 0.0)) {
      out.push_back({id, "weight must be > 0"});
    }
    if (const auto* num = std::get_if<Numeric>(&d.value)) {
      if (!(num->value >= 0.0 && num->value <= 1.0)) {
        out.push_back({id, "numeric value outside [0,1]"});
      }
    } else if (const auto* comp = std::get_if<Composite>(&d.value)) {
      for (const auto& c : comp->components) {
        if (!(c.value >= 0.0 && c.value <= 1.0)) {
          out.push_back({id, "component '" + c.name + "' outside [0,1]"});
        }
      }
      if (id == DimensionId::tam) {
        const bool shape_ok = comp->components.size() == 3 &&
                              comp->components[0].name == "tense" &&
                              comp->components[1].name == "aspect" &&
                              comp->components[2].name == "mood";
        if (!shape_ok) {
          out.push_back({id, "tam composite must have components tense, aspect, mood"});
        }
      }
    } else if (const auto* cat = std::get_if<Categorical>(&d.value)) {
      if (id == DimensionId::word_order && word_order_labels().count(cat->label) == 0) {
        out.push_back({id, "word_order label '" + cat->label + "' not one of the six orders"});
      }
    }
    check_marker_strings(d.markers, id, out);
  }
  return out;
}

Json profile_to_json(const LanguageProfile& profile) {
  Json doc = Json::object();
  doc["language_code"] = profile.language_code;
  doc["language_name"] = profile.language_name;
  Json dims = Json::object();
  for (const DimensionId id : all_dimensions()) {
    const Dimension& d = profile.dimension(id);
    Json dim = Json::object();
    std::string kind;
    Json value = value_to_json(d.value, kind);
    dim["kind"] = kind;
    dim["value"] = value;
    dim["weight"] = d.weight;
    dim["markers"] = markers_to_json(d.markers);
    dims[std::string(to_string(id))] = dim;
  }
  doc["dimensions"] = dims;
  return doc;
}

DimensionArray<double> profile_weights(const LanguageProfile& profile) {
  DimensionArray<double> out{};
  for (const DimensionId id : all_dimensions()) {
    at(out, id) = profile.dimension(id).weight;
  }
  return out;
}

const DimensionArray<double>& default_weights() {
  static const DimensionArray<double> w = kDefaultWeights;
  return w;
}

DimensionArray<double> load_weight_overrides(const std::filesystem::path& path,
                                             const DimensionArray<double>& base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file: " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed weight JSON in " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw SchemaError("weights: top level must be an object");
  DimensionArray<double> out = base;
  for (const auto& [key, value] : doc.items()) {
    const auto id = dimension_from_string(key);
    if (!id) throw SchemaError("weights: unknown dimension '" + key + "'");
    if (!value.is_number()) throw SchemaError("weights: '" + key + "' must be a number");
    at(out, *id) = value.get<double>();
  }
  return out;
}

}  // namespace umf
