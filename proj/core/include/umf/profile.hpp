#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "umf/dimensions.hpp"

namespace umf {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Dimension values (tagged union over the kinds a profile may encode)
// ---------------------------------------------------------------------------

struct Categorical {
  std::string label;

  bool operator==(const Categorical&) const = default;
};

struct Numeric {
  double value = 0.0;  // fraction in [0,1]

  bool operator==(const Numeric&) const = default;
};

struct FeatureSet {
  std::set<std::string> features;

  bool operator==(const FeatureSet&) const = default;
};

struct CompositeComponent {
  std::string name;
  double value = 0.0;  // fraction in [0,1]

  bool operator==(const CompositeComponent&) const = default;
};

struct Composite {
  std::vector<CompositeComponent> components;  // order is significant

  bool operator==(const Composite&) const = default;
};

struct Boolean {
  bool flag = false;

  bool operator==(const Boolean&) const = default;
};

struct BooleanPair {
  bool first = false;
  bool second = false;

  bool operator==(const BooleanPair&) const = default;
};

using DimensionValue =
    std::variant<Categorical, Numeric, FeatureSet, Composite, Boolean, BooleanPair>;

std::string_view kind_name(const DimensionValue& v);

// ---------------------------------------------------------------------------
// Marker inventories
// ---------------------------------------------------------------------------

/// Surface strings used by the scorers, stored in the target language's
/// native script (NFC) exactly as matched against candidates.
struct MarkerInventory {
  std::vector<std::string> verb_final_suffixes;
  std::map<std::string, std::vector<std::string>> case_suffixes;  // case name -> suffixes
  std::vector<std::string> plural_markers;
  std::vector<std::string> agreement_markers;
  std::vector<std::string> tam_markers;
  std::vector<std::string> honorific_formal;
  std::vector<std::string> honorific_informal;
  std::vector<std::string> negation_markers;
  std::vector<std::string> relativizer_markers;
  std::vector<std::string> copula_forms;
  std::vector<std::string> topic_focus_particles;

  bool empty() const;
  std::vector<std::string> all_case_suffixes() const;
};

struct Dimension {
  DimensionId id = DimensionId::word_order;
  DimensionValue value;
  double weight = 1.0;
  MarkerInventory markers;
};

struct LanguageProfile {
  std::string language_code;  // BCP-47-style
  std::string language_name;
  DimensionArray<Dimension> dimensions;

  const Dimension& dimension(DimensionId id) const { return at(dimensions, id); }
};

struct Violation {
  DimensionId dimension;
  std::string reason;
};

// ---------------------------------------------------------------------------
// Loading / validation / serialization
// ---------------------------------------------------------------------------

/// Parses the profile JSON document. Throws ParseError for malformed JSON and
/// SchemaError for structural problems (missing/unknown dimension, unknown
/// kind or key, wrong value type); both name the offending field. Marker
/// strings are NFC-normalized. Range/invariant checks live in
/// validate_profile().
LanguageProfile parse_profile(const Json& doc);

/// parse + validate; throws SchemaError listing the violations when any
/// invariant fails. The returned profile is treated as immutable.
LanguageProfile load_profile(const std::filesystem::path& path);

/// Empty when every invariant holds; violations carry dimension id + reason.
std::vector<Violation> validate_profile(const LanguageProfile& profile);

Json profile_to_json(const LanguageProfile& profile);

/// Per-dimension weights from the profile (already defaulted at parse time).
DimensionArray<double> profile_weights(const LanguageProfile& profile);

/// The shipped weight set W (used when a profile omits a weight).
const DimensionArray<double>& default_weights();

/// Weight-override file: a JSON object {dimension name: weight}.
DimensionArray<double> load_weight_overrides(const std::filesystem::path& path,
                                             const DimensionArray<double>& base);

}  // namespace umf
