#include "umf/directive.hpp"

#include <cmath>

#include "umf/errors.hpp"

namespace umf {

DimensionArray<double> apply_weights(const DivergenceVector& divergence,
                                     const DimensionArray<double>& weights) {
  DimensionArray<double> out{};
  for (const DimensionId id : all_dimensions()) {
    const double w = at(weights, id);
    if (!(w > 0.0)) {
      throw NonPositiveWeight("weight for '" + std::string(to_string(id)) +
                              "' must be > 0");
    }
    at(out, id) = divergence[id] * w;
  }
  return out;
}

DimensionArray<double> normalize_directive(const DimensionArray<double>& weighted) {
  double sq = 0.0;
  for (double v : weighted) sq += v * v;
  if (sq == 0.0) {
    throw ZeroVector("all-zero weighted divergence (identical language pair)");
  }
  const double norm = std::sqrt(sq);
  DimensionArray<double> out{};
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    out[i] = weighted[i] / norm;
  }
  return out;
}

std::set<DimensionId> active_dimensions(const DivergenceVector& divergence, double threshold) {
  std::set<DimensionId> out;
  for (const DimensionId id : all_dimensions()) {
    if (divergence[id] >= threshold) out.insert(id);
  }
  return out;
}

DirectiveVector build_directive(const LanguageProfile& src, const LanguageProfile& tgt,
                                double threshold,
                                const std::optional<DimensionArray<double>>& weights) {
  const DivergenceVector divergence = compute_divergence_vector(src, tgt);
  const DimensionArray<double> w = weights ? *weights : profile_weights(tgt);
  DirectiveVector out;
  out.values = normalize_directive(apply_weights(divergence, w));
  out.active = active_dimensions(divergence, threshold);
  out.source_code = src.language_code;
  out.target_code = tgt.language_code;
  return out;
}

Json directive_to_json(const DirectiveVector& v) {
  Json obj = Json::object();
  obj["pair"] = Json{{"source", v.source_code}, {"target", v.target_code}};
  Json values = Json::object();
  for (const DimensionId id : all_dimensions()) {
    values[std::string(to_string(id))] = v[id];
  }
  obj["directive"] = values;
  Json active = Json::array();
  for (const DimensionId id : all_dimensions()) {
    if (v.is_active(id)) active.push_back(std::string(to_string(id)));
  }
  obj["active"] = active;
  return obj;
}

}  // namespace umf
