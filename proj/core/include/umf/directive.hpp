#pragma once

#include <optional>
#include <set>
#include <string>

#include "umf/divergence.hpp"
#include "umf/profile.hpp"

namespace umf {

/// Weighted, L2-normalized divergence vector plus the active dimension set.
/// Unit Euclidean norm whenever any divergence entry is non-zero; entries are
/// zero exactly where divergence entries are zero.
struct DirectiveVector {
  DimensionArray<double> values{};
  std::set<DimensionId> active;
  std::string source_code;
  std::string target_code;

  double operator[](DimensionId id) const { return at(values, id); }
  bool is_active(DimensionId id) const { return active.count(id) > 0; }
};

/// Entry-wise product divergence[i] * weight[i]. All weights must be > 0.
DimensionArray<double> apply_weights(const DivergenceVector& divergence,
                                     const DimensionArray<double>& weights);

/// Plain L2 normalization: each entry divided by the Euclidean norm of the
/// whole vector. Throws ZeroVector on all-zero input (identical-language
/// pair; the caller must skip reranking).
DimensionArray<double> normalize_directive(const DimensionArray<double>& weighted);

/// Dimensions whose RAW DIVERGENCE is >= threshold.
std::set<DimensionId> active_dimensions(const DivergenceVector& divergence, double threshold);

inline constexpr double kDefaultActivationThreshold = 0.1;

/// divergence -> weights -> normalize, with the active set attached.
/// `weights` defaults to the target profile's weights.
DirectiveVector build_directive(const LanguageProfile& src, const LanguageProfile& tgt,
                                double threshold = kDefaultActivationThreshold,
                                const std::optional<DimensionArray<double>>& weights = {});

Json directive_to_json(const DirectiveVector& v);

}  // namespace umf
