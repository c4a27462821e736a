#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>

#include "umf/profile.hpp"

namespace umf {

/// 16-entry structural-distance vector between a source and target profile.
/// Entries are fractions in [0,1]; an entry is 0 whenever the two profiles
/// encode the dimension identically.
struct DivergenceVector {
  DimensionArray<double> values{};

  double operator[](DimensionId id) const { return at(values, id); }
};

/// Discrete comparison with predetermined divergence values. For word_order
/// the rule is total over the six canonical orders: identical -> 0.0, verb on
/// the same side of the object (headedness preserved) -> 0.6, object/verb
/// order inverted -> 1.0. Other categorical dimensions use a shipped
/// symmetric lookup table; unlisted label pairs default to 0.5 with a warning
/// on stderr.
double categorical_divergence(DimensionId dimension, std::string_view src_label,
                              std::string_view tgt_label);

/// |src - tgt|; both inputs must lie in [0,1].
double numeric_divergence(double src, double tgt);

/// Jaccard distance over feature sets; both-empty -> 0.
double set_divergence(const std::set<std::string>& src, const std::set<std::string>& tgt);

/// Weighted average of per-component absolute differences. Component names
/// and order must match on both sides; weights must sum to 1.
double composite_divergence(const Composite& src, const Composite& tgt,
                            std::span<const double> component_weights);

/// Boolean dimensions use shipped per-dimension magnitudes when the flags
/// differ (equal flags -> 0).
double boolean_divergence(DimensionId dimension, bool src, bool tgt);

/// BooleanPair: both sub-flags differ -> 0.8, one differs -> 0.4, none -> 0.
double boolean_pair_divergence(const BooleanPair& src, const BooleanPair& tgt);

/// Fixed TAM sub-component weights (tense, aspect, mood).
inline constexpr std::array<double, 3> kTamComponentWeights{0.4, 0.4, 0.2};

/// Per-dimension dispatch over the rule families above. Throws KindMismatch
/// when the two profiles encode a dimension with different kinds.
DivergenceVector compute_divergence_vector(const LanguageProfile& src,
                                           const LanguageProfile& tgt);

Json divergence_to_json(const DivergenceVector& v);
std::string divergence_table(const DivergenceVector& v, const LanguageProfile& src,
                             const LanguageProfile& tgt);

}  // namespace umf
