#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umf/profile.hpp"

namespace umf {

enum class Classification { improvement, neutral, error };

std::string_view to_string(Classification c);
std::optional<Classification> classification_from_string(std::string_view s);

/// One human judgment of one intervention.
struct InterventionLabel {
  std::string sentence_id;
  std::string annotator_id;
  Classification classification = Classification::neutral;
};

/// CSV with header sentence_id,annotator_id,classification.
std::vector<InterventionLabel> read_labels_csv(const std::filesystem::path& path);

// --- metric primitives -----------------------------------------------------

/// 100 * changed / total. Throws EmptyInput on total == 0.
double change_rate(std::size_t changed, std::size_t total);

/// 100 * improvements / interventions; neutrals count as non-improvements.
/// Throws NoInterventions on interventions == 0 (undefined, never 0).
double intervention_precision(std::size_t improvements, std::size_t interventions);

/// improvements / errors; errors == 0 and improvements > 0 -> +infinity;
/// both 0 -> 0. Throws NoInterventions when there were no interventions.
double gain_risk(std::size_t improvements, std::size_t errors, std::size_t interventions);

/// Arithmetic mean of chosen-candidate compliance scores.
double mean_compliance(std::span<const double> chosen_scores);

/// (p_o - p_e) / (1 - p_e) over the 3x3 confusion matrix. p_e == 1 with
/// p_o == 1 is defined as 1.0, otherwise DegenerateMarginals.
double cohen_kappa(std::span<const Classification> a, std::span<const Classification> b);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// --- aggregate report ------------------------------------------------------

struct MetricsReport {
  std::string language;
  std::size_t total_cases = 0;
  std::size_t interventions = 0;
  std::size_t improvements = 0;
  std::size_t neutrals = 0;
  std::size_t errors = 0;
  std::size_t excluded = 0;  // disagreements without adjudication

  double change_rate_pct = 0.0;
  std::optional<double> intervention_precision_pct;  // absent without interventions
  std::optional<double> gain_risk_ratio;             // +inf sentinel possible
  std::optional<double> mean_umf_score;
  std::optional<double> kappa;
  std::optional<double> divergence_correlation;

  std::vector<std::string> warnings;

  bool counts_consistent() const {
    return improvements + neutrals + errors == interventions;
  }
};

/// Builds a report from bare counts, applying the metric formulas as defined
/// and flagging inconsistent count decompositions instead of resolving them.
MetricsReport metrics_from_counts(std::size_t total_cases, std::size_t interventions,
                                  std::size_t improvements, std::size_t neutrals,
                                  std::size_t errors);

Json report_to_json(const MetricsReport& report);

/// Aligned text table with the change-rate / precision / gain-risk columns.
std::string report_table(const MetricsReport& report);

/// Percentages are rounded to 2 decimals in reports only.
double round2(double v);

}  // namespace umf
