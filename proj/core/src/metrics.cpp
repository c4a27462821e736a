#include "umf/metrics.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "umf/errors.hpp"
#include "umf/text.hpp"

namespace umf {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::improvement: return "improvement";
    case Classification::neutral: return "neutral";
    default: return "error";
  }
}

std::optional<Classification> classification_from_string(std::string_view s) {
  if (s == "improvement") return Classification::improvement;
  if (s == "neutral") return Classification::neutral;
  if (s == "error") return Classification::error;
  return std::nullopt;
}

std::vector<InterventionLabel> read_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open label file: " + path.string());
  std::vector<InterventionLabel> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::array<std::string, 3> fields;
    std::size_t field = 0;
    std::string current;
    for (char c : line) {
      if (c == ',' && field < 2) {
        fields[field++] = current;
        current.clear();
      } else {
        current += c;
      }
    }
    fields[field] = current;
    if (field != 2) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected sentence_id,annotator_id,classification");
    }
    if (line_no == 1 && trim(fields[0]) == "sentence_id") continue;  // header
    InterventionLabel label;
    label.sentence_id = trim(fields[0]);
    label.annotator_id = trim(fields[1]);
    const auto cls = classification_from_string(ascii_lower(trim(fields[2])));
    if (!cls) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": classification must be improvement/neutral/error");
    }
    label.classification = *cls;
    out.push_back(std::move(label));
  }
  return out;
}

double change_rate(std::size_t changed, std::size_t total) {
  if (total == 0) throw EmptyInput("change rate over zero sentences");
  return 100.0 * static_cast<double>(changed) / static_cast<double>(total);
}

double intervention_precision(std::size_t improvements, std::size_t interventions) {
  if (interventions == 0) {
    throw NoInterventions("precision undefined without interventions");
  }
  return 100.0 * static_cast<double>(improvements) / static_cast<double>(interventions);
}

double gain_risk(std::size_t improvements, std::size_t errors, std::size_t interventions) {
  if (interventions == 0) {
    throw NoInterventions("gain-risk undefined without interventions");
  }
  if (errors == 0) {
    return improvements == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(improvements) / static_cast<double>(errors);
}

double mean_compliance(std::span<const double> chosen_scores) {
  if (chosen_scores.empty()) throw EmptyInput("mean compliance over zero results");
  double total = 0.0;
  for (double s : chosen_scores) total += s;
  return total / static_cast<double>(chosen_scores.size());
}

double cohen_kappa(std::span<const Classification> a, std::span<const Classification> b) {
  if (a.size() != b.size()) throw LengthMismatch("label lists differ in length");
  if (a.empty()) throw LengthMismatch("label lists are empty");
  const auto n = static_cast<double>(a.size());

  double confusion[3][3] = {};
  for (std::size_t i = 0; i < a.size(); ++i) {
    confusion[static_cast<int>(a[i])][static_cast<int>(b[i])] += 1.0;
  }
  double p_o = 0.0;
  for (int k = 0; k < 3; ++k) p_o += confusion[k][k];
  p_o /= n;

  double p_e = 0.0;
  for (int k = 0; k < 3; ++k) {
    double row = 0.0;
    double col = 0.0;
    for (int j = 0; j < 3; ++j) {
      row += confusion[k][j];
      col += confusion[j][k];
    }
    p_e += (row / n) * (col / n);
  }
  if (std::fabs(1.0 - p_e) < 1e-15) {
    if (std::fabs(1.0 - p_o) < 1e-15) return 1.0;
    throw DegenerateMarginals("chance agreement is 1 with imperfect observed agreement");
  }
  return (p_o - p_e) / (1.0 - p_e);
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw LengthMismatch("series differ in length");
  if (x.size() < 2) throw EmptyInput("correlation needs at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateMarginals("correlation undefined for a constant series");
  }
  return sxy / std::sqrt(sxx * syy);
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

MetricsReport metrics_from_counts(std::size_t total_cases, std::size_t interventions,
                                  std::size_t improvements, std::size_t neutrals,
                                  std::size_t errors) {
  MetricsReport report;
  report.total_cases = total_cases;
  report.interventions = interventions;
  report.improvements = improvements;
  report.neutrals = neutrals;
  report.errors = errors;
  report.change_rate_pct = change_rate(interventions, total_cases);
  if (interventions > 0) {
    report.intervention_precision_pct = intervention_precision(improvements, interventions);
    report.gain_risk_ratio = gain_risk(improvements, errors, interventions);
  }
  if (interventions > total_cases) {
    report.warnings.push_back("interventions exceed total cases");
  }
  if (!report.counts_consistent()) {
    std::ostringstream os;
    os << "inconsistent label counts: improvements (" << improvements << ") + neutrals ("
       << neutrals << ") + errors (" << errors << ") != interventions (" << interventions
       << ")";
    report.warnings.push_back(os.str());
  }
  return report;
}

namespace {

std::string format_ratio(const std::optional<double>& v) {
  if (!v) return "-";
  if (std::isinf(*v)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << round2(*v);
  return os.str();
}

std::string format_pct(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << round2(*v) << "%";
  return os.str();
}

}  // namespace

Json report_to_json(const MetricsReport& report) {
  Json doc = Json::object();
  if (!report.language.empty()) doc["language"] = report.language;
  doc["total_cases"] = report.total_cases;
  doc["interventions"] = report.interventions;
  doc["change_rate"] = round2(report.change_rate_pct);
  if (report.intervention_precision_pct) {
    doc["intervention_precision"] = round2(*report.intervention_precision_pct);
  } else {
    doc["intervention_precision"] = nullptr;
  }
  if (report.gain_risk_ratio) {
    if (std::isinf(*report.gain_risk_ratio)) {
      doc["gain_risk"] = "inf";
    } else {
      doc["gain_risk"] = round2(*report.gain_risk_ratio);
    }
  } else {
    doc["gain_risk"] = nullptr;
  }
  doc["counts"] = Json{{"improvements", report.improvements},
                       {"neutrals", report.neutrals},
                       {"errors", report.errors},
                       {"excluded", report.excluded}};
  if (report.mean_umf_score) doc["mean_umf_score"] = *report.mean_umf_score;
  if (report.kappa) doc["kappa"] = *report.kappa;
  if (report.divergence_correlation) {
    doc["divergence_correlation"] = *report.divergence_correlation;
  }
  if (!report.warnings.empty()) doc["warnings"] = report.warnings;
  return doc;
}

std::string report_table(const MetricsReport& report) {
  std::ostringstream os;
  const std::string lang = report.language.empty() ? "-" : report.language;
  os << std::left << std::setw(12) << "Language" << std::right << std::setw(12) << "Total Cases"
     << std::setw(13) << "Change Rate" << std::setw(24) << "Intervention Precision"
     << std::setw(11) << "Gain-Risk" << "\n";
  os << std::left << std::setw(12) << lang << std::right << std::setw(12) << report.total_cases
     << std::setw(13) << format_pct(report.change_rate_pct) << std::setw(24)
     << format_pct(report.intervention_precision_pct) << std::setw(11)
     << format_ratio(report.gain_risk_ratio) << "\n";
  for (const std::string& w : report.warnings) {
    os << "warning: " << w << "\n";
  }
  return os.str();
}

}  // namespace umf
