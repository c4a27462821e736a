// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.
//
// usage: umf_acceptance <path-to-umf-binary> <data-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "support/test_support.hpp"
#include "umf/directive.hpp"
#include "umf/divergence.hpp"
#include "umf/errors.hpp"
#include "umf/metrics.hpp"
#include "umf/pipeline.hpp"
#include "umf/rerank.hpp"
#include "umf/senses.hpp"

using namespace umf;
using namespace umf::test;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(number, name, pass, detail);
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------

bool criterion_table2(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const DivergenceVector v = compute_divergence_vector(english(), sinhala());
  const double ms = elapsed_ms(start);
  for (const DimensionId id : all_dimensions()) {
    if (v[id] != at(published_divergence(), id)) {
      detail = std::string(to_string(id)) + " differs";
      return false;
    }
  }
  std::ostringstream os;
  os << "16/16 exact, " << ms << " ms";
  detail = os.str();
  return ms < 1000.0;
}

bool criterion_directive(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const DirectiveVector d = build_directive(english(), sinhala());
  const double ms = elapsed_ms(start);
  double max_err = 0.0;
  for (const DimensionId id : all_dimensions()) {
    max_err = std::max(max_err, std::fabs(d[id] - at(published_directive(), id)));
  }
  double sq = 0.0;
  for (double v : d.values) sq += v * v;
  const double norm_err = std::fabs(std::sqrt(sq) - 1.0);
  std::ostringstream os;
  os << "max entry error " << max_err << ", norm error " << norm_err << ", " << ms << " ms";
  detail = os.str();
  return max_err < 0.0005 && norm_err < 1e-9 && ms < 1000.0;
}

bool criterion_activation(std::string& detail) {
  const DivergenceVector v = compute_divergence_vector(english(), sinhala());
  const auto active = active_dimensions(v, 0.1);
  std::ostringstream os;
  os << active.size() << " active";
  detail = os.str();
  return active.size() == 14 && active.count(DimensionId::classifiers) == 0 &&
         active.count(DimensionId::evidentiality) == 0;
}

bool criterion_alpha_endpoints(std::string& detail) {
  std::mt19937 rng(404);
  const auto fixture = make_intervention_fixture(rng, 200);
  const DirectiveVector directive = build_directive(english(), sinhala());

  RerankConfig top;
  top.alpha = 1.0;
  const Reranker model_only(english(), sinhala(), nullptr, top);
  std::size_t changed = 0;
  for (const auto& s : fixture) {
    if (model_only.rerank(s.candidates).changed) ++changed;
  }
  if (changed != 0) {
    detail = "alpha=1 changed " + std::to_string(changed) + " sentences";
    return false;
  }

  RerankConfig compliance;
  compliance.alpha = 0.0;
  const Reranker umf_only(english(), sinhala(), nullptr, compliance);
  for (const auto& s : fixture) {
    const int got = umf_only.rerank(s.candidates).chosen.original_rank;
    const int expected = oracle_select(s.candidates, sinhala(), directive, 0.0, nullptr);
    if (got != expected) {
      detail = "alpha=0 mismatch on " + s.corpus.sentence_id;
      return false;
    }
  }
  detail = "alpha=1 change rate 0.00%, alpha=0 matches brute force on 200 sentences";
  return true;
}

bool criterion_metrics_oracle(std::string& detail) {
  const MetricsReport report = metrics_from_counts(341, 53, 45, 0, 21);
  const bool values_ok = round2(report.change_rate_pct) == 15.54 &&
                         round2(*report.intervention_precision_pct) == 84.91 &&
                         round2(*report.gain_risk_ratio) == 2.14;
  bool flagged = false;
  for (const auto& w : report.warnings) {
    if (w.find("inconsistent") != std::string::npos) flagged = true;
  }
  std::ostringstream os;
  os << round2(report.change_rate_pct) << "% / " << round2(*report.intervention_precision_pct)
     << "% / " << round2(*report.gain_risk_ratio) << (flagged ? ", flagged" : ", NOT flagged");
  detail = os.str();
  return values_ok && flagged;
}

bool criterion_kappa(std::string& detail) {
  using C = Classification;
  const std::vector<C> a{C::improvement, C::improvement, C::neutral,
                         C::error,       C::improvement, C::neutral};
  const std::vector<C> b{C::improvement, C::neutral, C::neutral,
                         C::error,       C::improvement, C::neutral};
  if (std::fabs(cohen_kappa(a, b) - 17.0 / 23.0) > 1e-9) {
    detail = "hand case 17/23 failed";
    return false;
  }
  std::mt19937 rng(1812);
  double max_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = uniform_int(rng, 1, 200);
    std::vector<C> x;
    std::vector<C> y;
    for (int k = 0; k < n; ++k) {
      x.push_back(random_classification(rng));
      y.push_back(random_classification(rng));
    }
    try {
      max_err = std::max(max_err, std::fabs(cohen_kappa(x, y) - kappa_oracle(x, y)));
    } catch (const DegenerateMarginals&) {
      continue;
    }
    if (max_err >= 1e-9) {
      detail = "oracle deviation " + std::to_string(max_err);
      return false;
    }
  }
  std::ostringstream os;
  os << "1000 randomized pairs, max deviation " << max_err;
  detail = os.str();
  return true;
}

bool criterion_intervention_property(std::string& detail) {
  std::mt19937 rng(777);
  const auto fixture = make_intervention_fixture(rng, 200);

  RerankConfig balanced;
  balanced.alpha = 0.5;
  const Reranker mixed(english(), sinhala(), nullptr, balanced);
  std::size_t hits_half = 0;
  for (const auto& s : fixture) {
    if (mixed.rerank(s.candidates).chosen.original_rank == s.compliant_rank) ++hits_half;
  }

  RerankConfig compliance;
  compliance.alpha = 0.0;
  const Reranker umf_only(english(), sinhala(), nullptr, compliance);
  std::size_t hits_zero = 0;
  for (const auto& s : fixture) {
    if (umf_only.rerank(s.candidates).chosen.original_rank == s.compliant_rank) ++hits_zero;
  }

  const double rate_half = static_cast<double>(hits_half) / 200.0;
  const double rate_zero = static_cast<double>(hits_zero) / 200.0;
  std::ostringstream os;
  os << "alpha=0.5: " << 100.0 * rate_half << "%, alpha=0: " << 100.0 * rate_zero << "%";
  detail = os.str();
  return rate_half >= 0.95 && rate_zero == 1.0;
}

bool criterion_sense_gate(std::string& detail) {
  const SenseLexicon lexicon = load_lexicon(data_dir() / "lexicons" / "en-si.lexicon.json");
  const CandidateSet set = play_fixture();
  for (double alpha = 0.0; alpha < 1.0; alpha += 0.05) {
    RerankConfig cfg;
    cfg.alpha = alpha;
    const Reranker reranker(english(), sinhala(), &lexicon, cfg);
    const auto result = reranker.rerank(set);
    if (result.chosen.original_rank != 2) {
      std::ostringstream os;
      os << "wrong-sense candidate won at alpha " << alpha;
      detail = os.str();
      return false;
    }
  }
  detail = "sellam candidate selected at every alpha in [0, 1)";
  return true;
}

bool criterion_determinism(std::string& detail, const std::string& umf_bin,
                           const std::string& data_dir_arg) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "umf_acceptance_det";
  fs::create_directories(dir);
  std::mt19937 rng(31);
  const auto fixture = make_intervention_fixture(rng, 60);
  const fs::path corpus = dir / "corpus.jsonl";
  const fs::path candidates = dir / "candidates.jsonl";
  write_corpus_file(corpus, fixture);
  write_candidate_file(candidates, fixture);

  auto run_once = [&](const fs::path& out) {
    std::ostringstream cmd;
    cmd << "'" << umf_bin << "'"
        << " --profiles '" << data_dir_arg << "/profiles'"
        << " translate --src en --tgt si"
        << " --corpus '" << corpus.string() << "'"
        << " --candidates '" << candidates.string() << "'"
        << " --lexicon '" << data_dir_arg << "/lexicons/en-si.lexicon.json'"
        << " --out '" << out.string() << "' > /dev/null 2>&1";
    return std::system(cmd.str().c_str());
  };
  const fs::path out1 = dir / "run1.jsonl";
  const fs::path out2 = dir / "run2.jsonl";
  if (run_once(out1) != 0 || run_once(out2) != 0) {
    detail = "translate run failed";
    return false;
  }
  std::ifstream f1(out1, std::ios::binary);
  std::ifstream f2(out2, std::ios::binary);
  std::stringstream s1;
  std::stringstream s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  const bool identical = !s1.str().empty() && s1.str() == s2.str();
  std::ostringstream os;
  os << s1.str().size() << " bytes, " << (identical ? "identical" : "DIFFER");
  detail = os.str();
  fs::remove_all(dir);
  return identical;
}

bool criterion_property_suites(std::string& detail) {
  std::mt19937 rng(90210);
  const DirectiveVector directive = build_directive(english(), sinhala());
  const SourceCues cues = detect_source_cues("He did not say that it is good");

  // divergence invariants
  for (int i = 0; i < 10000; ++i) {
    auto [a, b] = random_profile_pair(rng);
    const DivergenceVector ab = compute_divergence_vector(a, b);
    const DivergenceVector ba = compute_divergence_vector(b, a);
    const DivergenceVector aa = compute_divergence_vector(a, a);
    for (const DimensionId id : all_dimensions()) {
      if (ab[id] < 0.0 || ab[id] > 1.0 || ab[id] != ba[id] || aa[id] != 0.0) {
        detail = "divergence invariant violated";
        return false;
      }
    }
  }

  // directive invariants
  int checked = 0;
  while (checked < 10000) {
    auto [a, b] = random_profile_pair(rng);
    const DivergenceVector divergence = compute_divergence_vector(a, b);
    DimensionArray<double> weights{};
    for (auto& w : weights) w = uniform(rng, 0.05, 3.0);
    const auto weighted = apply_weights(divergence, weights);
    double sq = 0.0;
    for (double v : weighted) sq += v * v;
    if (sq == 0.0) continue;
    ++checked;
    const auto normalized = normalize_directive(weighted);
    double nsq = 0.0;
    for (double v : normalized) nsq += v * v;
    if (std::fabs(std::sqrt(nsq) - 1.0) > 1e-9) {
      detail = "directive norm invariant violated";
      return false;
    }
    for (const DimensionId id : all_dimensions()) {
      if ((at(normalized, id) == 0.0) != (divergence[id] == 0.0)) {
        detail = "directive zero-preservation violated";
        return false;
      }
    }
  }

  // scorer fuzz: [0,1] outputs, sound evidence, no crashes
  for (int i = 0; i < 10000; ++i) {
    Candidate c;
    c.text = random_utf8(rng, 32);
    c.original_rank = 1;
    try {
      const ScoreSet scores = score_candidate(c, sinhala(), directive, cues);
      for (const auto& [id, s] : scores) {
        if (s.score < 0.0 || s.score > 1.0) {
          detail = "scorer range violated";
          return false;
        }
        for (const auto& ev : s.evidence) {
          if (c.text.compare(ev.position, ev.marker.size(), ev.marker) != 0) {
            detail = "evidence soundness violated";
            return false;
          }
        }
      }
      if (!scores.empty()) {
        const double umf = compute_umf_score(scores, directive);
        if (umf < 0.0 || umf > 1.0) {
          detail = "umf score range violated";
          return false;
        }
      }
    } catch (const EmptyText&) {
    }
  }

  // Eq. (7) monotonicity / bounds
  for (int i = 0; i < 10000; ++i) {
    DirectiveVector d;
    ScoreSet scores;
    const int n = uniform_int(rng, 1, 16);
    double lo = 1.0;
    double hi = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto id = static_cast<DimensionId>(k);
      at(d.values, id) = uniform(rng, 0.01, 1.0);
      d.active.insert(id);
      const double s = uniform(rng, 0.0, 1.0);
      scores[id] = {id, s, {}};
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    const double base = compute_umf_score(scores, d);
    const auto idx = static_cast<DimensionId>(uniform_int(rng, 0, n - 1));
    ScoreSet raised = scores;
    raised[idx].score = std::min(1.0, raised[idx].score + uniform(rng, 0.0, 1.0));
    if (base < lo - 1e-12 || base > hi + 1e-12 ||
        compute_umf_score(raised, d) < base - 1e-12) {
      detail = "umf aggregate invariant violated";
      return false;
    }
  }

  // Eq. (8) mixing invariants
  for (int i = 0; i < 10000; ++i) {
    const double m = uniform(rng, 0.0, 1.0);
    const double u = uniform(rng, 0.0, 1.0);
    const double alpha = uniform(rng, 0.0, 1.0);
    const double f = final_score(m, u, alpha);
    if (f < std::min(m, u) - 1e-12 || f > std::max(m, u) + 1e-12 ||
        std::fabs(final_score(m, u, 1.0) - m) > 1e-15 ||
        std::fabs(final_score(m, u, 0.0) - u) > 1e-15) {
      detail = "final score invariant violated";
      return false;
    }
  }

  detail = "divergence, directive, scorer fuzz, aggregate and mixing suites at 10k cases";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: umf_acceptance <umf-binary> <data-dir>\n";
    return 64;
  }
  const std::string umf_bin = argv[1];
  const std::string data = argv[2];

  run(1, "Table 2 divergence golden (exact decimals, < 1 s)", criterion_table2);
  run(2, "published directive vector (0.0005 per entry, unit norm, < 1 s)",
      criterion_directive);
  run(3, "activation threshold 0.1 keeps 14 of 16 dimensions", criterion_activation);
  run(4, "mixing endpoints: alpha=1 keeps baselines, alpha=0 maximizes compliance",
      criterion_alpha_endpoints);
  run(5, "metric formulas on the 341/53/45/21 fixture with the consistency flag",
      criterion_metrics_oracle);
  run(6, "kappa equals the brute-force confusion-matrix oracle", criterion_kappa);
  run(7, "synthetic word-order interventions: >=95% at alpha=0.5, 100% at alpha=0",
      criterion_intervention_property);
  run(8, "sense gate keeps the wrong-sense candidate from winning below alpha 1",
      criterion_sense_gate);
  run(9, "translate runs are byte-identical on the file-backed generator",
      [&](std::string& d) { return criterion_determinism(d, umf_bin, data); });
  run(10, "randomized property suites (10k cases per invariant)", criterion_property_suites);

  if (g_failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << g_failures << " criterion(s) failed\n";
  }
  return g_failures;
}
