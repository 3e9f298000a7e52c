#include "pauliest/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pauliest/estimation.hpp"
#include "pauliest/rng.hpp"
#include "pauliest/tomography.hpp"

namespace pauliest {

namespace {

constexpr std::uint64_t kOptimalTag = 1;
constexpr std::uint64_t kAaqptTag = 2;

std::uint64_t budget_for_bound(double counts) {
  return static_cast<std::uint64_t>(std::max(1.0, std::round(counts)));
}

std::vector<double> sorted_p_values(const ExperimentConfig& cfg) {
  std::vector<double> ps = cfg.p_values;
  std::stable_sort(ps.begin(), ps.end());
  return ps;
}

EstimatorRow run_estimator(const ExperimentConfig& cfg, bool aaqpt, double p,
                           std::size_t p_index, int multiple, Execution exec) {
  const double counts = cfg.counts * multiple;
  const std::uint64_t tag = aaqpt ? kAaqptTag : kOptimalTag;
  auto trial = [&](std::size_t t) {
    const std::uint64_t seed =
        trial_seed(cfg.seed, tag, static_cast<std::uint64_t>(multiple), p_index, t);
    return aaqpt ? aaqpt_trial(p, counts, cfg.mode, seed)
                 : optimal_dc_trial(p, counts, cfg.mode, seed);
  };

  EstimatorRow row;
  row.p_true = p;
  row.estimator = aaqpt ? "aaqpt" : "optimal";
  row.counts = counts;
  row.trials = cfg.trials;
  row.estimates = run_trials(static_cast<std::size_t>(cfg.trials), trial, exec);
  const SampleStats stats = sample_stats(row.estimates);
  row.mean = stats.mean;
  row.std = stats.std;
  row.bound = dc_std_bound(p, budget_for_bound(counts));
  return row;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (experiment == Experiment::BellProbs) {
    if (timings.empty()) throw std::invalid_argument("config: no timing configuration given");
    for (const auto& t : timings) t.validate();
    return;
  }
  if (p_values.empty()) throw std::invalid_argument("config: p list is empty");
  for (double p : p_values) require_unit_interval(p, "config");
  if (trials < 2) {
    throw std::invalid_argument("config: at least two trials are needed for a standard deviation");
  }
  if (!(counts > 0.0) || !std::isfinite(counts)) {
    throw std::invalid_argument("config: counts must be positive");
  }
  if (mode == SamplingMode::Multinomial && std::floor(counts) != counts) {
    throw std::invalid_argument("config: multinomial counts must be an integer");
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t multiple,
                         std::uint64_t p_index, std::uint64_t trial) {
  return derive_seed(master, {tag, multiple, p_index, trial});
}

double optimal_dc_trial(double p, double counts, SamplingMode mode, std::uint64_t seed) {
  const OutcomeCounts drawn = sample_counts(two_outcome_probs(p), {mode, counts, seed});
  const auto c_int = drawn[static_cast<std::size_t>(TwoOutcome::PsiMinus)];
  const auto n_ss = drawn[static_cast<std::size_t>(TwoOutcome::Rest)];
  return estimate_dc(n_ss, c_int).p_hat;
}

double aaqpt_trial(double p, double counts, SamplingMode mode, std::uint64_t seed) {
  return aaqpt_pipeline(p, SamplingConfig{mode, counts, seed}).p_fit;
}

MonteCarloReport run_montecarlo(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  if (cfg.experiment == Experiment::Compare) return run_comparison(cfg, exec);

  MonteCarloReport report;
  report.config = cfg;

  if (cfg.experiment == Experiment::BellProbs) {
    for (const auto& timing : cfg.timings) {
      const PauliProbabilities probs = timing_to_probs(timing);
      const OutcomeDistribution dist = bell_outcome_probs(probs);
      BellProbsRow row{timing, probs.values(), {}};
      for (std::size_t k = 0; k < 4; ++k) row.bell[k] = dist[k];
      report.bell_rows.push_back(row);
    }
    return report;
  }

  const bool aaqpt = cfg.experiment == Experiment::Aaqpt;
  const auto ps = sorted_p_values(cfg);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    report.rows.push_back(run_estimator(cfg, aaqpt, ps[i], i, 1, exec));
  }
  return report;
}

MonteCarloReport run_comparison(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  if (cfg.experiment != Experiment::Compare) {
    throw std::invalid_argument("run_comparison: experiment must be compare");
  }
  MonteCarloReport report;
  report.config = cfg;

  const auto ps = sorted_p_values(cfg);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EstimatorRow optimal = run_estimator(cfg, false, ps[i], i, 1, exec);
    ComparisonRow cmp;
    cmp.p_true = ps[i];
    cmp.counts = cfg.counts;
    cmp.optimal_std = optimal.std;
    report.rows.push_back(std::move(optimal));

    for (int multiple : kComparisonLadder) {
      EstimatorRow row = run_estimator(cfg, true, ps[i], i, multiple, exec);
      cmp.ladder.push_back(multiple);
      cmp.aaqpt_std.push_back(row.std);
      if (!cmp.crossover_multiple && row.std <= kCrossoverFactor * cmp.optimal_std) {
        cmp.crossover_multiple = multiple;
      }
      report.rows.push_back(std::move(row));
    }
    cmp.std_ratio = cmp.optimal_std > 0.0 ? cmp.aaqpt_std.front() / cmp.optimal_std : 0.0;
    report.comparisons.push_back(std::move(cmp));
  }
  return report;
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::BellProbs: return "bell-probs";
    case Experiment::OptimalDc: return "optimal-dc";
    case Experiment::Aaqpt: return "aaqpt";
    case Experiment::Compare: return "compare";
  }
  return "?";
}

std::string to_string(SamplingMode m) {
  return m == SamplingMode::Multinomial ? "multinomial" : "poisson";
}

Experiment parse_experiment(const std::string& s) {
  for (Experiment e : {Experiment::BellProbs, Experiment::OptimalDc, Experiment::Aaqpt,
                       Experiment::Compare}) {
    if (to_string(e) == s) return e;
  }
  throw std::invalid_argument("unknown experiment '" + s + "'");
}

SamplingMode parse_sampling_mode(const std::string& s) {
  if (s == "multinomial") return SamplingMode::Multinomial;
  if (s == "poisson") return SamplingMode::PoissonPerOutcome;
  throw std::invalid_argument("unknown sampling mode '" + s + "'");
}

}  // namespace pauliest
