#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauliest/channel.hpp"
#include "pauliest/measurement.hpp"
#include "pauliest/trial_kernels.hpp"

namespace pauliest {

inline constexpr const char* kVersionTag = "pauliest 1.0.0";

enum class Experiment { BellProbs, OptimalDc, Aaqpt, Compare };

struct ExperimentConfig {
  Experiment experiment = Experiment::OptimalDc;
  std::vector<double> p_values;
  std::vector<TimingConfig> timings;  // BellProbs only
  std::uint64_t trials = 100;
  double counts = 1600.0;  // total counts per trial
  SamplingMode mode = SamplingMode::Multinomial;
  std::uint64_t seed = 0;
  std::string output_path;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct EstimatorRow {
  double p_true = 0.0;
  std::string estimator;  // "optimal" or "aaqpt"
  double counts = 0.0;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std = 0.0;
  double bound = 0.0;  // dc_std_bound(p_true, counts)
  std::vector<double> estimates;

  friend bool operator==(const EstimatorRow&, const EstimatorRow&) = default;
};

struct ComparisonRow {
  double p_true = 0.0;
  double counts = 0.0;
  double optimal_std = 0.0;
  std::vector<int> ladder;          // budget multiples of `counts`
  std::vector<double> aaqpt_std;    // one per ladder rung
  double std_ratio = 0.0;           // aaqpt_std[0] / optimal_std
  std::optional<int> crossover_multiple;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct BellProbsRow {
  TimingConfig timing;
  std::array<double, 4> pauli{};  // p0..p3
  std::array<double, 4> bell{};   // indexed by BellLabel

  friend bool operator==(const BellProbsRow&, const BellProbsRow&) = default;
};

struct MonteCarloReport {
  std::string version = kVersionTag;
  ExperimentConfig config;
  std::vector<EstimatorRow> rows;
  std::vector<ComparisonRow> comparisons;
  std::vector<BellProbsRow> bell_rows;

  friend bool operator==(const MonteCarloReport&, const MonteCarloReport&) = default;
};

inline constexpr std::array<int, 3> kComparisonLadder = {1, 10, 100};
inline constexpr double kCrossoverFactor = 1.2;

/// One optimal-protocol trial: sample the two-outcome measurement with
/// `counts` total and return p = N_ss / (N_ss + C_int).
double optimal_dc_trial(double p, double counts, SamplingMode mode, std::uint64_t seed);

/// One AAQPT trial with `counts` total spread over the tomography settings.
double aaqpt_trial(double p, double counts, SamplingMode mode, std::uint64_t seed);

/// Seed for one trial; `tag` separates estimators, `multiple` budget rungs.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t multiple,
                         std::uint64_t p_index, std::uint64_t trial);

/// Runs the configured experiment. Rows are sorted by p-value; the result
/// does not depend on `exec`.
MonteCarloReport run_montecarlo(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

/// Equal-budget comparison: optimal std at `counts` against AAQPT std on the
/// ladder {1x, 10x, 100x}; the crossover is the smallest rung where the AAQPT
/// std is within kCrossoverFactor of the optimal one.
MonteCarloReport run_comparison(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

std::string to_string(Experiment e);
std::string to_string(SamplingMode m);
Experiment parse_experiment(const std::string& s);
SamplingMode parse_sampling_mode(const std::string& s);

}  // namespace pauliest
